#pragma once

// End-to-end regression run over the fixture registry: every listed point,
// reduction count, bound and classification, the generators that produce
// the constructed curves, the descent example, the prime chain and the
// simplicity certificates.

#include <string>
#include <vector>

namespace chabauty {

struct SuiteCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteOptions {
    /// Adds 1 to the constant term of every fixture curve before checking.
    /// Used as a negative control: the suite must then fail.
    bool perturb = false;
    /// Simplicity certificates for every family member, not just k = 0, 1.
    bool full_simplicity_sweep = false;
};

std::vector<SuiteCheck> run_fixture_suite(const SuiteOptions& options = {});

bool all_passed(const std::vector<SuiteCheck>& checks);

}  // namespace chabauty
