#pragma once

// Registry of named curves with their listed rational points and the
// values each one is expected to produce. Curves are stored in the form
// they are written down; every derived number is recomputed when checked.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chabauty/curve.hpp"
#include "chabauty/sharpness.hpp"

namespace chabauty {

struct FixtureExpectation {
    std::uint64_t p = 0;
    std::optional<std::uint64_t> n_fp;  // absent when only the classification is pinned
    std::uint64_t coleman_bound = 0;    // 0 = not pinned
    Classification classification = Classification::Neither;
};

struct Fixture {
    std::string id;
    std::string description;
    HyperellipticCurve curve;
    std::vector<RationalPoint> known_points;
    /// Known points are claimed to be all of C(Q), so a search must
    /// return exactly them; otherwise the search must contain them.
    bool complete = false;
    long search_height = 0;  // 0 = no search check
    std::optional<FixtureExpectation> expected;
    /// Only exercised by the prime scanner.
    bool optional = false;
};

/// Every registered id, in registry order.
std::vector<std::string> fixture_ids();

/// Throws std::invalid_argument for an unknown id.
Fixture load_fixture(const std::string& id);

std::vector<Fixture> all_fixtures();

/// The two sign families y^2 = x^5 + 11x^4 + (11k +- 3)^2 with ranks below 2.
const std::vector<long>& family_plus_ks();
const std::vector<long>& family_minus_ks();

/// Defining polynomials of the split descent example, quintic first.
IntPolynomial descent_f1();
IntPolynomial descent_f2();

}  // namespace chabauty
