#pragma once

// Exact real root isolation with Sturm sequences over Q.

#include <vector>

#include "chabauty/exactmath.hpp"

namespace chabauty {

/// Open interval (lo, hi) with rational endpoints that are not roots.
struct RootInterval {
    BigRational lo;
    BigRational hi;
};

class SturmSequence {
public:
    /// f must be nonzero. Repeated roots are counted once.
    explicit SturmSequence(const IntPolynomial& f);

    /// Number of sign changes of the sequence at x.
    int sign_changes(const BigRational& x) const;
    /// Distinct real roots in (a, b) for a < b, neither a root of f.
    int count_roots(const BigRational& a, const BigRational& b) const;
    int sign_at(const BigRational& x) const;

private:
    std::vector<std::vector<BigRational>> seq_;  // ascending coefficients
};

/// Sign of f at x: -1, 0 or 1.
int sign_at(const IntPolynomial& f, const BigRational& x);

/// Disjoint isolating intervals for the distinct real roots of f, ascending.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& f);

/// Halves the interval until its width is at most `width`, keeping the root.
RootInterval refine_root(const SturmSequence& seq, RootInterval iv, const BigRational& width);

}  // namespace chabauty
