#pragma once

// Two-cover descent for y^2 = f1(x) f2(x).
//
// Every rational point with f1(x) != 0 (or f2(x) != 0) lifts to exactly one
// twist C_d : f1(x) = d z^2, f2(x) = d t^2, and for monic coprime f1, f2
// the squarefree d is supported on the primes dividing Res(f1, f2).

#include <cstdint>
#include <vector>

#include "chabauty/curve.hpp"
#include "chabauty/errors.hpp"

namespace chabauty {

class DescentProblem {
public:
    /// f1, f2 monic, nonconstant, coprime, at least one of even degree.
    DescentProblem(IntPolynomial f1, IntPolynomial f2);

    const IntPolynomial& f1() const { return f1_; }
    const IntPolynomial& f2() const { return f2_; }
    const BigInt& resultant() const { return res_; }
    /// y^2 = f1 * f2.
    HyperellipticCurve curve() const;

private:
    IntPolynomial f1_;
    IntPolynomial f2_;
    BigInt res_;
};

/// The twist C_d : f1(x) = d z^2, f2(x) = d t^2.
struct Cover {
    IntPolynomial f1;
    IntPolynomial f2;
    BigInt d;
};

/// Throws std::invalid_argument unless d is squarefree and nonzero.
Cover make_cover(const DescentProblem& problem, const BigInt& d);

/// All squarefree d supported on rad(R), both signs, ordered by |d| then sign.
std::vector<BigInt> candidate_twists(const DescentProblem& problem);

/// False when the real system d f1(x) >= 0, d f2(x) >= 0 has no solution,
/// decided exactly from isolated real roots of f1 and f2.
bool real_filter(const Cover& cover);

/// False when no x in F_q makes d f1(x) and d f2(x) both squares (0
/// allowed) and no q-adically large x can work either. Requires q odd and
/// prime; sound, i.e. never excludes a cover with a Q_q-point.
bool local_filter(const Cover& cover, std::uint64_t q);

/// (x, z, t) -> (x, d z t). Throws std::invalid_argument when (x, z, t)
/// is not on the cover.
RationalPoint pushforward(const Cover& cover, const BigRational& x, const BigRational& z, const BigRational& t);

/// A point of C with the twist it lifts to. Points at infinity lift to the
/// twist of the square class of lc(f_even), i.e. d = 1 for monic f1, f2,
/// and carry no affine (z, t).
struct RoutedPoint {
    RationalPoint point;
    BigInt d;
    BigRational z;
    BigRational t;
    bool at_infinity = false;
};

struct DescentReport {
    BigInt resultant;
    BigInt radical;
    std::vector<BigInt> candidates;
    std::vector<BigInt> excluded_real;
    /// Each excluded d with the prime that excluded it.
    std::vector<std::pair<BigInt, std::uint64_t>> excluded_local;
    /// Covers no filter removed; each is an open obligation unless it
    /// carries a known point.
    std::vector<BigInt> surviving;
    std::vector<RoutedPoint> routed_points;
    std::vector<RationalPoint> points_at_infinity;
};

/// Routes every point of height <= H on y^2 = f1 f2, and the points at
/// infinity, through its twist and checks the push-forward. Throws VerificationError when a point's twist
/// is not a candidate.
std::vector<RoutedPoint> covering_check(const DescentProblem& problem, long height);

/// Candidates, real and local filters for odd primes q <= local_bound, and
/// the covering check at the given height.
DescentReport run_descent(const DescentProblem& problem, long height, std::uint64_t local_bound);

}  // namespace chabauty
