#pragma once

// Frobenius polynomials of genus-2 curves from point counts, and a
// sufficient test for absolute simplicity of the Jacobian over F_p.
//
// For a good prime p with N1 = #C(F_p) and N2 = #C(F_{p^2}):
//   P(T) = T^4 + c1 T^3 + c2 T^2 + p c1 T + p^2,
//   c1 = N1 - p - 1,  c2 = (N2 - p^2 - 1 + c1^2) / 2.
//
// The Newton polygon of P has slopes 0, 0, 1, 1 exactly when p does not
// divide c2, so that is the ordinary test.
//
// The simplicity test is the Howe-Zhu criterion specialised to dimension 2.
// There the real subfield K+ = Q(pi + p/pi) is quadratic, generated by a root of
// T^2 + c1 T + (c2 - 2p). A real quadratic field is the maximal real subfield
// of a cyclotomic field Q(zeta_n) iff phi(n) = 4, i.e. n in {5, 8, 10, 12},
// giving Q(sqrt 5), Q(sqrt 2), Q(sqrt 3). The test never concludes "not
// simple".

#include <cstdint>
#include <optional>
#include <string>

#include "chabauty/curve.hpp"

namespace chabauty {

struct WeilPolynomial {
    std::uint64_t p = 0;
    BigInt c1;
    BigInt c2;

    /// Coefficients of T^0..T^4.
    IntPolynomial polynomial() const;
    /// Exact Weil bounds: c1^2 <= 16p and every root of the real quadratic
    /// T^2 + c1 T + c2 - 2p is real and lies in [-2 sqrt p, 2 sqrt p].
    bool satisfies_weil_bounds() const;
    /// N1 = p + 1 + c1 and N2 = p^2 + 1 - c1^2 + 2 c2.
    BigInt n1() const;
    BigInt n2() const;
};

/// Requires genus 2, good reduction at p and p^2 <= 10^6. Throws
/// VerificationError when the counts give an odd 2 c2 or break the Weil bounds.
WeilPolynomial weil_poly_genus2(const HyperellipticCurve& curve, std::uint64_t p);

bool is_ordinary(const WeilPolynomial& w);

/// No rational root and no splitting into two monic integer quadratics.
bool quartic_irreducible(const WeilPolynomial& w);

/// Squarefree parts d for which Q(sqrt d) is the maximal real subfield of
/// some cyclotomic field.
inline constexpr long kCyclotomicRealQuadratics[] = {2, 3, 5};

struct SimplicityVerdict {
    enum class Kind { AbsolutelySimple, Inconclusive };
    Kind kind = Kind::Inconclusive;
    /// Empty for AbsolutelySimple, otherwise the first clause that failed.
    std::string clause;
    /// The criterion is stated for n > 2 and used here with n = 2.
    std::string note;
    bool absolutely_simple() const { return kind == Kind::AbsolutelySimple; }
};

/// Clauses in order: irreducible quartic, ordinary, condition (1) c1 != 0,
/// condition (3) on K+.
SimplicityVerdict hz_check(const WeilPolynomial& w);

struct SimplicityWitness {
    std::uint64_t p = 0;
    WeilPolynomial weil;
};

/// Least good prime p <= p_max with an AbsolutelySimple verdict.
/// Requires genus 2 and p_max <= 1000.
std::optional<SimplicityWitness> find_simplicity_prime(const HyperellipticCurve& curve, std::uint64_t p_max);

}  // namespace chabauty
