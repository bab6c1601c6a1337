#pragma once

// Generators for the curve families with many rational points relative to
// the Coleman bound, each returned together with the points it is built to
// carry and the mod-p polynomial it is built to reduce to.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chabauty/curve.hpp"
#include "chabauty/sharpness.hpp"

namespace chabauty {

struct ConstructedCurve {
    HyperellipticCurve curve;
    std::uint64_t p = 0;
    std::vector<RationalPoint> expected_points;
    IntPolynomial reduction_target;  // coefficients in [0, p)
    std::vector<BigInt> b;           // y-values b_i at x = p*a_i (Cs family only)
    Classification expected_classification = Classification::PotentiallySharp;
};

enum class Sign { Plus, Minus };

/// y^2 = x^5 + 11x^4 + (11k +- 3)^2 with points (0, +-m), (-11, +-m), inf.
ConstructedCurve family_genus2(long k, Sign sign);

/// Least c with (c/p) = ((c+1)/p) = -1, for a prime p > 3.
std::uint64_t consecutive_nonresidues(std::uint64_t p);

/// Odd case, p = 2g + 1 prime:
///   y^2 = x^(2g+1) + b (a_1^2 - p^2 x) ... (a_{g-1}^2 - p^2 x)(c - x)
/// with b the least positive inverse of (a_1 ... a_{g-1})^2 mod p.
ConstructedCurve construct_odd_case(int g, const std::vector<long>& a, long c);

/// Even case, p = 2g + 3 prime:
///   y^2 = x^(2g+2) + K (a_1 - p x) ... (a_{g-1} - p x)
/// with K the representative of b*c in (-p/2, p/2], b the inverse of
/// a_1 ... a_{g-1} mod p, and c a consecutive-nonresidue start (least one
/// unless given).
ConstructedCurve construct_even_case(int g, const std::vector<long>& a, std::optional<long> c = std::nullopt);

/// Least prime p in (2g + 2, 4g + 4) with p = 3 or 5 mod 8.
std::uint64_t choose_prime(int g);

/// x^(2g+2) - x^((p-1)/2) + x^(2g+2-(p-1)/2) + 1.
IntPolynomial q_poly(int g, std::uint64_t p);

/// Replaces each monomial x^k of P by
///   x^(k - E) (x - p a_1)^(e_1) ... (x - p a_s)^(e_s),  E = sum e_i,
/// with e_i = 1 when exponents are omitted. Every monomial of P must have
/// degree > E.
IntPolynomial t_transform(const IntPolynomial& P, std::uint64_t p, const std::vector<long>& a,
                          const std::vector<int>& exponents = {});

/// c_1..c_m in [0, p) with (1 + c_1 x^l + ... + c_m x^(ml))^2 = 1 + x^l
/// mod (p, x^(s+1)), where m = floor(s / l).
std::vector<BigInt> coeff_lemma(std::uint64_t p, int l, int s);

struct ConstructionParams {
    int g = 2;
    std::uint64_t p = 0;
    std::vector<long> a;          // s distinct nonzero integers, p does not divide any
    IntPolynomial R;              // deg R <= 2g - s, may be zero
    std::vector<int> exponents;   // optional generalized transform
    int s() const { return static_cast<int>(a.size()); }
};

/// Raised when a parameter set yields a non-squarefree H_s.
class DegenerateParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// H_s = Z_s + p x (x - p a_1) ... (x - p a_s) R(x), checked against Q mod p.
ConstructedCurve build_curve_Cs(const ConstructionParams& params);

struct ClauseResult {
    std::string clause;
    bool passed = false;
    std::string detail;
};

struct ConstructionReport {
    std::vector<ClauseResult> clauses;
    SharpnessReport sharpness;
    bool passed() const;
    /// Name of the first failing clause, empty when all pass.
    std::string first_failure() const;
};

/// Mechanical check of a construction: congruence to the reduction target,
/// leading coefficient, point membership, b_i = 1 mod p, and the Coleman
/// classification at p.
ConstructionReport verify_construction(const ConstructedCurve& cc);

}  // namespace chabauty
