#pragma once

// Hyperelliptic models y^2 = f(x): reduction, point counts over F_p and
// F_{p^2}, and height-bounded rational point search.
//
// The counting and search kernels come in two flavours. The functions in
// namespace chabauty are OpenMP-parallel; chabauty::serial holds the
// single-threaded reference versions they are tested against.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chabauty/exactmath.hpp"

namespace chabauty {

class HyperellipticCurve {
public:
    /// Throws std::invalid_argument unless deg f >= 5 and f is squarefree.
    explicit HyperellipticCurve(IntPolynomial f);

    const IntPolynomial& f() const { return f_; }
    int degree() const { return f_.degree(); }
    int genus() const { return (degree() - 1) / 2; }
    bool odd_degree() const { return degree() % 2 == 1; }
    const BigInt& discriminant() const { return disc_; }
    /// Even-degree model whose leading coefficient is a rational square.
    bool has_rational_infinity_pair() const;

    friend bool operator==(const HyperellipticCurve& a, const HyperellipticCurve& b) { return a.f_ == b.f_; }

private:
    IntPolynomial f_;
    BigInt disc_;
};

/// floor((deg f - 1) / 2).
int genus(const HyperellipticCurve& curve);

class RationalPoint {
public:
    enum class Kind { Affine, InfinityOdd, InfinityPlus, InfinityMinus };

    static RationalPoint affine(BigRational x, BigRational y);
    static RationalPoint infinity_odd() { return RationalPoint(Kind::InfinityOdd); }
    static RationalPoint infinity_plus() { return RationalPoint(Kind::InfinityPlus); }
    static RationalPoint infinity_minus() { return RationalPoint(Kind::InfinityMinus); }

    Kind kind() const { return kind_; }
    bool is_affine() const { return kind_ == Kind::Affine; }
    const BigRational& x() const { return x_; }
    const BigRational& y() const { return y_; }

    /// The image under (x, y) -> (x, -y); swaps the two points at infinity.
    RationalPoint involution() const;

    /// "(4/121, 32/161051)", "inf", "inf+", "inf-".
    std::string to_string() const;

    friend bool operator==(const RationalPoint& a, const RationalPoint& b);
    /// Canonical report order: infinity points first, then by the
    /// denominator of x, numerator of x, and y nonnegative before negative.
    friend bool operator<(const RationalPoint& a, const RationalPoint& b);

private:
    explicit RationalPoint(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Affine;
    BigRational x_;
    BigRational y_;
};

/// Exact membership check of a point on the model.
bool verify_point(const HyperellipticCurve& curve, const RationalPoint& point);

/// Sufficient model-level good reduction test: p odd, p does not divide
/// lc(f), and p does not divide disc(f).
bool good_reduction(const HyperellipticCurve& curve, std::uint64_t p);

struct FpPointSet {
    std::uint64_t p = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> affine;  // filled only when listed
    int infinity_count = 0;
    std::uint64_t total = 0;
};

/// Number of points at infinity over F_p on the reduced model.
int infinity_count_fp(const HyperellipticCurve& curve, std::uint64_t p);

/// #C(F_p) with an optional listing of the affine points. Throws
/// std::domain_error at a prime of bad reduction.
FpPointSet count_points_fp(const HyperellipticCurve& curve, std::uint64_t p, bool list_points = false);

/// #C(F_{p^2}) by enumeration of F_{p^2}; requires p^2 <= 10^6.
std::uint64_t count_points_fp2(const HyperellipticCurve& curve, std::uint64_t p);

/// All rational points with x = u/w, |u| <= height, 1 <= w <= height,
/// plus the rational points at infinity, in canonical order.
std::vector<RationalPoint> search_rational_points(const HyperellipticCurve& curve, long height);

namespace serial {

FpPointSet count_points_fp(const HyperellipticCurve& curve, std::uint64_t p, bool list_points = false);
std::uint64_t count_points_fp2(const HyperellipticCurve& curve, std::uint64_t p);
std::vector<RationalPoint> search_rational_points(const HyperellipticCurve& curve, long height);

}  // namespace serial

/// The rational points at infinity of the model.
std::vector<RationalPoint> rational_points_at_infinity(const HyperellipticCurve& curve);

}  // namespace chabauty
