#include "chabauty/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "chabauty/finitefield.hpp"

namespace chabauty {

HyperellipticCurve::HyperellipticCurve(IntPolynomial f) : f_(std::move(f)) {
    if (f_.degree() < 5) throw std::invalid_argument("hyperelliptic model needs deg f >= 5, got " + std::to_string(f_.degree()));
    disc_ = chabauty::discriminant(f_);
    if (disc_ == 0) throw std::invalid_argument("f is not squarefree (disc(f) = 0)");
}

bool HyperellipticCurve::has_rational_infinity_pair() const {
    return !odd_degree() && is_perfect_square(f_.leading());
}

int genus(const HyperellipticCurve& curve) { return curve.genus(); }

RationalPoint RationalPoint::affine(BigRational x, BigRational y) {
    RationalPoint p(Kind::Affine);
    p.x_ = std::move(x);
    p.y_ = std::move(y);
    return p;
}

RationalPoint RationalPoint::involution() const {
    switch (kind_) {
        case Kind::Affine: return affine(x_, -y_);
        case Kind::InfinityPlus: return infinity_minus();
        case Kind::InfinityMinus: return infinity_plus();
        case Kind::InfinityOdd: break;
    }
    return *this;
}

std::string RationalPoint::to_string() const {
    switch (kind_) {
        case Kind::InfinityOdd: return "inf";
        case Kind::InfinityPlus: return "inf+";
        case Kind::InfinityMinus: return "inf-";
        case Kind::Affine: break;
    }
    return "(" + x_.get_str() + ", " + y_.get_str() + ")";
}

bool operator==(const RationalPoint& a, const RationalPoint& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ != RationalPoint::Kind::Affine || (a.x_ == b.x_ && a.y_ == b.y_);
}

bool operator<(const RationalPoint& a, const RationalPoint& b) {
    if (a.kind_ != b.kind_) {
        // Kind enumerators list affine first; infinity sorts ahead of it.
        auto rank = [](RationalPoint::Kind k) { return k == RationalPoint::Kind::Affine ? 4 : static_cast<int>(k); };
        return rank(a.kind_) < rank(b.kind_);
    }
    if (!a.is_affine()) return false;
    if (a.x_.get_den() != b.x_.get_den()) return a.x_.get_den() < b.x_.get_den();
    if (a.x_.get_num() != b.x_.get_num()) return a.x_.get_num() < b.x_.get_num();
    const bool a_neg = a.y_ < 0;
    const bool b_neg = b.y_ < 0;
    if (a_neg != b_neg) return !a_neg;
    return a_neg ? a.y_ > b.y_ : a.y_ < b.y_;
}

bool verify_point(const HyperellipticCurve& curve, const RationalPoint& point) {
    switch (point.kind()) {
        case RationalPoint::Kind::Affine: return point.y() * point.y() == curve.f()(point.x());
        case RationalPoint::Kind::InfinityOdd: return curve.odd_degree();
        case RationalPoint::Kind::InfinityPlus:
        case RationalPoint::Kind::InfinityMinus: return curve.has_rational_infinity_pair();
    }
    return false;
}

bool good_reduction(const HyperellipticCurve& curve, std::uint64_t p) {
    if (p % 2 == 0 || !is_prime(p)) return false;
    return mod_u64(curve.f().leading(), p) != 0 && mod_u64(curve.discriminant(), p) != 0;
}

int infinity_count_fp(const HyperellipticCurve& curve, std::uint64_t p) {
    if (curve.odd_degree()) return 1;
    return 1 + legendre(curve.f().leading(), p);
}

std::vector<RationalPoint> rational_points_at_infinity(const HyperellipticCurve& curve) {
    if (curve.odd_degree()) return {RationalPoint::infinity_odd()};
    if (curve.has_rational_infinity_pair()) return {RationalPoint::infinity_plus(), RationalPoint::infinity_minus()};
    return {};
}

namespace {

void require_good(const HyperellipticCurve& curve, std::uint64_t p) {
    if (!good_reduction(curve, p)) throw std::domain_error("bad reduction at p = " + std::to_string(p));
}

void require_fp2_range(std::uint64_t p) {
    if (p > 1000) throw std::invalid_argument("F_p^2 enumeration limited to p^2 <= 10^6");
}

void list_affine(const FpPolynomial& f, const SquaresTable& squares, std::uint64_t x,
                 std::vector<std::pair<std::uint64_t, std::uint64_t>>& out) {
    const std::uint64_t p = f.modulus();
    const std::uint64_t v = f(x);
    if (v == 0) {
        out.emplace_back(x, 0);
        return;
    }
    if (!squares.contains(v)) return;
    for (std::uint64_t y = 1; y <= p / 2; ++y) {
        if (mul_mod(y, y, p) == v) {
            out.emplace_back(x, y);
            out.emplace_back(x, p - y);
            return;
        }
    }
}

// Rational points with x-denominator w, in canonical order.
std::vector<RationalPoint> points_with_denominator(const IntPolynomial& f, long w, long height) {
    std::vector<RationalPoint> row;
    const BigInt W(w);
    BigInt wd;
    mpz_pow_ui(wd.get_mpz_t(), W.get_mpz_t(), static_cast<unsigned long>(f.degree()));
    for (long u = -height; u <= height; ++u) {
        if (std::gcd(u, w) != 1) continue;
        BigRational value = make_rational(f.homogeneous(BigInt(u), W), wd);
        auto root = rational_square_root(value);
        if (!root) continue;
        BigRational x = make_rational(BigInt(u), W);
        row.push_back(RationalPoint::affine(x, *root));
        if (*root != 0) row.push_back(RationalPoint::affine(x, -*root));
    }
    return row;
}

std::vector<RationalPoint> assemble(const HyperellipticCurve& curve, std::vector<std::vector<RationalPoint>>& rows) {
    std::vector<RationalPoint> out = rational_points_at_infinity(curve);
    for (auto& row : rows) std::move(row.begin(), row.end(), std::back_inserter(out));
    return out;
}

}  // namespace

namespace serial {

FpPointSet count_points_fp(const HyperellipticCurve& curve, std::uint64_t p, bool list_points) {
    require_good(curve, p);
    const FpPolynomial f(curve.f(), p);
    const SquaresTable squares(p);
    FpPointSet out;
    out.p = p;
    std::uint64_t affine = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t v = f(x);
        affine += v == 0 ? 1 : (squares.contains(v) ? 2 : 0);
        if (list_points) list_affine(f, squares, x, out.affine);
    }
    out.infinity_count = infinity_count_fp(curve, p);
    out.total = affine + static_cast<std::uint64_t>(out.infinity_count);
    return out;
}

std::uint64_t count_points_fp2(const HyperellipticCurve& curve, std::uint64_t p) {
    require_good(curve, p);
    require_fp2_range(p);
    const Fp2Field field(p);
    const Fp2SquareTest is_square(field);
    const FpPolynomial f(curve.f(), p);
    std::uint64_t affine = 0;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            const Fp2Element v = field.eval(f, {a, b});
            if (v.a == 0 && v.b == 0)
                affine += 1;
            else if (is_square(v))
                affine += 2;
        }
    // Every element of F_p is a square in F_{p^2}.
    return affine + (curve.odd_degree() ? 1 : 2);
}

std::vector<RationalPoint> search_rational_points(const HyperellipticCurve& curve, long height) {
    std::vector<std::vector<RationalPoint>> rows;
    for (long w = 1; w <= height; ++w) rows.push_back(points_with_denominator(curve.f(), w, height));
    return assemble(curve, rows);
}

}  // namespace serial

FpPointSet count_points_fp(const HyperellipticCurve& curve, std::uint64_t p, bool list_points) {
    require_good(curve, p);
    const FpPolynomial f(curve.f(), p);
    const SquaresTable squares(p);
    FpPointSet out;
    out.p = p;
    if (list_points) {
        // Listing is O(p) per square value; keep it ordered and serial.
        for (std::uint64_t x = 0; x < p; ++x) list_affine(f, squares, x, out.affine);
    }
    std::uint64_t affine = 0;
    const auto n = static_cast<std::int64_t>(p);
#pragma omp parallel for reduction(+ : affine) schedule(static)
    for (std::int64_t x = 0; x < n; ++x) {
        const std::uint64_t v = f(static_cast<std::uint64_t>(x));
        affine += v == 0 ? 1 : (squares.contains(v) ? 2 : 0);
    }
    out.infinity_count = infinity_count_fp(curve, p);
    out.total = affine + static_cast<std::uint64_t>(out.infinity_count);
    return out;
}

std::uint64_t count_points_fp2(const HyperellipticCurve& curve, std::uint64_t p) {
    require_good(curve, p);
    require_fp2_range(p);
    const Fp2Field field(p);
    const Fp2SquareTest is_square(field);
    const FpPolynomial f(curve.f(), p);
    std::uint64_t affine = 0;
    const auto n = static_cast<std::int64_t>(p * p);
#pragma omp parallel for reduction(+ : affine) schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        const Fp2Element v = field.eval(f, {idx / p, idx % p});
        if (v.a == 0 && v.b == 0)
            affine += 1;
        else if (is_square(v))
            affine += 2;
    }
    return affine + (curve.odd_degree() ? 1 : 2);
}

std::vector<RationalPoint> search_rational_points(const HyperellipticCurve& curve, long height) {
    std::vector<std::vector<RationalPoint>> rows(static_cast<std::size_t>(std::max(height, 0L)));
#pragma omp parallel for schedule(dynamic)
    for (long w = 1; w <= height; ++w)
        rows[static_cast<std::size_t>(w - 1)] = points_with_denominator(curve.f(), w, height);
    return assemble(curve, rows);
}

}  // namespace chabauty
