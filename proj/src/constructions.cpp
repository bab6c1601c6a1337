#include "chabauty/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "chabauty/finitefield.hpp"

namespace chabauty {

namespace {

BigInt big(long v) { return BigInt(v); }

BigInt pow_big(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

std::uint64_t residue(long v, std::uint64_t p) { return mod_u64(big(v), p); }

void require_distinct_units(const std::vector<long>& a, std::uint64_t p, bool by_absolute_value) {
    std::set<long> seen;
    for (long ai : a) {
        if (ai == 0) throw std::invalid_argument("a_i must be nonzero");
        if (residue(ai, p) == 0) throw std::invalid_argument("a_i = " + std::to_string(ai) + " is divisible by p");
        const long key = by_absolute_value ? std::labs(ai) : ai;
        if (!seen.insert(key).second)
            throw std::invalid_argument(by_absolute_value ? "a_i must have distinct absolute values"
                                                          : "a_i must be distinct");
    }
}

std::vector<RationalPoint> with_involution(const BigRational& x, const BigRational& y) {
    if (y == 0) return {RationalPoint::affine(x, y)};
    return {RationalPoint::affine(x, y), RationalPoint::affine(x, -y)};
}

void append(std::vector<RationalPoint>& out, std::vector<RationalPoint> more) {
    std::move(more.begin(), more.end(), std::back_inserter(out));
}

Classification expected_for(std::size_t points, std::uint64_t n_fp, int g) {
    const std::uint64_t bound = n_fp + 2 * static_cast<std::uint64_t>(g) - 2;
    if (points > bound) return Classification::Excessive;
    if (points == bound) return Classification::PotentiallySharp;
    return Classification::Neither;
}

}  // namespace

ConstructedCurve family_genus2(long k, Sign sign) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    const BigInt m = 11 * big(k) + (sign == Sign::Plus ? 3 : -3);
    const BigInt y = abs(m);
    IntPolynomial f = IntPolynomial::monomial(1, 5) + IntPolynomial::monomial(11, 4) + IntPolynomial::constant(m * m);
    ConstructedCurve cc{HyperellipticCurve(std::move(f)), 11, {}, IntPolynomial{9, 0, 0, 0, 0, 1}, {}, {}};
    cc.expected_points.push_back(RationalPoint::infinity_odd());
    append(cc.expected_points, with_involution(0, y));
    append(cc.expected_points, with_involution(-11, y));
    cc.expected_classification = Classification::PotentiallySharp;
    return cc;
}

std::uint64_t consecutive_nonresidues(std::uint64_t p) {
    if (p <= 3) throw std::invalid_argument("need a prime p > 3");
    for (std::uint64_t c = 2; c + 1 < p; ++c)
        if (legendre(c, p) == -1 && legendre(c + 1, p) == -1) return c;
    throw std::logic_error("no consecutive nonresidues mod " + std::to_string(p));
}

ConstructedCurve construct_odd_case(int g, const std::vector<long>& a, long c) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    const auto p = static_cast<std::uint64_t>(2 * g + 1);
    if (!is_prime(p)) throw std::invalid_argument("2g + 1 = " + std::to_string(p) + " is not prime");
    if (a.size() != static_cast<std::size_t>(g - 1)) throw std::invalid_argument("need g - 1 values a_i");
    require_distinct_units(a, p, true);
    if (legendre(big(c), p) != -1) throw std::invalid_argument("c must be a quadratic nonresidue mod p");

    std::uint64_t prod_sq = 1;
    for (long ai : a) prod_sq = mul_mod(prod_sq, mul_mod(residue(ai, p), residue(ai, p), p), p);
    const BigInt b(static_cast<unsigned long>(inv_mod(prod_sq, p)));

    const BigInt P(static_cast<unsigned long>(p));
    IntPolynomial tail = IntPolynomial::constant(b);
    for (long ai : a) tail *= IntPolynomial(std::vector<BigInt>{big(ai) * big(ai), -P * P});
    tail *= IntPolynomial(std::vector<BigInt>{big(c), BigInt(-1)});
    IntPolynomial f = IntPolynomial::monomial(1, 2 * g + 1) + tail;

    IntPolynomial target = poly_mod_p(IntPolynomial::monomial(1, 2 * g + 1) - IntPolynomial::x() +
                                          IntPolynomial::constant(big(c)),
                                      p);
    ConstructedCurve cc{HyperellipticCurve(std::move(f)), p, {}, std::move(target), {}, {}};
    cc.expected_points.push_back(RationalPoint::infinity_odd());
    for (long ai : a) {
        const BigInt A = big(ai);
        append(cc.expected_points,
               with_involution(make_rational(A * A, P * P),
                               make_rational(pow_big(abs(A), 2UL * g + 1), pow_big(P, 2UL * g + 1))));
    }
    cc.expected_classification = expected_for(cc.expected_points.size(), 1, g);
    return cc;
}

ConstructedCurve construct_even_case(int g, const std::vector<long>& a, std::optional<long> c) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    const auto p = static_cast<std::uint64_t>(2 * g + 3);
    if (!is_prime(p)) throw std::invalid_argument("2g + 3 = " + std::to_string(p) + " is not prime");
    if (a.size() != static_cast<std::size_t>(g - 1)) throw std::invalid_argument("need g - 1 values a_i");
    require_distinct_units(a, p, false);

    long cv = c ? *c : static_cast<long>(consecutive_nonresidues(p));
    if (legendre(big(cv), p) != -1 || legendre(big(cv + 1), p) != -1)
        throw std::invalid_argument("c and c + 1 must both be quadratic nonresidues mod p");

    std::uint64_t prod = 1;
    for (long ai : a) prod = mul_mod(prod, residue(ai, p), p);
    const std::uint64_t bc = mul_mod(inv_mod(prod, p), residue(cv, p), p);
    const long K = bc > p / 2 ? static_cast<long>(bc) - static_cast<long>(p) : static_cast<long>(bc);

    const BigInt P(static_cast<unsigned long>(p));
    IntPolynomial tail = IntPolynomial::constant(big(K));
    for (long ai : a) tail *= IntPolynomial(std::vector<BigInt>{big(ai), -P});
    IntPolynomial f = IntPolynomial::monomial(1, 2 * g + 2) + tail;

    IntPolynomial target = poly_mod_p(IntPolynomial::monomial(1, 2 * g + 2) + IntPolynomial::constant(big(cv)), p);
    ConstructedCurve cc{HyperellipticCurve(std::move(f)), p, {}, std::move(target), {}, {}};
    cc.expected_points.push_back(RationalPoint::infinity_plus());
    cc.expected_points.push_back(RationalPoint::infinity_minus());
    for (long ai : a) {
        const BigInt A = big(ai);
        const BigInt num = pow_big(A, static_cast<unsigned long>(g) + 1);
        append(cc.expected_points,
               with_involution(make_rational(A, P), make_rational(abs(num), pow_big(P, static_cast<unsigned long>(g) + 1))));
    }
    cc.expected_classification = expected_for(cc.expected_points.size(), 2, g);
    return cc;
}

std::uint64_t choose_prime(int g) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    const auto lo = static_cast<std::uint64_t>(2 * g + 2);
    const auto hi = static_cast<std::uint64_t>(4 * g + 4);
    for (std::uint64_t p = lo + 1; p < hi; ++p)
        if ((p % 8 == 3 || p % 8 == 5) && is_prime(p)) return p;
    throw std::logic_error("no prime = 3, 5 mod 8 in (2g+2, 4g+4)");
}

namespace {

void require_prime_window(int g, std::uint64_t p) {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    const auto gg = static_cast<std::uint64_t>(g);
    if (!is_prime(p) || p <= 2 * gg + 2 || p >= 4 * gg + 4)
        throw std::invalid_argument("p must be a prime in (2g + 2, 4g + 4)");
}

}  // namespace

IntPolynomial q_poly(int g, std::uint64_t p) {
    require_prime_window(g, p);
    const int half = static_cast<int>((p - 1) / 2);
    const int l = 2 * g + 2 - half;
    return IntPolynomial::monomial(1, 2 * g + 2) - IntPolynomial::monomial(1, half) + IntPolynomial::monomial(1, l) +
           IntPolynomial::constant(1);
}

IntPolynomial t_transform(const IntPolynomial& P, std::uint64_t p, const std::vector<long>& a,
                          const std::vector<int>& exponents) {
    if (!exponents.empty() && exponents.size() != a.size())
        throw std::invalid_argument("exponent list must match the a_i");
    IntPolynomial factor = IntPolynomial::constant(1);
    int shift = 0;
    const BigInt Pp(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int e = exponents.empty() ? 1 : exponents[i];
        if (e < 1) throw std::invalid_argument("exponents must be positive");
        factor *= IntPolynomial(std::vector<BigInt>{-Pp * a[i], BigInt(1)}).pow(static_cast<unsigned>(e));
        shift += e;
    }
    IntPolynomial out;
    for (int k = 0; k <= P.degree(); ++k) {
        const BigInt c = P.coeff(k);
        if (c == 0) continue;
        if (k <= shift)
            throw std::invalid_argument("t-transform needs every monomial of degree > " + std::to_string(shift) +
                                        ", found x^" + std::to_string(k));
        out += IntPolynomial::monomial(c, k - shift) * factor;
    }
    return out;
}

std::vector<BigInt> coeff_lemma(std::uint64_t p, int l, int s) {
    if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
    if (l < 1 || s < 0) throw std::invalid_argument("need l >= 1 and s >= 0");
    const int m = s / l;
    // Truncated square root of 1 + y over F_p: 2 c_j + sum_{i=1}^{j-1} c_i c_{j-i} = [j == 1].
    const std::uint64_t half = (p + 1) / 2;
    std::vector<std::uint64_t> c(static_cast<std::size_t>(m) + 1, 0);
    for (int j = 1; j <= m; ++j) {
        std::uint64_t sj = 0;
        for (int i = 1; i < j; ++i) sj = (sj + mul_mod(c[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j - i)], p)) % p;
        const std::uint64_t rhs = ((j == 1 ? 1 : 0) + p - sj) % p;
        c[static_cast<std::size_t>(j)] = mul_mod(rhs, half, p);
    }
    std::vector<BigInt> out;
    for (int j = 1; j <= m; ++j) out.emplace_back(static_cast<unsigned long>(c[static_cast<std::size_t>(j)]));
    return out;
}

ConstructedCurve build_curve_Cs(const ConstructionParams& params) {
    const int g = params.g;
    const std::uint64_t p = params.p;
    const int s = params.s();
    require_prime_window(g, p);
    if (p % 8 != 3 && p % 8 != 5) throw std::invalid_argument("p must be 3 or 5 mod 8");
    if (s < 1 || s > g) throw std::invalid_argument("need 1 <= s <= g");
    require_distinct_units(params.a, p, false);
    if (params.R.degree() > 2 * g - s) throw std::invalid_argument("deg R must be at most 2g - s");

    const BigInt P(static_cast<unsigned long>(p));
    const int half = static_cast<int>((p - 1) / 2);
    const int l = 2 * g + 2 - half;
    const IntPolynomial top = IntPolynomial::monomial(1, 2 * g + 2) - IntPolynomial::monomial(1, half);

    std::vector<BigInt> c;
    IntPolynomial Z;
    if (l > s) {
        Z = t_transform(top + IntPolynomial::monomial(1, l), p, params.a, params.exponents) +
            IntPolynomial::constant(1);
    } else {
        c = coeff_lemma(p, l, s);
        IntPolynomial root = IntPolynomial::constant(1);
        for (std::size_t j = 0; j < c.size(); ++j) root += IntPolynomial::monomial(c[j], static_cast<int>(j + 1) * l);
        const IntPolynomial square = root * root;
        std::vector<BigInt> low;
        for (int k = 0; k <= std::min(s, square.degree()); ++k) low.push_back(square.coeff(k));
        const IntPolynomial L(std::move(low));
        const IntPolynomial G = square - L;  // every monomial of degree > s
        Z = t_transform(top - G, p, params.a, params.exponents) + G + L;
    }

    IntPolynomial vanishing = IntPolynomial::x() * P;
    for (long ai : params.a) vanishing *= IntPolynomial(std::vector<BigInt>{-P * ai, BigInt(1)});
    IntPolynomial H = Z + vanishing * params.R;

    const IntPolynomial Q = q_poly(g, p);
    if (!H.is_monic() || H.degree() != 2 * g + 2) throw std::logic_error("H_s is not monic of degree 2g + 2");
    if (!congruent_mod(H, Q, P)) throw std::logic_error("H_s is not congruent to Q mod p");

    ConstructedCurve cc{[&] {
                            try {
                                return HyperellipticCurve(H);
                            } catch (const std::invalid_argument&) {
                                throw DegenerateParameters("parameters give a non-squarefree H_s");
                            }
                        }(),
                        p,
                        {},
                        poly_mod_p(Q, p),
                        {},
                        {}};
    cc.expected_points = {RationalPoint::infinity_plus(), RationalPoint::infinity_minus()};
    append(cc.expected_points, with_involution(0, 1));
    for (long ai : params.a) {
        const BigInt x = P * ai;
        BigInt bi = 1;
        for (std::size_t j = 0; j < c.size(); ++j) bi += c[j] * pow_big(x, (j + 1) * static_cast<unsigned long>(l));
        if (H(x) != bi * bi) throw std::logic_error("H_s(p a_i) != b_i^2");
        cc.b.push_back(bi);
        append(cc.expected_points, with_involution(BigRational(x), BigRational(bi)));
    }
    if (H(BigInt(0)) != 1) throw std::logic_error("H_s(0) != 1");
    cc.expected_classification = expected_for(cc.expected_points.size(), 4, g);
    return cc;
}

bool ConstructionReport::passed() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseResult& c) { return c.passed; });
}

std::string ConstructionReport::first_failure() const {
    for (const auto& c : clauses)
        if (!c.passed) return c.clause;
    return {};
}

ConstructionReport verify_construction(const ConstructedCurve& cc) {
    ConstructionReport rep;
    const auto& f = cc.curve.f();
    const BigInt P(static_cast<unsigned long>(cc.p));

    rep.clauses.push_back({"congruence", congruent_mod(f, cc.reduction_target, P),
                           "f mod p vs " + cc.reduction_target.to_string()});

    const BigInt& lc = f.leading();
    const bool lead_ok = is_perfect_square(lc) && mod_u64(lc, cc.p) == 1;
    rep.clauses.push_back({"leading", lead_ok, "lc(f) = " + lc.get_str() + " must be a square = 1 mod p"});

    std::string bad_points;
    for (const auto& pt : cc.expected_points)
        if (!verify_point(cc.curve, pt)) bad_points += pt.to_string() + " ";
    rep.clauses.push_back({"points", bad_points.empty(), bad_points.empty() ? "all expected points lie on C" : bad_points});

    std::string bad_b;
    for (const auto& bi : cc.b)
        if (mod_u64(bi, cc.p) != 1) bad_b += bi.get_str() + " ";
    rep.clauses.push_back({"b_congruence", bad_b.empty(), bad_b.empty() ? "b_i = 1 mod p" : bad_b});

    rep.sharpness = sharpness_report(cc.curve, cc.p, cc.expected_points.size());
    const bool class_ok = rep.sharpness.good && rep.sharpness.classification == cc.expected_classification;
    rep.clauses.push_back({"classification", class_ok,
                           rep.sharpness.good ? to_string(rep.sharpness.classification) + " (expected " +
                                                    to_string(cc.expected_classification) + ")"
                                              : "bad reduction at p"});
    return rep;
}

}  // namespace chabauty
