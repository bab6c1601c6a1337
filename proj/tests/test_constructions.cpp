#include <doctest.h>

#include "chabauty/constructions.hpp"
#include "oracles.hpp"

using namespace chabauty;

namespace {

std::uint64_t brute_choose_prime(int g) {
    for (std::uint64_t p = 2 * g + 3; p < static_cast<std::uint64_t>(4 * g + 4); ++p)
        if (oracle::trial_prime(p) && (p % 8 == 3 || p % 8 == 5)) return p;
    return 0;
}

}  // namespace

TEST_CASE("genus-2 family: five points and three points mod 11") {
    for (long k : {0L, 1L, 7L, 50L}) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            if (s == Sign::Minus && k == 0) continue;
            const auto cc = family_genus2(k, s);
            CHECK(cc.p == 11);
            CHECK(cc.expected_points.size() == 5);
            CHECK(count_points_fp(cc.curve, 11).total == 3);
            CHECK(oracle::count_fp(cc.curve.f(), 11) == 3);
            const auto rep = verify_construction(cc);
            CHECK(rep.passed());
        }
    }
    const auto c0 = family_genus2(0, Sign::Plus);
    CHECK(c0.curve.f() == IntPolynomial{9, 0, 0, 0, 11, 1});
}

TEST_CASE("consecutive nonresidues") {
    CHECK(consecutive_nonresidues(11) == 6);
    CHECK(consecutive_nonresidues(13) == 5);
    for (std::uint64_t p = 5; p < 400; p += 2) {
        if (!oracle::trial_prime(p)) continue;
        std::vector<bool> sq(p, false);
        for (std::uint64_t y = 1; y < p; ++y) sq[y * y % p] = true;
        std::uint64_t c = 1;
        while (sq[c] || sq[c + 1] || c + 1 >= p) ++c;
        CHECK(consecutive_nonresidues(p) == c);
    }
    CHECK_THROWS(consecutive_nonresidues(3));
}

TEST_CASE("odd and even cases reproduce the listed genus 3, 4, 5 curves") {
    const auto c3 = construct_odd_case(3, {1, 6}, -1);
    CHECK(c3.curve.f() == IntPolynomial::monomial(1, 7) - IntPolynomial{-1, 49} * IntPolynomial{-36, 49} *
                                                               IntPolynomial{1, 1});
    CHECK(c3.p == 7);
    CHECK(c3.expected_points.size() == 5);
    CHECK(verify_construction(c3).passed());

    const auto c4 = construct_even_case(4, {3, 4, 6});
    CHECK(c4.curve.f() == IntPolynomial::monomial(1, 10) - IntPolynomial{-3, 11} * IntPolynomial{-4, 11} *
                                                                IntPolynomial{-6, 11});
    CHECK(verify_construction(c4).passed());

    const auto c5 = construct_even_case(5, {1, 2, 3, 12}, 6);
    CHECK(c5.curve.f() == IntPolynomial::monomial(1, 12) - IntPolynomial{-1, 13} * IntPolynomial{-2, 13} *
                                                                IntPolynomial{-3, 13} * IntPolynomial{-12, 13});
    CHECK(verify_construction(c5).passed());
}

TEST_CASE("odd and even case argument checks") {
    CHECK_THROWS_AS(construct_odd_case(4, {1, 2, 3}, 3), std::invalid_argument);  // 9 is not prime
    CHECK_THROWS_AS(construct_odd_case(3, {1, -1}, 3), std::invalid_argument);    // equal |a_i|
    CHECK_THROWS_AS(construct_odd_case(3, {1, 2}, 2), std::invalid_argument);     // 2 is a residue mod 7
    CHECK_THROWS_AS(construct_even_case(4, {3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(construct_even_case(4, {3, 4, 6}, 2), std::invalid_argument);  // 3 is a residue mod 11
}

TEST_CASE("prime window") {
    for (int g = 2; g <= 40; ++g) CHECK(choose_prime(g) == brute_choose_prime(g));
    CHECK(choose_prime(2) == 11);
    CHECK(choose_prime(5) == 13);
    CHECK(choose_prime(6) == 19);
}

TEST_CASE("Q has four points mod p and good reduction") {
    for (int g = 2; g <= 8; ++g) {
        const auto p = choose_prime(g);
        const HyperellipticCurve q(q_poly(g, p));
        CHECK(good_reduction(q, p));
        CHECK(oracle::count_fp(q.f(), p) == 4);
    }
    CHECK_THROWS_AS(q_poly(2, 13), std::invalid_argument);
}

TEST_CASE("truncated square root of 1 + x^l") {
    for (std::uint64_t p : {11ULL, 13ULL, 19ULL, 29ULL})
        for (int l = 1; l <= 4; ++l)
            for (int s = 0; s <= 9; ++s) {
                const auto c = coeff_lemma(p, l, s);
                CHECK(c.size() == static_cast<std::size_t>(s / l));
                IntPolynomial r = IntPolynomial::constant(1);
                for (std::size_t j = 0; j < c.size(); ++j)
                    r += IntPolynomial::monomial(c[j], static_cast<int>(j + 1) * l);
                const IntPolynomial sq = r * r;
                const IntPolynomial target = IntPolynomial::constant(1) + IntPolynomial::monomial(1, l);
                for (int k = 0; k <= s; ++k)
                    CHECK(oracle::reduce(sq.coeff(k) - target.coeff(k), p) == 0);
            }
}

TEST_CASE("t-transform") {
    const auto t = t_transform(IntPolynomial::monomial(1, 3), 11, {1});
    CHECK(t == IntPolynomial::monomial(1, 2) * IntPolynomial{-11, 1});
    const auto t2 = t_transform(IntPolynomial::monomial(1, 5), 11, {1, 2}, {2, 1});
    CHECK(t2 == IntPolynomial::monomial(1, 2) * IntPolynomial{-11, 1}.pow(2) * IntPolynomial{-22, 1});
    CHECK_THROWS_AS(t_transform(IntPolynomial{0, 0, 1}, 11, {1, 2}), std::invalid_argument);
    // Same reduction mod p.
    const IntPolynomial P{0, 0, 0, 4, 0, 1};
    CHECK(congruent_mod(t_transform(P, 13, {1, 5}), P, BigInt(13)));
}

TEST_CASE("C_s construction carries 4 + 2s points") {
    for (int g = 2; g <= 5; ++g)
        for (int s = 1; s <= g; ++s) {
            ConstructionParams params;
            params.g = g;
            params.p = choose_prime(g);
            for (int i = 1; i <= s; ++i) params.a.push_back(i);
            ConstructedCurve cc = [&] {
                try {
                    return build_curve_Cs(params);
                } catch (const DegenerateParameters&) {
                    params.R = IntPolynomial{1};
                    return build_curve_Cs(params);
                }
            }();
            CHECK(cc.expected_points.size() == static_cast<std::size_t>(4 + 2 * s));
            CHECK(count_points_fp(cc.curve, cc.p).total == 4);
            const auto rep = verify_construction(cc);
            CHECK_MESSAGE(rep.passed(), "g=", g, " s=", s, " failed ", rep.first_failure());
            const auto want = s == g - 1 ? Classification::PotentiallySharp
                                         : (s == g ? Classification::Excessive : Classification::Neither);
            CHECK(rep.sharpness.classification == want);
        }
}

TEST_CASE("C_s parameter validation") {
    ConstructionParams params;
    params.g = 3;
    params.p = 11;
    params.a = {1, 2, 3, 4};
    CHECK_THROWS_AS(build_curve_Cs(params), std::invalid_argument);  // s > g
    params.a = {1, 1};
    CHECK_THROWS_AS(build_curve_Cs(params), std::invalid_argument);
    params.a = {1, 22};
    CHECK_THROWS_AS(build_curve_Cs(params), std::invalid_argument);
    params.a = {1, 2};
    params.p = 7;
    CHECK_THROWS_AS(build_curve_Cs(params), std::invalid_argument);
    params.p = 11;
    params.R = IntPolynomial::monomial(1, 6);
    CHECK_THROWS_AS(build_curve_Cs(params), std::invalid_argument);
}

TEST_CASE("verification flags a wrong point list") {
    auto cc = family_genus2(1, Sign::Plus);
    cc.expected_points.push_back(RationalPoint::affine(1, 1));
    const auto rep = verify_construction(cc);
    CHECK_FALSE(rep.passed());
    CHECK(rep.first_failure() == "points");
}
