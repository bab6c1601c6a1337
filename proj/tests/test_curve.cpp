#include <doctest.h>
#include <omp.h>

#include "chabauty/curve.hpp"
#include "oracles.hpp"

using namespace chabauty;

namespace {

HyperellipticCurve grant() {
    const BigInt roots[] = {0, 1, 2, 5, 6};
    return HyperellipticCurve(IntPolynomial::from_roots(roots));
}

std::optional<HyperellipticCurve> random_curve(int genus) {
    const int deg = 2 * genus + 1 + static_cast<int>(oracle::uniform(0, 1));
    auto f = oracle::random_poly(deg, 12);
    try {
        return HyperellipticCurve(f);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace

TEST_CASE("curve validation") {
    CHECK_THROWS_WITH_AS(HyperellipticCurve(IntPolynomial{0, 1, 2, 1, 0, 1} * IntPolynomial{0, 1}),
                         doctest::Contains("not squarefree"), std::invalid_argument);
    CHECK_THROWS_AS(HyperellipticCurve(IntPolynomial{1, 0, 0, 0, 1}), std::invalid_argument);
    const auto c = grant();
    CHECK(c.genus() == 2);
    CHECK(genus(c) == 2);
    CHECK(c.odd_degree());
    CHECK(HyperellipticCurve(IntPolynomial{1, 0, 0, 0, 0, 0, 1}).genus() == 2);
    CHECK(HyperellipticCurve(IntPolynomial{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}).genus() == 5);
}

TEST_CASE("good reduction") {
    const auto c = grant();
    CHECK(good_reduction(c, 7));
    CHECK_FALSE(good_reduction(c, 2));
    CHECK_FALSE(good_reduction(c, 3));  // roots 0 and 6 collide
    CHECK_FALSE(good_reduction(c, 5));
    CHECK_THROWS_AS(count_points_fp(c, 5), std::domain_error);
}

TEST_CASE("point verification") {
    const auto c = grant();
    CHECK(verify_point(c, RationalPoint::affine(3, 6)));
    CHECK(verify_point(c, RationalPoint::affine(10, -120)));
    CHECK_FALSE(verify_point(c, RationalPoint::affine(3, 5)));
    CHECK(verify_point(c, RationalPoint::infinity_odd()));
    CHECK_FALSE(verify_point(c, RationalPoint::infinity_plus()));
    const HyperellipticCurve even(IntPolynomial{1, 0, 0, 0, 0, 0, 4});
    CHECK(verify_point(even, RationalPoint::infinity_plus()));
    CHECK_FALSE(verify_point(even, RationalPoint::infinity_odd()));
    const HyperellipticCurve nonsquare(IntPolynomial{1, 0, 0, 0, 0, 0, 3});
    CHECK_FALSE(verify_point(nonsquare, RationalPoint::infinity_plus()));
    CHECK(rational_points_at_infinity(nonsquare).empty());
}

TEST_CASE("points at infinity over F_p") {
    CHECK(infinity_count_fp(grant(), 7) == 1);
    const HyperellipticCurve c(IntPolynomial{1, 0, 0, 0, 0, 0, 3});
    CHECK(infinity_count_fp(c, 11) == 2);  // 3 = 5^2 mod 11
    CHECK(infinity_count_fp(c, 7) == 0);   // 3 is a nonresidue mod 7
}

TEST_CASE("Grant curve has eight points mod 7") {
    const auto s = count_points_fp(grant(), 7, true);
    CHECK(s.total == 8);
    CHECK(s.affine.size() == 7);
    CHECK(s.infinity_count == 1);
}

TEST_CASE("point counts agree with brute-force (x, y) enumeration") {
    omp_set_num_threads(4);
    int curves = 0;
    while (curves < 30) {
        auto c = random_curve(static_cast<int>(oracle::uniform(2, 3)));
        if (!c) continue;
        ++curves;
        for (std::uint64_t p = 3; p <= 31; p += 2) {
            if (!is_prime(p) || !good_reduction(*c, p)) continue;
            const auto n = count_points_fp(*c, p).total;
            CHECK(n == oracle::count_fp(c->f(), p));
            CHECK(n == serial::count_points_fp(*c, p).total);
            if (p <= 13) {
                const auto n2 = count_points_fp2(*c, p);
                CHECK(n2 == oracle::count_fp2(c->f(), p));
                CHECK(n2 == serial::count_points_fp2(*c, p));
            }
        }
    }
}

TEST_CASE("height search matches a naive enumeration") {
    int curves = 0;
    while (curves < 15) {
        // Plant integer points by forcing small square values.
        auto f = oracle::random_poly(5 + static_cast<int>(oracle::uniform(0, 1)), 6);
        std::optional<HyperellipticCurve> c;
        try {
            c.emplace(f);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++curves;
        const long H = 12;
        const auto pts = search_rational_points(*c, H);
        const auto inf = rational_points_at_infinity(*c);
        CHECK(pts.size() == inf.size() + oracle::count_affine_points(c->f(), H));
        CHECK(pts == serial::search_rational_points(*c, H));
        CHECK(std::is_sorted(pts.begin(), pts.end()));
        for (const auto& pt : pts) CHECK(verify_point(*c, pt));
    }
}

TEST_CASE("search on the triangles curve finds (5/6, +-217/216)") {
    const IntPolynomial cubic{6, -1, 0, 1};
    const HyperellipticCurve c(cubic * cubic - IntPolynomial::constant(32));
    const auto pts = search_rational_points(c, 6);
    CHECK(pts.size() == 10);
    CHECK(std::find(pts.begin(), pts.end(), RationalPoint::affine(make_rational(5, 6), make_rational(-217, 216))) !=
          pts.end());
}

TEST_CASE("point order and printing") {
    const auto a = RationalPoint::affine(make_rational(4, 121), make_rational(32, 161051));
    CHECK(a.to_string() == "(4/121, 32/161051)");
    CHECK(RationalPoint::infinity_minus().to_string() == "inf-");
    CHECK(RationalPoint::infinity_odd() < a);
    CHECK(RationalPoint::infinity_plus() < RationalPoint::infinity_minus());
    CHECK(RationalPoint::affine(5, 1) < RationalPoint::affine(make_rational(1, 2), 1));
    CHECK(RationalPoint::affine(1, 2) < RationalPoint::affine(1, -2));
    CHECK(a.involution().y() == -a.y());
    CHECK(RationalPoint::infinity_plus().involution() == RationalPoint::infinity_minus());
}

TEST_CASE("Hasse-Weil holds exactly") {
    int curves = 0;
    while (curves < 20) {
        auto c = random_curve(static_cast<int>(oracle::uniform(2, 4)));
        if (!c) continue;
        ++curves;
        const BigInt g = c->genus();
        for (std::uint64_t p = 3; p <= 61; p += 2) {
            if (!is_prime(p) || !good_reduction(*c, p)) continue;
            const BigInt P = static_cast<unsigned long>(p);
            const BigInt t = BigInt(static_cast<unsigned long>(count_points_fp(*c, p).total)) - P - 1;
            CHECK(t * t <= 4 * g * g * P);
        }
    }
}
