#include <doctest.h>

#include "chabauty/fixtures.hpp"
#include "chabauty/simplicity.hpp"
#include "oracles.hpp"

using namespace chabauty;

namespace {

WeilPolynomial weil(std::uint64_t p, long c1, long c2) { return WeilPolynomial{p, BigInt(c1), BigInt(c2)}; }

const std::uint64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31};

}  // namespace

TEST_CASE("Grant's curve at 7 has trace zero") {
    const auto w = weil_poly_genus2(load_fixture("grant").curve, 7);
    CHECK(w.c1 == 0);
    CHECK(w.n1() == 8);
    CHECK(w.satisfies_weil_bounds());
}

TEST_CASE("y^2 = x^5 + 1 over F_7 and F_49") {
    const HyperellipticCurve c(IntPolynomial{1, 0, 0, 0, 0, 1});
    const auto w = weil_poly_genus2(c, 7);
    CHECK(w.n1() == oracle::count_fp(c.f(), 7));
    CHECK(w.n2() == oracle::count_fp2(c.f(), 7));
}

TEST_CASE("zeta consistency on random genus-2 curves") {
    int done = 0;
    while (done < 40) {
        const IntPolynomial f = oracle::random_poly(static_cast<int>(oracle::uniform(5, 6)), 9);
        if (discriminant(f) == 0) continue;
        const HyperellipticCurve c(f);
        for (std::uint64_t p : kPrimes) {
            if (!good_reduction(c, p)) continue;
            const auto w = weil_poly_genus2(c, p);
            CHECK(w.n1() == oracle::count_fp(f, p));
            CHECK(w.n2() == oracle::count_fp2(f, p));
            CHECK(w.satisfies_weil_bounds());
            // P(1) = #Jac(F_p) > 0
            CHECK(w.polynomial()(BigInt(1)) > 0);
        }
        ++done;
    }
}

TEST_CASE("argument checks") {
    const HyperellipticCurve g3(IntPolynomial{1, 0, 0, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(weil_poly_genus2(g3, 5), std::invalid_argument);
    const HyperellipticCurve c(IntPolynomial{1, 0, 0, 0, 0, 1});
    CHECK_THROWS_AS(weil_poly_genus2(c, 5), std::domain_error);
    CHECK_THROWS_AS(weil_poly_genus2(c, 1009), std::invalid_argument);
    CHECK_THROWS_AS(find_simplicity_prime(c, 1001), std::invalid_argument);
}

TEST_CASE("ordinary") {
    CHECK(is_ordinary(weil(7, 1, 1)));
    CHECK_FALSE(is_ordinary(weil(7, 0, 0)));
    CHECK_FALSE(is_ordinary(weil(5, 2, 10)));
}

TEST_CASE("quartic factorisation") {
    CHECK_FALSE(quartic_irreducible(weil(7, 0, -14)));  // (T^2 - 7)^2
    CHECK_FALSE(quartic_irreducible(weil(5, 0, 1)));    // (T^2 + 3T + 5)(T^2 - 3T + 5)
    CHECK_FALSE(quartic_irreducible(weil(7, 1, 8)));    // (T^2 + 3T + 7)(T^2 - 2T + 7)
    CHECK(quartic_irreducible(weil(5, 0, 2)));
    int checked = 0;
    while (checked < 400) {
        const std::uint64_t p = kPrimes[oracle::uniform(0, 5)];
        const long P = static_cast<long>(p);
        const auto w = weil(p, oracle::uniform(-4 * P, 4 * P) / 1, oracle::uniform(-2 * P, 6 * P));
        if (!w.satisfies_weil_bounds()) continue;
        ++checked;
        CHECK_MESSAGE(quartic_irreducible(w) == !oracle::quartic_reducible(w.polynomial()), "p=", p, " c1=", w.c1,
                      " c2=", w.c2);
    }
}

TEST_CASE("criterion clauses") {
    const std::string note = "criterion stated for n > 2, applied with n = 2";
    auto v = hz_check(weil(7, 0, -14));
    CHECK_FALSE(v.absolutely_simple());
    CHECK(v.clause == "quartic reducible");
    CHECK(v.note == note);

    REQUIRE(!oracle::quartic_reducible(weil(7, 1, 7).polynomial()));
    v = hz_check(weil(7, 1, 7));
    CHECK(v.clause == "not ordinary");

    v = hz_check(weil(5, 0, 2));
    CHECK(v.clause == "condition (1)");

    // c1^2 - 4 c2 + 8p = 5
    REQUIRE(!oracle::quartic_reducible(weil(5, 1, 9).polynomial()));
    v = hz_check(weil(5, 1, 9));
    CHECK(v.clause == "condition (3): Q(sqrt(5)) is a cyclotomic real subfield");
    // = 8, squarefree part 2
    REQUIRE(!oracle::quartic_reducible(weil(5, 2, 9).polynomial()));
    CHECK(hz_check(weil(5, 2, 9)).clause == "condition (3): Q(sqrt(2)) is a cyclotomic real subfield");

    REQUIRE(!oracle::quartic_reducible(weil(7, 1, 1).polynomial()));
    v = hz_check(weil(7, 1, 1));
    CHECK(v.absolutely_simple());
    CHECK(v.clause.empty());
    CHECK(v.note == note);
}

TEST_CASE("split Jacobians never get a certificate") {
    // x -> -x maps y^2 = h(x^2) onto two elliptic quotients.
    int done = 0;
    while (done < 15) {
        const long a = oracle::uniform(-5, 5), b = oracle::uniform(-5, 5), c = oracle::uniform(-5, 5);
        const IntPolynomial f{c, 0, b, 0, a, 0, 1};
        if (discriminant(f) == 0) continue;
        ++done;
        CHECK_FALSE(find_simplicity_prime(HyperellipticCurve(f), 31).has_value());
    }
}

TEST_CASE("certificates for the listed family") {
    for (const char* id : {"grant", "ck_plus_0", "ck_plus_1"}) {
        const auto w = find_simplicity_prime(load_fixture(id).curve, 100);
        REQUIRE(w.has_value());
        CHECK(hz_check(w->weil).absolutely_simple());
        CHECK(w->weil.n1() == oracle::count_fp(load_fixture(id).curve.f(), w->p));
    }
}
