#include <doctest.h>

#include "chabauty/finitefield.hpp"
#include "oracles.hpp"

using namespace chabauty;

TEST_CASE("Legendre symbol against Euler's criterion by brute force") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL}) {
        std::vector<bool> sq(p, false);
        for (std::uint64_t y = 1; y < p; ++y) sq[y * y % p] = true;
        for (std::uint64_t a = 0; a < 3 * p; ++a) {
            const int expected = a % p == 0 ? 0 : (sq[a % p] ? 1 : -1);
            CHECK(legendre(a, p) == expected);
            CHECK(legendre(BigInt(static_cast<unsigned long>(a)) - BigInt(3 * static_cast<long>(p)), p) == expected);
        }
    }
    CHECK_THROWS_AS(legendre(std::uint64_t{3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(legendre(std::uint64_t{3}, 15), std::invalid_argument);
}

TEST_CASE("quadratic residues mod 11") {
    CHECK(squares_table(11) == std::vector<std::uint64_t>{0, 1, 3, 4, 5, 9});
    const SquaresTable t(11);
    CHECK(t.contains(9));
    CHECK_FALSE(t.contains(7));
}

TEST_CASE("x^5 takes only 0, 1, -1 mod 11") {
    const FpPolynomial f(IntPolynomial::monomial(1, 5), 11);
    for (std::uint64_t x = 0; x < 11; ++x) {
        const auto v = f(x);
        CHECK((v == 0 || v == 1 || v == 10));
    }
}

TEST_CASE("modular helpers") {
    CHECK(inv_mod(3, 11) == 4);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(mul_mod(1ULL << 40, 1ULL << 40, 1000000007ULL) == static_cast<std::uint64_t>(
                                                              (static_cast<unsigned __int128>(1) << 80) % 1000000007ULL));
    const FpElement a(5, 7);
    const FpElement b(4, 7);
    CHECK((a + b).value == 2);
    CHECK((a - b).value == 1);
    CHECK((a * b).value == 6);
    CHECK(least_nonresidue(7) == 3);
    CHECK(least_nonresidue(11) == 2);
    CHECK(eval_mod(IntPolynomial{1, 1, 1}, FpElement(3, 5)).value == 3);
}

TEST_CASE("F_{p^2} is a field and squares are half the units") {
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 13ULL}) {
        const Fp2Field F(p);
        const Fp2SquareTest is_sq(F);
        std::uint64_t squares = 0;
        for (std::uint64_t a = 0; a < p; ++a)
            for (std::uint64_t b = 0; b < p; ++b) {
                const Fp2Element z{a, b};
                if (a == 0 && b == 0) continue;
                // z^(p^2 - 1) = 1
                CHECK(F.pow(z, p * p - 1) == Fp2Element{1, 0});
                if (is_sq(z)) ++squares;
                CHECK(is_sq(z) == fp2_is_square(F, z));
            }
        CHECK(squares == (p * p - 1) / 2);
        // Every element of F_p is a square in F_{p^2}.
        for (std::uint64_t a = 1; a < p; ++a) CHECK(is_sq(Fp2Element{a, 0}));
    }
    CHECK_THROWS_AS(Fp2Field(7, 2), std::invalid_argument);  // 2 = 3^2 mod 7
}
