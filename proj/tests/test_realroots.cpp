#include <doctest.h>

#include "chabauty/realroots.hpp"
#include "oracles.hpp"

using namespace chabauty;

TEST_CASE("roots of a product of linear factors are isolated in order") {
    const BigInt roots[] = {-7, -2, 0, 3, 11};
    const auto iv = isolate_real_roots(IntPolynomial::from_roots(roots));
    REQUIRE(iv.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(iv[i].lo < BigRational(roots[i]));
        CHECK(BigRational(roots[i]) < iv[i].hi);
        if (i) CHECK(iv[i - 1].hi <= iv[i].lo);
    }
}

TEST_CASE("no real roots and repeated roots") {
    CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}).empty());
    const IntPolynomial sq = IntPolynomial{-2, 1} * IntPolynomial{-2, 1} * IntPolynomial{1, 1};
    CHECK(isolate_real_roots(sq).size() == 2);
}

TEST_CASE("refinement keeps an irrational root") {
    const IntPolynomial f{-2, 0, 1};  // +-sqrt 2
    const SturmSequence seq(f);
    const auto iv = isolate_real_roots(f);
    REQUIRE(iv.size() == 2);
    const auto r = refine_root(seq, iv[1], make_rational(1, 1000000));
    CHECK(r.hi - r.lo <= make_rational(1, 1000000));
    CHECK(r.lo * r.lo < 2);
    CHECK(r.hi * r.hi > 2);
}

TEST_CASE("Sturm root counts agree with integer-root products") {
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<BigInt> roots;
        const int n = static_cast<int>(oracle::uniform(1, 6));
        for (int i = 0; i < n; ++i) roots.emplace_back(oracle::uniform(-20, 20));
        // times an irreducible quadratic without real roots
        const IntPolynomial f = IntPolynomial::from_roots(roots) * IntPolynomial{1, 0, 1};
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        CHECK(isolate_real_roots(f).size() == roots.size());
        CHECK(sign_at(f, BigRational(roots.front())) == 0);
    }
}
