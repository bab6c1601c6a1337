#include <doctest.h>
#include <omp.h>

#include "chabauty/bertrand.hpp"
#include "oracles.hpp"

using namespace chabauty;

namespace {

std::uint64_t brute_witness(std::uint64_t n) {
    for (std::uint64_t p = n; p < 2 * n; ++p)
        if ((p % 8 == 3 || p % 8 == 5) && oracle::trial_prime(p)) return p;
    return 0;
}

}  // namespace

TEST_CASE("interval witnesses match trial division") {
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        const auto w = check_interval(n);
        CHECK(w.n == n);
        CHECK(w.p == brute_witness(n));
    }
    CHECK(check_interval(2).p == 3);
    CHECK(check_interval(6).p == 11);
    CHECK_THROWS(check_interval(1));
}

TEST_CASE("range summary agrees with the brute-force scan") {
    const std::uint64_t N = 20000;
    std::uint64_t max_gap = 0, max_gap_n = 0;
    for (std::uint64_t n = 2; n <= N; ++n) {
        const auto p = brute_witness(n);
        REQUIRE(p != 0);
        if (p - n > max_gap) {
            max_gap = p - n;
            max_gap_n = n;
        }
    }
    const auto s = check_range(N);
    CHECK(s.n_max == N);
    CHECK(s.checked == N - 1);
    CHECK(s.max_gap == max_gap);
    CHECK(s.max_gap_n == max_gap_n);
}

TEST_CASE("parallel and serial range checks agree") {
    omp_set_num_threads(4);
    for (std::uint64_t N : {2ULL, 3ULL, 100ULL, 54321ULL, 300000ULL}) {
        const auto a = check_range(N);
        const auto b = serial::check_range(N);
        CHECK(a.checked == b.checked);
        CHECK(a.max_gap == b.max_gap);
        CHECK(a.max_gap_n == b.max_gap_n);
        CHECK(a.worst_ratio.n == b.worst_ratio.n);
        CHECK(a.worst_ratio.p == b.worst_ratio.p);
    }
}

TEST_CASE("range limits") {
    CHECK_THROWS(check_range(1));
    CHECK_THROWS(check_range(kMaxRange + 1));
}

TEST_CASE("published chain") {
    const auto chain = published_prime_chain();
    CHECK(chain.size() == 30);
    CHECK(chain.front() == 10000000061ULL);
    CHECK(chain.back() == 29);
    const auto checks = check_prime_chain(chain);
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CHECK(checks[i].ok());
        // independent: trial division and the halving condition
        CHECK(oracle::trial_prime(chain[i]));
        CHECK(chain[i] % 8 == 5);
        if (i > 0) CHECK(2 * chain[i] > chain[i - 1]);
    }
    CHECK(verify_published_chain());
    // chain reaches below 15 * 2
    CHECK(2 * chain.back() > 15);
}

TEST_CASE("chain checker rejects bad entries") {
    const std::uint64_t bad[] = {101, 53, 25, 11};
    const auto checks = check_prime_chain(bad);
    CHECK(checks[0].ok());           // 101 = 5 mod 8
    CHECK(checks[1].ok());
    CHECK_FALSE(checks[2].prime);     // 25
    CHECK_FALSE(checks[3].exceeds_half_of_previous);
}
