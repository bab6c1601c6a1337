#pragma once

// Finite verification that every interval [n, 2n) contains a prime that is
// 3 or 5 mod 8, together with the descending chain of primes = 5 mod 8 that
// covers [15, 10^10].

#include <cstdint>
#include <span>
#include <vector>

#include "chabauty/errors.hpp"

namespace chabauty {

struct PrimeWitness {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
};

/// Least prime p in [n, 2n) with p = 3 or 5 mod 8. Requires n >= 2.
PrimeWitness check_interval(std::uint64_t n);

struct RangeSummary {
    std::uint64_t n_max = 0;
    std::uint64_t checked = 0;
    /// Largest p - n over all witnesses, and the n where it occurs.
    std::uint64_t max_gap = 0;
    std::uint64_t max_gap_n = 0;
    /// Largest witness ratio p / n, kept as the pair attaining it.
    PrimeWitness worst_ratio;
};

inline constexpr std::uint64_t kMaxRange = 10'000'000;

/// Sieve-based check of check_interval for every 2 <= n <= n_max.
/// Throws VerificationError naming the first n without a witness.
RangeSummary check_range(std::uint64_t n_max);

namespace serial {
RangeSummary check_range(std::uint64_t n_max);
}

/// The published chain 10000000061, 5000000141, ..., 53, 29.
std::span<const std::uint64_t> published_prime_chain();

struct ChainEntryCheck {
    std::uint64_t value = 0;
    bool prime = false;
    bool five_mod_eight = false;
    bool exceeds_half_of_previous = false;  // true for the first entry
    bool ok() const { return prime && five_mod_eight && exceeds_half_of_previous; }
};

std::vector<ChainEntryCheck> check_prime_chain(std::span<const std::uint64_t> chain);

/// Every entry prime, = 5 mod 8, and more than half its predecessor.
bool verify_published_chain();

}  // namespace chabauty
