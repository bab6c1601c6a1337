#include "chabauty/bertrand.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "chabauty/exactmath.hpp"

namespace chabauty {

namespace {

bool qualifies(std::uint64_t p) { return p % 8 == 3 || p % 8 == 5; }

void require_range(std::uint64_t n_max) {
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    if (n_max > kMaxRange) throw std::invalid_argument("n_max limited to 10^7");
}

std::vector<std::uint64_t> base_primes(std::uint64_t limit) {
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = 1;
    }
    return out;
}

void sieve_segment(std::vector<char>& is_prime_flag, std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint64_t>& primes) {
    for (std::uint64_t p : primes) {
        if (p * p >= hi) break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        for (std::uint64_t j = start; j < hi; j += p) is_prime_flag[j] = 0;
    }
}

// Primality flags for [0, limit], segmented so threads write disjoint ranges.
std::vector<char> sieve(std::uint64_t limit, bool parallel) {
    std::vector<char> flag(limit + 1, 1);
    flag[0] = 0;
    if (limit >= 1) flag[1] = 0;
    const auto primes = base_primes(isqrt(BigInt(static_cast<unsigned long>(limit))).get_ui() + 1);
    constexpr std::uint64_t kSegment = 1U << 18U;
    const auto segments = static_cast<std::int64_t>((limit + kSegment) / kSegment);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::int64_t s = 0; s < segments; ++s) {
        const auto lo = static_cast<std::uint64_t>(s) * kSegment;
        const std::uint64_t hi = std::min(lo + kSegment, limit + 1);
        sieve_segment(flag, lo, hi, primes);
    }
    return flag;
}

struct Partial {
    RangeSummary summary;
    std::uint64_t failure = 0;  // 0 = none
};

// Walks n over [lo, hi) keeping a pointer to the least qualifying prime >= n.
Partial check_block(const std::vector<char>& is_p, std::uint64_t lo, std::uint64_t hi) {
    Partial part;
    const std::uint64_t end = is_p.size();
    std::uint64_t next = lo;
    for (std::uint64_t n = lo; n < hi; ++n) {
        if (next < n) next = n;
        while (next < end && !(is_p[next] && qualifies(next))) ++next;
        if (next >= 2 * n) {
            part.failure = n;
            return part;
        }
        auto& s = part.summary;
        ++s.checked;
        if (next - n > s.max_gap) {
            s.max_gap = next - n;
            s.max_gap_n = n;
        }
        const auto& w = s.worst_ratio;
        if (w.n == 0 || static_cast<unsigned __int128>(next) * w.n > static_cast<unsigned __int128>(w.p) * n)
            s.worst_ratio = {n, next};
    }
    return part;
}

RangeSummary merge(std::uint64_t n_max, const std::vector<Partial>& parts) {
    RangeSummary out;
    out.n_max = n_max;
    for (const auto& part : parts) {
        if (part.failure)
            throw VerificationError("no prime = 3, 5 mod 8 in [" + std::to_string(part.failure) + ", " +
                                    std::to_string(2 * part.failure) + ")");
        const auto& s = part.summary;
        out.checked += s.checked;
        if (s.max_gap > out.max_gap) {
            out.max_gap = s.max_gap;
            out.max_gap_n = s.max_gap_n;
        }
        const auto& w = out.worst_ratio;
        const auto& c = s.worst_ratio;
        if (c.n != 0 &&
            (w.n == 0 || static_cast<unsigned __int128>(c.p) * w.n > static_cast<unsigned __int128>(w.p) * c.n))
            out.worst_ratio = c;
    }
    return out;
}

}  // namespace

PrimeWitness check_interval(std::uint64_t n) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    for (std::uint64_t p = n; p < 2 * n; ++p)
        if (qualifies(p) && is_prime(p)) return {n, p};
    throw VerificationError("no prime = 3, 5 mod 8 in [" + std::to_string(n) + ", " + std::to_string(2 * n) + ")");
}

namespace serial {

RangeSummary check_range(std::uint64_t n_max) {
    require_range(n_max);
    const auto is_p = sieve(2 * n_max, false);
    return merge(n_max, {check_block(is_p, 2, n_max + 1)});
}

}  // namespace serial

RangeSummary check_range(std::uint64_t n_max) {
    require_range(n_max);
    const auto is_p = sieve(2 * n_max, true);
    constexpr std::uint64_t kBlock = 1U << 16U;
    const auto blocks = static_cast<std::int64_t>((n_max - 1 + kBlock - 1) / kBlock);
    std::vector<Partial> parts(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = 2 + static_cast<std::uint64_t>(b) * kBlock;
        const std::uint64_t hi = std::min(lo + kBlock, n_max + 1);
        parts[static_cast<std::size_t>(b)] = check_block(is_p, lo, hi);
    }
    return merge(n_max, parts);
}

std::span<const std::uint64_t> published_prime_chain() {
    static constexpr std::array<std::uint64_t, 30> kChain = {
        10000000061ULL, 5000000141ULL, 2500000117ULL, 1250000077ULL, 625000069ULL, 312500077ULL,
        156250093ULL,   78125141ULL,   39062581ULL,   19531381ULL,   9765757ULL,   4882957ULL,
        2441573ULL,     1220797ULL,    610429ULL,     305237ULL,     152629ULL,    76333ULL,
        38189ULL,       19141ULL,      9613ULL,       4813ULL,       2437ULL,      1229ULL,
        653ULL,         349ULL,        181ULL,        101ULL,        53ULL,        29ULL};
    return kChain;
}

std::vector<ChainEntryCheck> check_prime_chain(std::span<const std::uint64_t> chain) {
    std::vector<ChainEntryCheck> out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        ChainEntryCheck c;
        c.value = chain[i];
        c.prime = is_prime(chain[i]);
        c.five_mod_eight = chain[i] % 8 == 5;
        c.exceeds_half_of_previous = i == 0 || 2 * chain[i] > chain[i - 1];
        out.push_back(c);
    }
    return out;
}

bool verify_published_chain() {
    const auto checks = check_prime_chain(published_prime_chain());
    return std::all_of(checks.begin(), checks.end(), [](const ChainEntryCheck& c) { return c.ok(); });
}

}  // namespace chabauty
