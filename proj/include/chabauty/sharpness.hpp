#pragma once

// Coleman and Stoll bounds, the per-prime classification of a curve
// against its known rational points, and the prime-window scan.
//
// The Mordell-Weil rank r is never computed here. Every consequence that
// depends on it is reported as a statement with its hypothesis spelled out.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chabauty/curve.hpp"

namespace chabauty {

enum class Classification { PotentiallySharp, Excessive, Neither, Inapplicable };

std::string to_string(Classification c);

struct Bound {
    std::uint64_t value = 0;
    bool applicable = false;
};

/// #C(F_p) + 2g - 2, applicable when p > 2g. The hypothesis r < g is the
/// caller's responsibility.
Bound coleman_bound(const HyperellipticCurve& curve, std::uint64_t p);

/// #C(F_p) + 2r, applicable when r < g - 1 and p > 2r + 2.
Bound stoll_bound(const HyperellipticCurve& curve, std::uint64_t p, int rank);

struct SharpnessReport {
    std::uint64_t p = 0;
    bool good = false;
    std::uint64_t n_fp = 0;
    std::uint64_t coleman_bound = 0;
    bool coleman_applicable = false;
    std::optional<std::uint64_t> stoll_bound;  // only with an external rank
    bool stoll_applicable = false;
    std::uint64_t known_points = 0;
    Classification classification = Classification::Inapplicable;
};

/// Classifies known_points against the Coleman bound. Primes with p <= 2g
/// (or bad reduction) come back Inapplicable.
Classification classify(std::uint64_t known_points, const Bound& coleman);

/// Full report at one prime. Bad primes produce good = false, Inapplicable.
SharpnessReport sharpness_report(const HyperellipticCurve& curve, std::uint64_t p, std::uint64_t known_points,
                                 std::optional<int> rank = std::nullopt);

/// Largest P such that a good prime p > P can be neither potentially sharp
/// nor excessive for a genus-g curve with N known points:
/// floor((g + sqrt((g-1)^2 + N))^2), evaluated with integers only.
std::uint64_t prime_cutoff(int genus, std::uint64_t known_points);

struct SkippedPrime {
    std::uint64_t p = 0;
    std::string reason;
};

struct PrimeScan {
    std::uint64_t cutoff = 0;
    std::uint64_t known_points = 0;
    std::vector<SharpnessReport> reports;  // good primes 2g < p <= cutoff, ascending
    std::vector<SkippedPrime> skipped;     // bad primes in the same window
};

/// Every prime in (2g, prime_cutoff] classified against known_points.
PrimeScan scan_primes(const HyperellipticCurve& curve, std::uint64_t known_points);
/// Same scan over an explicit upper limit (used to audit the cutoff).
PrimeScan scan_primes_up_to(const HyperellipticCurve& curve, std::uint64_t known_points, std::uint64_t limit);

struct RankConsequence {
    enum class Source { None, ExcessiveAt, PotentiallySharpAt };
    int lower_bound = 0;
    Source source = Source::None;
    std::uint64_t p = 0;
};

/// r >= g unconditionally as soon as some report is Excessive.
RankConsequence rank_lower_bound(const std::vector<SharpnessReport>& reports, int genus);

/// "If r < g then r = g - 1 and C(Q) is exactly the known set", witnessed
/// by a potentially sharp prime.
struct ConditionalRankStatement {
    std::uint64_t p = 0;
    int genus = 0;
    int rank_if_hypothesis = 0;  // g - 1
    std::uint64_t known_points = 0;
    std::string hypothesis;  // "r < g"
    std::string conclusion;
};

/// Empty when no report is PotentiallySharp.
std::optional<ConditionalRankStatement> rank_is_g_minus_1_if_sharp(const std::vector<SharpnessReport>& reports,
                                                                   int genus);

}  // namespace chabauty
