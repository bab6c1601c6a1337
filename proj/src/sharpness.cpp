#include "chabauty/sharpness.hpp"

#include <stdexcept>

#include "chabauty/exactmath.hpp"

namespace chabauty {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::PotentiallySharp: return "PotentiallySharp";
        case Classification::Excessive: return "Excessive";
        case Classification::Neither: return "Neither";
        case Classification::Inapplicable: return "Inapplicable";
    }
    return "?";
}

Bound coleman_bound(const HyperellipticCurve& curve, std::uint64_t p) {
    const auto g = static_cast<std::uint64_t>(curve.genus());
    const std::uint64_t n = count_points_fp(curve, p).total;
    return {n + 2 * g - 2, p > 2 * g};
}

Bound stoll_bound(const HyperellipticCurve& curve, std::uint64_t p, int rank) {
    if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
    const std::uint64_t n = count_points_fp(curve, p).total;
    const auto r = static_cast<std::uint64_t>(rank);
    return {n + 2 * r, rank < curve.genus() - 1 && p > 2 * r + 2};
}

Classification classify(std::uint64_t known_points, const Bound& coleman) {
    if (!coleman.applicable) return Classification::Inapplicable;
    if (known_points > coleman.value) return Classification::Excessive;
    if (known_points == coleman.value) return Classification::PotentiallySharp;
    return Classification::Neither;
}

SharpnessReport sharpness_report(const HyperellipticCurve& curve, std::uint64_t p, std::uint64_t known_points,
                                 std::optional<int> rank) {
    SharpnessReport r;
    r.p = p;
    r.known_points = known_points;
    r.good = good_reduction(curve, p);
    if (!r.good) return r;
    const auto g = static_cast<std::uint64_t>(curve.genus());
    r.n_fp = count_points_fp(curve, p).total;
    r.coleman_bound = r.n_fp + 2 * g - 2;
    r.coleman_applicable = p > 2 * g;
    if (rank) {
        if (*rank < 0) throw std::invalid_argument("rank must be nonnegative");
        const auto rk = static_cast<std::uint64_t>(*rank);
        r.stoll_bound = r.n_fp + 2 * rk;
        r.stoll_applicable = *rank < curve.genus() - 1 && p > 2 * rk + 2;
    }
    r.classification = classify(known_points, {r.coleman_bound, r.coleman_applicable});
    return r;
}

std::uint64_t prime_cutoff(int genus, std::uint64_t known_points) {
    if (genus < 2) throw std::invalid_argument("genus must be at least 2");
    // A prime p stays a candidate while p + 2g - 1 - N <= 2g*sqrt(p), i.e.
    // p + 2g - 1 - N <= 0 or (p + 2g - 1 - N)^2 <= 4 g^2 p.
    const BigInt g(genus);
    const BigInt n(static_cast<unsigned long>(known_points));
    auto candidate = [&](const BigInt& p) {
        BigInt lhs = p + 2 * g - 1 - n;
        return lhs <= 0 || lhs * lhs <= 4 * g * g * p;
    };
    const BigInt a = (g - 1) * (g - 1) + n;
    BigInt p = g + isqrt(a) + 1;
    p *= p;  // >= (g + sqrt(a))^2
    while (p > 0 && !candidate(p)) --p;
    return p.get_ui();
}

PrimeScan scan_primes_up_to(const HyperellipticCurve& curve, std::uint64_t known_points, std::uint64_t limit) {
    PrimeScan scan;
    scan.cutoff = limit;
    scan.known_points = known_points;
    const auto g = static_cast<std::uint64_t>(curve.genus());
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2 * g + 1; p <= limit; ++p)
        if (is_prime(p)) primes.push_back(p);

    std::vector<SharpnessReport> all(primes.size());
    const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        all[idx] = sharpness_report(curve, primes[idx], known_points);
    }
    for (auto& r : all) {
        if (r.good)
            scan.reports.push_back(r);
        else
            scan.skipped.push_back({r.p, r.p == 2 ? "p = 2" : "p divides lc(f) * disc(f)"});
    }
    return scan;
}

PrimeScan scan_primes(const HyperellipticCurve& curve, std::uint64_t known_points) {
    return scan_primes_up_to(curve, known_points, prime_cutoff(curve.genus(), known_points));
}

RankConsequence rank_lower_bound(const std::vector<SharpnessReport>& reports, int genus) {
    for (const auto& r : reports)
        if (r.classification == Classification::Excessive)
            return {genus, RankConsequence::Source::ExcessiveAt, r.p};
    return {};
}

std::optional<ConditionalRankStatement> rank_is_g_minus_1_if_sharp(const std::vector<SharpnessReport>& reports,
                                                                   int genus) {
    for (const auto& r : reports) {
        if (r.classification != Classification::PotentiallySharp) continue;
        ConditionalRankStatement s;
        s.p = r.p;
        s.genus = genus;
        s.rank_if_hypothesis = genus - 1;
        s.known_points = r.known_points;
        s.hypothesis = "r < " + std::to_string(genus);
        s.conclusion = "r = " + std::to_string(genus - 1) + " and C(Q) is exactly the " +
                       std::to_string(r.known_points) + " known points";
        return s;
    }
    return std::nullopt;
}

}  // namespace chabauty
