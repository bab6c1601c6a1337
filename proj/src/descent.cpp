#include "chabauty/descent.hpp"

#include <algorithm>
#include <stdexcept>

#include "chabauty/finitefield.hpp"
#include "chabauty/realroots.hpp"

namespace chabauty {

DescentProblem::DescentProblem(IntPolynomial f1, IntPolynomial f2) : f1_(std::move(f1)), f2_(std::move(f2)) {
    if (f1_.degree() < 1 || f2_.degree() < 1) throw std::invalid_argument("f1 and f2 must be nonconstant");
    if (!f1_.is_monic() || !f2_.is_monic())
        throw std::invalid_argument(
            "f1 and f2 must be monic; otherwise the primes dividing the leading coefficients must be added to the "
            "twist support");
    if (f1_.degree() % 2 != 0 && f2_.degree() % 2 != 0)
        throw std::invalid_argument("at least one of f1, f2 must have even degree");
    res_ = chabauty::resultant(f1_, f2_);
    if (res_ == 0) throw std::invalid_argument("f1 and f2 have a common factor");
}

HyperellipticCurve DescentProblem::curve() const { return HyperellipticCurve(f1_ * f2_); }

Cover make_cover(const DescentProblem& problem, const BigInt& d) {
    if (d == 0 || squarefree_part(d) != d) throw std::invalid_argument("twist " + d.get_str() + " is not squarefree");
    return {problem.f1(), problem.f2(), d};
}

std::vector<BigInt> candidate_twists(const DescentProblem& problem) {
    const auto primes = prime_divisors(problem.resultant());
    std::vector<BigInt> positive;
    const std::size_t subsets = std::size_t{1} << primes.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
        BigInt d = 1;
        for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (std::size_t{1} << i)) d *= primes[i];
        positive.push_back(d);
    }
    std::sort(positive.begin(), positive.end());
    std::vector<BigInt> out;
    for (const auto& d : positive) {
        out.push_back(-d);
        out.push_back(d);
    }
    return out;
}

namespace {

int sgn(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool closed_overlap(const RootInterval& a, const RootInterval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

RootInterval bisect(const SturmSequence& seq, const RootInterval& iv) {
    return refine_root(seq, iv, (iv.hi - iv.lo) / 2);
}

struct TaggedInterval {
    RootInterval iv;
    int owner;  // 1 or 2
};

}  // namespace

bool real_filter(const Cover& cover) {
    const int ds = sgn(cover.d);
    const SturmSequence s1(cover.f1);
    const SturmSequence s2(cover.f2);
    auto r1 = isolate_real_roots(cover.f1);
    auto r2 = isolate_real_roots(cover.f2);

    // Refine until no root interval of f1 meets one of f2 (roots are distinct).
    for (bool overlap = true; overlap;) {
        overlap = false;
        for (auto& a : r1)
            for (auto& b : r2)
                if (closed_overlap(a, b)) {
                    overlap = true;
                    a = bisect(s1, a);
                    b = bisect(s2, b);
                }
    }

    std::vector<TaggedInterval> all;
    for (const auto& iv : r1) all.push_back({iv, 1});
    for (const auto& iv : r2) all.push_back({iv, 2});
    std::sort(all.begin(), all.end(), [](const TaggedInterval& a, const TaggedInterval& b) { return a.iv.lo < b.iv.lo; });

    auto both_ok = [&](const BigRational& x) {
        return ds * sign_at(cover.f1, x) > 0 && ds * sign_at(cover.f2, x) > 0;
    };

    std::vector<BigRational> samples;
    if (all.empty()) {
        samples.emplace_back(0);
    } else {
        samples.push_back(all.front().iv.lo - 1);
        for (std::size_t i = 0; i + 1 < all.size(); ++i) samples.push_back((all[i].iv.hi + all[i + 1].iv.lo) / 2);
        samples.push_back(all.back().iv.hi + 1);
    }
    if (std::any_of(samples.begin(), samples.end(), both_ok)) return true;

    // At a root of one factor the other has constant sign on the interval.
    for (const auto& t : all) {
        const IntPolynomial& other = t.owner == 1 ? cover.f2 : cover.f1;
        if (ds * sign_at(other, t.iv.lo) > 0) return true;
    }
    return false;
}

bool local_filter(const Cover& cover, std::uint64_t q) {
    if (q % 2 == 0 || !is_prime(q)) throw std::invalid_argument("local filter needs an odd prime");
    if (mod_u64(cover.f1.leading(), q) == 0 || mod_u64(cover.f2.leading(), q) == 0)
        throw std::invalid_argument("q divides a leading coefficient");

    // Square class of d in Q_q^* / Q_q^*2: (valuation parity, unit character).
    BigInt unit = cover.d;
    int vd = 0;
    const BigInt Q(static_cast<unsigned long>(q));
    while (mpz_divisible_p(unit.get_mpz_t(), Q.get_mpz_t())) {
        unit /= Q;
        ++vd;
    }
    const int d_par = vd % 2;
    const int d_chr = legendre(unit, q);

    // x with v(x) = -k < 0: f_i(x) has the square class of x^deg f_i.
    const int n1 = cover.f1.degree();
    const int n2 = cover.f2.degree();
    for (int k_par : {0, 1})
        for (int eps : {1, -1}) {
            auto matches = [&](int n) {
                const int par = (n * k_par) % 2;
                const int chr = n % 2 ? eps : 1;
                return par == d_par && chr == d_chr;
            };
            if (matches(n1) && matches(n2)) return true;
        }

    const FpPolynomial g1(cover.f1, q);
    const FpPolynomial g2(cover.f2, q);
    const std::uint64_t dq = mod_u64(cover.d, q);
    for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t v1 = g1(x);
        const std::uint64_t v2 = g2(x);
        // Zero counts as a square.
        if (legendre(mul_mod(dq, v1, q), q) != -1 && legendre(mul_mod(dq, v2, q), q) != -1) return true;
    }
    return false;
}

RationalPoint pushforward(const Cover& cover, const BigRational& x, const BigRational& z, const BigRational& t) {
    const BigRational d(cover.d);
    if (cover.f1(x) != d * z * z || cover.f2(x) != d * t * t)
        throw std::invalid_argument("(x, z, t) does not lie on the cover with d = " + cover.d.get_str());
    return RationalPoint::affine(x, d * z * t);
}

std::vector<RoutedPoint> covering_check(const DescentProblem& problem, long height) {
    const auto candidates = candidate_twists(problem);
    const HyperellipticCurve curve = problem.curve();
    std::vector<RoutedPoint> out;
    for (const auto& pt : search_rational_points(curve, height)) {
        if (!pt.is_affine()) {
            out.push_back({pt, 1, 0, 0, true});
            continue;
        }
        const BigRational v1 = problem.f1()(pt.x());
        const BigRational v2 = problem.f2()(pt.x());
        const BigInt d = v1 != 0 ? squarefree_part(v1) : squarefree_part(v2);
        if (std::find(candidates.begin(), candidates.end(), d) == candidates.end())
            throw VerificationError("point " + pt.to_string() + " has twist " + d.get_str() +
                                    " outside the candidate set");
        const auto z = rational_square_root(v1 / d);
        auto t = rational_square_root(v2 / d);
        if (!z || !t) throw VerificationError("point " + pt.to_string() + " does not lift to its twist");
        const Cover cover = make_cover(problem, d);
        // Pick the sign of t so that d z t reproduces y.
        if (d * *z * *t != pt.y()) *t = -*t;
        const RationalPoint image = pushforward(cover, pt.x(), *z, *t);
        if (!(image == pt)) throw VerificationError("push-forward of the lift of " + pt.to_string() + " is wrong");
        out.push_back({pt, d, *z, *t, false});
    }
    return out;
}

DescentReport run_descent(const DescentProblem& problem, long height, std::uint64_t local_bound) {
    DescentReport rep;
    rep.resultant = problem.resultant();
    rep.radical = radical(rep.resultant);
    rep.candidates = candidate_twists(problem);
    for (const auto& d : rep.candidates) {
        const Cover cover = make_cover(problem, d);
        if (!real_filter(cover)) {
            rep.excluded_real.push_back(d);
            continue;
        }
        bool excluded = false;
        for (std::uint64_t q = 3; q <= local_bound && !excluded; q += 2) {
            if (!is_prime(q)) continue;
            if (!local_filter(cover, q)) {
                rep.excluded_local.emplace_back(d, q);
                excluded = true;
            }
        }
        if (!excluded) rep.surviving.push_back(d);
    }
    rep.routed_points = covering_check(problem, height);
    for (const auto& rp : rep.routed_points)
        if (std::find(rep.surviving.begin(), rep.surviving.end(), rp.d) == rep.surviving.end())
            throw VerificationError("a filter excluded twist " + rp.d.get_str() + " which carries " +
                                    rp.point.to_string());
    rep.points_at_infinity = rational_points_at_infinity(problem.curve());
    return rep;
}

}  // namespace chabauty
