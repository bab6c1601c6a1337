#include "chabauty/simplicity.hpp"

#include <algorithm>
#include <stdexcept>

#include "chabauty/errors.hpp"

namespace chabauty {

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// (T^2 + aT + b)(T^2 + cT + e) = P for some integers a, c, given b e = p^2.
bool splits_with_constants(const WeilPolynomial& w, const BigInt& b, const BigInt& e) {
    const BigInt p = big(w.p);
    const BigInt& c1 = w.c1;
    const BigInt& c2 = w.c2;
    // a + c = c1 and a e + c b = p c1.
    if (b != e) {
        const BigInt num = p * c1 - c1 * b;
        const BigInt den = e - b;
        if (num % den != 0) return false;
        const BigInt a = num / den;
        const BigInt c = c1 - a;
        return b + e + a * c == c2;
    }
    // b = e: need c1 (p - b) = 0, then a c = c2 - 2b with a + c = c1.
    if (c1 * (p - b) != 0) return false;
    const BigInt disc = c1 * c1 - 4 * (c2 - 2 * b);
    return is_perfect_square(disc);
}

}  // namespace

IntPolynomial WeilPolynomial::polynomial() const {
    const BigInt P = big(p);
    return IntPolynomial(std::vector<BigInt>{P * P, P * c1, c2, c1, BigInt(1)});
}

bool WeilPolynomial::satisfies_weil_bounds() const {
    const BigInt P = big(p);
    if (c1 * c1 > 16 * P) return false;
    if (c1 * c1 - 4 * c2 + 8 * P < 0) return false;  // real roots
    const BigInt s = c2 + 2 * P;
    return s >= 0 && s * s >= 4 * c1 * c1 * P;
}

BigInt WeilPolynomial::n1() const { return big(p) + 1 + c1; }

BigInt WeilPolynomial::n2() const { return big(p) * big(p) + 1 - c1 * c1 + 2 * c2; }

WeilPolynomial weil_poly_genus2(const HyperellipticCurve& curve, std::uint64_t p) {
    if (curve.genus() != 2) throw std::invalid_argument("Frobenius polynomial requires genus 2");
    if (p > 1000) throw std::invalid_argument("p^2 must not exceed 10^6");
    if (!good_reduction(curve, p)) throw std::domain_error("bad reduction at " + std::to_string(p));
    const BigInt P = big(p);
    const BigInt n1 = big(count_points_fp(curve, p).total);
    const BigInt n2 = big(count_points_fp2(curve, p));
    WeilPolynomial w;
    w.p = p;
    w.c1 = n1 - P - 1;
    const BigInt twice = n2 - P * P - 1 + w.c1 * w.c1;
    if (twice % 2 != 0)
        throw VerificationError("N2 - p^2 - 1 + c1^2 is odd at p = " + std::to_string(p));
    w.c2 = twice / 2;
    if (!w.satisfies_weil_bounds())
        throw VerificationError("point counts violate the Weil bounds at p = " + std::to_string(p));
    return w;
}

bool is_ordinary(const WeilPolynomial& w) { return w.c2 % big(w.p) != 0; }

bool quartic_irreducible(const WeilPolynomial& w) {
    const IntPolynomial P = w.polynomial();
    const BigInt p = big(w.p);
    const BigInt divisors[] = {1, p, p * p};
    for (const auto& d : divisors)
        for (int s : {1, -1})
            if (P(BigInt(s * d)) == 0) return false;
    for (const auto& b : divisors)
        for (int s : {1, -1}) {
            const BigInt bb = s * b;
            const BigInt e = p * p / bb;
            if (splits_with_constants(w, bb, e)) return false;
        }
    return true;
}

SimplicityVerdict hz_check(const WeilPolynomial& w) {
    SimplicityVerdict v;
    v.note = "criterion stated for n > 2, applied with n = 2";
    if (!quartic_irreducible(w)) {
        v.clause = "quartic reducible";
        return v;
    }
    if (!is_ordinary(w)) {
        v.clause = "not ordinary";
        return v;
    }
    if (w.c1 == 0) {
        v.clause = "condition (1)";
        return v;
    }
    const BigInt disc = w.c1 * w.c1 - 4 * (w.c2 - 2 * big(w.p));
    if (is_perfect_square(disc)) {
        v.clause = "condition (3): K+ is not a field";
        return v;
    }
    const BigInt d = squarefree_part(disc);
    for (long c : kCyclotomicRealQuadratics)
        if (d == c) {
            v.clause = "condition (3): Q(sqrt(" + std::to_string(c) + ")) is a cyclotomic real subfield";
            return v;
        }
    v.kind = SimplicityVerdict::Kind::AbsolutelySimple;
    return v;
}

std::optional<SimplicityWitness> find_simplicity_prime(const HyperellipticCurve& curve, std::uint64_t p_max) {
    if (curve.genus() != 2) throw std::invalid_argument("simplicity search requires genus 2");
    if (p_max > 1000) throw std::invalid_argument("p_max must not exceed 1000");
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (!is_prime(p) || !good_reduction(curve, p)) continue;
        const WeilPolynomial w = weil_poly_genus2(curve, p);
        if (hz_check(w).absolutely_simple()) return SimplicityWitness{p, w};
    }
    return std::nullopt;
}

}  // namespace chabauty
