#include "chabauty/fixtures.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace chabauty {

namespace {

using P = IntPolynomial;

BigRational q(long n, long d = 1) { return make_rational(BigInt(n), BigInt(d)); }

BigInt pow_big(long b, unsigned long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
    return r;
}

P lin(long a, long b) { return P{b, a}; }  // a x + b

P xpow(int n) { return P::monomial(1, n); }

// (x, y) and (x, -y), or the single point when y = 0.
void pair(std::vector<RationalPoint>& pts, const BigRational& x, const BigRational& y) {
    pts.push_back(RationalPoint::affine(x, y));
    if (y != 0) pts.push_back(RationalPoint::affine(x, -y));
}

void inf_pair(std::vector<RationalPoint>& pts) {
    pts.push_back(RationalPoint::infinity_plus());
    pts.push_back(RationalPoint::infinity_minus());
}

FixtureExpectation expect(std::uint64_t p, std::optional<std::uint64_t> n_fp, std::uint64_t bound,
                          Classification c) {
    return {p, n_fp, bound, c};
}

Fixture grant() {
    const BigInt roots[] = {0, 1, 2, 5, 6};
    Fixture fx{"grant", "y^2 = x(x-1)(x-2)(x-5)(x-6), ten points meeting the bound at 7",
               HyperellipticCurve(P::from_roots(roots)), {}, true, 10, {}, false};
    auto& pts = fx.known_points;
    pts.push_back(RationalPoint::infinity_odd());
    for (long x : {0, 1, 2, 5, 6}) pair(pts, q(x), q(0));
    pair(pts, q(3), q(6));
    pair(pts, q(10), q(120));
    fx.expected = expect(7, 8, 10, Classification::PotentiallySharp);
    return fx;
}

Fixture triangles() {
    const P cubic{6, -1, 0, 1};
    Fixture fx{"triangles", "y^2 = (x^3 - x + 6)^2 - 32, ten points meeting the bound at 5",
               HyperellipticCurve(cubic * cubic - P::constant(32)), {}, true, 6, {}, false};
    auto& pts = fx.known_points;
    inf_pair(pts);
    for (long x : {0, 1, -1}) pair(pts, q(x), q(2));
    pair(pts, q(5, 6), q(217, 216));
    fx.expected = expect(5, 8, 10, Classification::PotentiallySharp);
    return fx;
}

Fixture family_member(long k, bool plus) {
    const long m = 11 * k + (plus ? 3 : -3);
    Fixture fx{std::string(plus ? "ck_plus_" : "ck_minus_") + std::to_string(k),
               "y^2 = x^5 + 11x^4 + (11k " + std::string(plus ? "+" : "-") + " 3)^2 with k = " + std::to_string(k),
               HyperellipticCurve(xpow(5) + P::monomial(11, 4) + P::constant(BigInt(m) * m)),
               {},
               true,
               11,
               {},
               false};
    auto& pts = fx.known_points;
    pts.push_back(RationalPoint::infinity_odd());
    pair(pts, q(0), q(std::labs(m)));
    pair(pts, q(-11), q(std::labs(m)));
    fx.expected = expect(11, 3, 5, Classification::PotentiallySharp);
    return fx;
}

Fixture descent_example() {
    Fixture fx{"descent23", "y^2 = (x^6 + 11x^5 + 64x + 729)(x^5 + 11x^4 + 64), split for two-cover descent",
               HyperellipticCurve(descent_f2() * descent_f1()), {}, true, 11, {}, false};
    auto& pts = fx.known_points;
    pts.push_back(RationalPoint::infinity_odd());
    pair(pts, q(0), q(216));
    pair(pts, q(-11), q(40));
    return fx;
}

Fixture minimal() {
    Fixture fx{"minimal", "y^2 = x^5 + 121x - 4, three points and a single residue disc at 11",
               HyperellipticCurve(xpow(5) + P{-4, 121}), {}, true, 121, {}, false};
    auto& pts = fx.known_points;
    pts.push_back(RationalPoint::infinity_odd());
    pair(pts, q(4, 121), make_rational(BigInt(32), pow_big(11, 5)));
    fx.expected = expect(11, 1, 3, Classification::PotentiallySharp);
    return fx;
}

Fixture excessive5() {
    // x (2 (x - 25)(4x - 25)(x^3 - 8x^2) + 64)
    const P inner = P::constant(2) * lin(1, -25) * lin(4, -25) * P{0, 0, -8, 1} + P::constant(64);
    Fixture fx{"excessive5", "y^2 = 8x^6 - 314x^5 + 3250x^4 - 10000x^3 + 64x, five points over a bound of 3 at 5",
               HyperellipticCurve(P::x() * inner), {}, false, 25, {}, false};
    auto& pts = fx.known_points;
    pair(pts, q(0), q(0));
    pair(pts, q(25, 4), q(20));
    pair(pts, q(25), q(40));
    fx.expected = expect(5, 1, 3, Classification::Excessive);
    return fx;
}

Fixture excessive11() {
    Fixture fx{"excessive11", "y^2 = x^5 - 12(121x - 1)(121x - 4), five points over a bound of 3 at 11",
               HyperellipticCurve(xpow(5) - P::constant(12) * lin(121, -1) * lin(121, -4)), {}, false, 121, {},
               false};
    auto& pts = fx.known_points;
    pts.push_back(RationalPoint::infinity_odd());
    pair(pts, q(1, 121), make_rational(BigInt(1), pow_big(11, 5)));
    pair(pts, q(4, 121), make_rational(BigInt(32), pow_big(11, 5)));
    fx.expected = expect(11, 1, 3, Classification::Excessive);
    return fx;
}

Fixture c3() {
    Fixture fx{"c3", "y^2 = x^7 - (49x - 1)(49x - 36)(x + 1), genus 3 at p = 7",
               HyperellipticCurve(xpow(7) - lin(49, -1) * lin(49, -36) * lin(1, 1)), {}, true, 49, {}, false};
    auto& pts = fx.known_points;
    pts.push_back(RationalPoint::infinity_odd());
    pair(pts, q(1, 49), make_rational(BigInt(1), pow_big(7, 7)));
    pair(pts, q(36, 49), make_rational(pow_big(6, 7), pow_big(7, 7)));
    fx.expected = expect(7, 1, 5, Classification::PotentiallySharp);
    return fx;
}

Fixture c4() {
    Fixture fx{"c4", "y^2 = x^10 - (11x - 3)(11x - 4)(11x - 6), genus 4 at p = 11",
               HyperellipticCurve(xpow(10) - lin(11, -3) * lin(11, -4) * lin(11, -6)), {}, true, 11, {}, false};
    auto& pts = fx.known_points;
    inf_pair(pts);
    for (long a : {3, 4, 6}) pair(pts, q(a, 11), make_rational(pow_big(a, 5), pow_big(11, 5)));
    fx.expected = expect(11, 2, 8, Classification::PotentiallySharp);
    return fx;
}

Fixture c5() {
    Fixture fx{"c5", "y^2 = x^12 - (13x - 1)(13x - 2)(13x - 3)(13x - 12), genus 5 at p = 13",
               HyperellipticCurve(xpow(12) - lin(13, -1) * lin(13, -2) * lin(13, -3) * lin(13, -12)),
               {},
               true,
               13,
               {},
               false};
    auto& pts = fx.known_points;
    inf_pair(pts);
    for (long a : {1, 2, 3, 12}) pair(pts, q(a, 13), make_rational(pow_big(a, 6), pow_big(13, 6)));
    fx.expected = expect(13, 2, 10, Classification::PotentiallySharp);
    return fx;
}

Fixture genus4() {
    const P t = xpow(2) * lin(1, -11) * lin(1, -22) * lin(1, -33);
    Fixture fx{"genus4", "y^2 = x^4 (x - 11)^2 (x - 22)^2 (x - 33)^2 + 1, reducing to x^10 + 1 mod 11",
               HyperellipticCurve(t * t + P::constant(1)), {}, true, 33, {}, false};
    auto& pts = fx.known_points;
    inf_pair(pts);
    for (long x : {0, 11, 22, 33}) pair(pts, q(x), q(1));
    fx.expected = expect(11, 4, 10, Classification::PotentiallySharp);
    return fx;
}

Fixture genus5() {
    const P t = xpow(2) * P{-169, 0, 9} * P{-169, 0, 16};
    Fixture fx{"genus5", "y^2 = x^4 (9x^2 - 169)^2 (16x^2 - 169)^2 + 144^2, reducing to x^12 + 1 mod 13",
               HyperellipticCurve(t * t + P::constant(144 * 144)), {}, true, 13, {}, false};
    auto& pts = fx.known_points;
    inf_pair(pts);
    pair(pts, q(0), q(144));
    for (long d : {3, 4})
        for (long s : {1, -1}) pair(pts, q(s * 13, d), q(144));
    fx.expected = expect(13, 4, 12, Classification::PotentiallySharp);
    return fx;
}

Fixture elkies() {
    const P cubic{-3, -5, -2, 2};
    Fixture fx{"elkies", "(2y)^2 = (2x^3 - 2x^2 - 5x - 3)^2 - 60x, the b = -5/2 member of an arithmetic-progression family",
               HyperellipticCurve(cubic * cubic - P{0, 60}), {}, false, 0, {}, true};
    auto& pts = fx.known_points;
    inf_pair(pts);
    pair(pts, q(0), q(3));
    pair(pts, q(1), q(2));
    pair(pts, q(-1), q(8));
    pair(pts, q(3), q(12));
    pair(pts, q(1, 2), q(7, 4));
    fx.expected = expect(7, 11, 13, Classification::Neither);
    return fx;
}

Fixture stoll13() {
    Fixture fx{"stoll13", "y^2 = (x + 2)(x^2 - 3x + 6)(4x^3 + 8x^2 - 3x + 3), thirteen points",
               HyperellipticCurve(lin(1, 2) * P{6, -3, 1} * P{3, -3, 8, 4}), {}, false, 0, {}, true};
    auto& pts = fx.known_points;
    inf_pair(pts);
    const std::pair<long, long> xy[] = {{-3, 24}, {-2, 0}, {-1, 10}, {0, 6}, {1, 12}, {4, 150}};
    for (const auto& [x, y] : xy) pair(pts, q(x), q(y));
    return fx;
}

Fixture stollheight() {
    Fixture fx{"stollheight", "y^2 = 25x^6 + 20x^5 - 76x^4 - 134x^3 + 124x^2 + 96x + 9, small canonical height",
               HyperellipticCurve(P{9, 96, 124, -134, -76, 20, 25}), {}, false, 0, {}, true};
    auto& pts = fx.known_points;
    inf_pair(pts);
    pair(pts, q(-3), q(108));
    pair(pts, q(-1), q(10));
    pair(pts, q(0), q(3));
    pair(pts, q(1), q(8));
    pair(pts, q(3, 2), q(45, 8));
    pair(pts, q(-3, 5), q(96, 25));
    return fx;
}

struct Entry {
    std::string id;
    std::function<Fixture()> make;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({"grant", grant});
        e.push_back({"triangles", triangles});
        for (long k : family_plus_ks())
            e.push_back({"ck_plus_" + std::to_string(k), [k] { return family_member(k, true); }});
        for (long k : family_minus_ks())
            e.push_back({"ck_minus_" + std::to_string(k), [k] { return family_member(k, false); }});
        e.push_back({"descent23", descent_example});
        e.push_back({"minimal", minimal});
        e.push_back({"excessive5", excessive5});
        e.push_back({"excessive11", excessive11});
        e.push_back({"c3", c3});
        e.push_back({"c4", c4});
        e.push_back({"c5", c5});
        e.push_back({"genus4", genus4});
        e.push_back({"genus5", genus5});
        e.push_back({"elkies", elkies});
        e.push_back({"stoll13", stoll13});
        e.push_back({"stollheight", stollheight});
        return e;
    }();
    return entries;
}

}  // namespace

const std::vector<long>& family_plus_ks() {
    static const std::vector<long> ks = {0, 1, 2, 3, 7, 10, 11, 12, 15, 21, 22, 31, 40, 42, 44, 47, 50};
    return ks;
}

const std::vector<long>& family_minus_ks() {
    static const std::vector<long> ks = {1, 4, 9, 15, 16, 17, 19, 27, 28, 31, 40, 41, 42, 43};
    return ks;
}

IntPolynomial descent_f1() { return IntPolynomial{64, 0, 0, 0, 11, 1}; }

IntPolynomial descent_f2() { return IntPolynomial{729, 64, 0, 0, 0, 11, 1}; }

std::vector<std::string> fixture_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.push_back(e.id);
    return ids;
}

Fixture load_fixture(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e.make();
    throw std::invalid_argument("unknown fixture '" + id + "'");
}

std::vector<Fixture> all_fixtures() {
    std::vector<Fixture> out;
    for (const auto& e : registry()) out.push_back(e.make());
    return out;
}

}  // namespace chabauty
