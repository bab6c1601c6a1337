#include "chabauty/finitefield.hpp"

#include <stdexcept>
#include <string>

namespace chabauty {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1U) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1U;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("zero has no inverse");
    return pow_mod(a, p - 2, p);
}

namespace {

void require_same_field(const FpElement& a, const FpElement& b) {
    if (a.p != b.p) throw std::invalid_argument("F_p elements with different moduli");
}

void require_odd_prime(std::uint64_t p) {
    if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not an odd prime");
}

}  // namespace

FpElement operator+(FpElement a, FpElement b) {
    require_same_field(a, b);
    std::uint64_t s = a.value + b.value;
    return {s >= a.p ? s - a.p : s, a.p};
}

FpElement operator-(FpElement a, FpElement b) {
    require_same_field(a, b);
    return {a.value >= b.value ? a.value - b.value : a.value + a.p - b.value, a.p};
}

FpElement operator*(FpElement a, FpElement b) {
    require_same_field(a, b);
    return {mul_mod(a.value, b.value, a.p), a.p};
}

int legendre(std::uint64_t a, std::uint64_t p) {
    require_odd_prime(p);
    a %= p;
    if (a == 0) return 0;
    return pow_mod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int legendre(const BigInt& a, std::uint64_t p) {
    require_odd_prime(p);
    return legendre(mod_u64(a, p), p);
}

SquaresTable::SquaresTable(std::uint64_t p) : p_(p) {
    require_odd_prime(p);
    if (p > kMaxTablePrime) throw std::invalid_argument("squares table limited to p <= 10^6");
    is_square_.assign(p, false);
    for (std::uint64_t x = 0; x <= p / 2; ++x) is_square_[mul_mod(x, x, p)] = true;
}

std::vector<std::uint64_t> SquaresTable::residues() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t r = 0; r < p_; ++r)
        if (is_square_[r]) out.push_back(r);
    return out;
}

std::vector<std::uint64_t> squares_table(std::uint64_t p) { return SquaresTable(p).residues(); }

FpPolynomial::FpPolynomial(const IntPolynomial& f, std::uint64_t p) : p_(p) {
    c_.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c_.push_back(mod_u64(a, p));
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t FpPolynomial::operator()(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = mul_mod(acc, x, p_) + *it;
        if (acc >= p_) acc -= p_;
    }
    return acc;
}

FpElement eval_mod(const IntPolynomial& f, FpElement x) {
    return {FpPolynomial(f, x.p)(x.value), x.p};
}

std::uint64_t least_nonresidue(std::uint64_t p) {
    require_odd_prime(p);
    for (std::uint64_t n = 2; n < p; ++n)
        if (legendre(n, p) == -1) return n;
    throw std::logic_error("no quadratic nonresidue found");
}

Fp2Field::Fp2Field(std::uint64_t p) : p_(p), n_(least_nonresidue(p)) {}

Fp2Field::Fp2Field(std::uint64_t p, std::uint64_t nonresidue) : p_(p), n_(nonresidue % p) {
    if (legendre(n_, p_) != -1) throw std::invalid_argument("F_p^2 modulus needs a quadratic nonresidue");
}

Fp2Element Fp2Field::add(Fp2Element x, Fp2Element y) const {
    std::uint64_t a = x.a + y.a;
    std::uint64_t b = x.b + y.b;
    return {a >= p_ ? a - p_ : a, b >= p_ ? b - p_ : b};
}

Fp2Element Fp2Field::mul(Fp2Element x, Fp2Element y) const {
    // (a + bt)(c + dt) = ac + n*bd + (ad + bc)t
    std::uint64_t re = (mul_mod(x.a, y.a, p_) + mul_mod(n_, mul_mod(x.b, y.b, p_), p_)) % p_;
    std::uint64_t im = (mul_mod(x.a, y.b, p_) + mul_mod(x.b, y.a, p_)) % p_;
    return {re, im};
}

Fp2Element Fp2Field::pow(Fp2Element x, std::uint64_t e) const {
    Fp2Element r{1 % p_, 0};
    while (e) {
        if (e & 1U) r = mul(r, x);
        x = mul(x, x);
        e >>= 1U;
    }
    return r;
}

Fp2Element Fp2Field::eval(const FpPolynomial& f, Fp2Element x) const {
    Fp2Element acc{};
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = add(mul(acc, x), Fp2Element{*it, 0});
    return acc;
}

bool fp2_is_square(const Fp2Field& field, Fp2Element z) {
    if (z.a == 0 && z.b == 0) return true;
    const std::uint64_t p = field.p();
    const auto exponent = static_cast<std::uint64_t>((static_cast<unsigned __int128>(p) * p - 1) / 2);
    Fp2Element r = field.pow(z, exponent);
    return r.a == 1 && r.b == 0;
}

Fp2SquareTest::Fp2SquareTest(const Fp2Field& field) : field_(field) {
    const std::uint64_t p = field.p();
    if (p * p > kMaxTableSize) return;
    table_.assign(p * p, false);
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b) {
            Fp2Element z{a, b};
            table_[field.index(field.mul(z, z))] = true;
        }
}

bool Fp2SquareTest::operator()(Fp2Element z) const {
    if (table_.empty()) return fp2_is_square(field_, z);
    return table_[field_.index(z)];
}

}  // namespace chabauty
