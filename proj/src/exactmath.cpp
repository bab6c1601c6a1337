#include "chabauty/exactmath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chabauty {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1, BigInt(0));
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_roots(std::span<const BigInt> roots) {
    IntPolynomial out = constant(1);
    for (const auto& r : roots) out *= IntPolynomial(std::vector<BigInt>{-r, BigInt(1)});
    return out;
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRational IntPolynomial::operator()(const BigRational& x) const {
    if (is_zero()) return 0;
    BigInt h = homogeneous(x.get_num(), x.get_den());
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), static_cast<unsigned long>(degree()));
    return make_rational(h, den);
}

BigInt IntPolynomial::homogeneous(const BigInt& u, const BigInt& w) const {
    // Horner in u with the running power of w folded into each coefficient.
    BigInt acc = 0;
    BigInt wpow = 1;
    for (int i = degree(); i >= 0; --i) {
        acc = acc * u + coeffs_[static_cast<std::size_t>(i)] * wpow;
        wpow *= w;
    }
    return acc;
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
    IntPolynomial result = constant(1);
    IntPolynomial base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        BigInt c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigInt a = abs(c);
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return sign > 0 ? det : BigInt(-det);
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
    const int m = f.degree();
    const int n = g.degree();
    const auto size = static_cast<std::size_t>(m + n);
    if (size == 0) return 1;
    std::vector<std::vector<BigInt>> syl(size, std::vector<BigInt>(size, BigInt(0)));
    // n shifted rows of f, then m shifted rows of g; coefficients highest first.
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i)
            syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = g.coeff(n - i);
    return bareiss_determinant(std::move(syl));
}

BigInt discriminant(const IntPolynomial& f) {
    const int d = f.degree();
    if (d < 2) throw std::invalid_argument("discriminant needs degree >= 2");
    BigInt r = resultant(f, f.derivative());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) q = -q;
    return q;
}

namespace {

// Strips every prime factor of n below the trial bound, reporting each one
// with its multiplicity. Leaves the cofactor (1 or a prime) in n.
template <typename Visit>
void trial_factor(BigInt n, Visit&& visit) {
    n = abs(n);
    for (unsigned long p : {2UL, 3UL}) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e) visit(BigInt(p), e);
    }
    // 6k +- 1 wheel
    BigInt p = 5;
    unsigned step = 2;
    while (p * p <= n) {
        int e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        if (e) visit(p, e);
        p += step;
        step = 6 - step;
    }
    if (n > 1) visit(n, 1);
}

}  // namespace

std::vector<BigInt> prime_divisors(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("prime divisors of zero");
    std::vector<BigInt> out;
    trial_factor(n, [&](const BigInt& p, int) { out.push_back(p); });
    return out;
}

BigInt radical(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("radical of zero");
    BigInt r = 1;
    trial_factor(n, [&](const BigInt& p, int) { r *= p; });
    return r;
}

BigInt squarefree_part(const BigInt& n) {
    if (n == 0) throw std::invalid_argument("squarefree part of zero");
    // A perfect-square cofactor short-circuits the trial division.
    BigInt a = abs(n);
    BigInt d = 1;
    for (unsigned long p = 2; p < 1000 && a > 1; ++p) {
        int e = 0;
        while (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
            mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), p);
            ++e;
        }
        if (e % 2) d *= p;
    }
    if (!is_perfect_square(a)) {
        trial_factor(a, [&](const BigInt& p, int e) {
            if (e % 2) d *= p;
        });
    }
    return n < 0 ? BigInt(-d) : d;
}

BigInt squarefree_part(const BigRational& q) {
    if (q == 0) throw std::invalid_argument("squarefree part of zero");
    return squarefree_part(BigInt(q.get_num() * q.get_den()));
}

BigInt isqrt(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n) {
    if (n < 0) return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

std::optional<BigRational> rational_square_root(const BigRational& q) {
    if (q < 0) return std::nullopt;
    BigInt rn = isqrt(q.get_num());
    if (rn * rn != q.get_num()) return std::nullopt;
    BigInt rd = isqrt(q.get_den());
    if (rd * rd != q.get_den()) return std::nullopt;
    return make_rational(rn, rd);
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1U) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1U;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t b : kBases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t mod_u64(const BigInt& a, std::uint64_t m) {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_ui();
}

IntPolynomial poly_mod_p(const IntPolynomial& f, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    std::vector<BigInt> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.emplace_back(static_cast<unsigned long>(mod_u64(a, p)));
    return IntPolynomial(std::move(c));
}

bool congruent_mod(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m) {
    IntPolynomial d = a - b;
    return std::all_of(d.coeffs().begin(), d.coeffs().end(),
                       [&](const BigInt& c) { return mpz_divisible_p(c.get_mpz_t(), m.get_mpz_t()) != 0; });
}

}  // namespace chabauty
