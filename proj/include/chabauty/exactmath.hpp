#pragma once

// Exact integer / rational arithmetic and integer-coefficient polynomials.
//
// BigInt and BigRational are the GMP C++ classes. Every other type in the
// library is built on top of these; nothing here touches floating point.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chabauty {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Dense univariate polynomial over Z, coefficients in ascending degree.
///
/// The stored vector never has a trailing zero, so the zero polynomial is
/// the empty vector and degree() of it is -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, int degree);
    static IntPolynomial x() { return monomial(1, 1); }
    /// (x - r_0)(x - r_1)...
    static IntPolynomial from_roots(std::span<const BigInt> roots);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of x^i; zero past the degree.
    BigInt coeff(int i) const;
    const BigInt& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    BigInt operator()(const BigInt& x) const;
    BigRational operator()(const BigRational& x) const;
    /// w^d * f(u/w) with d = degree(); exact integer for integer u, w.
    BigInt homogeneous(const BigInt& u, const BigInt& w) const;

    IntPolynomial derivative() const;
    IntPolynomial pow(unsigned e) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);
    IntPolynomial& operator*=(const IntPolynomial& o);
    IntPolynomial& operator*=(const BigInt& c);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
    friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Human-readable form, highest degree first, e.g. "x^5 + 121*x - 4".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// Resultant via fraction-free (Bareiss) elimination on the Sylvester
/// matrix. Throws std::invalid_argument on a zero polynomial.
BigInt resultant(const IntPolynomial& f, const IntPolynomial& g);

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f). Requires degree >= 2.
BigInt discriminant(const IntPolynomial& f);

/// Determinant of a square integer matrix (row-major), fraction-free.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m);

/// Distinct prime divisors of |n| by trial division, ascending. n != 0.
std::vector<BigInt> prime_divisors(const BigInt& n);

/// Product of the distinct primes dividing |n|. n != 0.
BigInt radical(const BigInt& n);

/// The unique squarefree d with n = d * m^2 (sign kept). n != 0.
BigInt squarefree_part(const BigInt& n);
/// Squarefree part of a nonzero rational a/b, i.e. of a*b.
BigInt squarefree_part(const BigRational& q);

/// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

/// Nonnegative rational square root if q is the square of a rational.
std::optional<BigRational> rational_square_root(const BigRational& q);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Least nonnegative residue of a mod m (m > 0).
std::uint64_t mod_u64(const BigInt& a, std::uint64_t m);

/// Coefficientwise reduction into [0, p). Throws if p is not prime.
IntPolynomial poly_mod_p(const IntPolynomial& f, std::uint64_t p);

/// True when every coefficient of a - b is divisible by m.
bool congruent_mod(const IntPolynomial& a, const IntPolynomial& b, const BigInt& m);

}  // namespace chabauty
