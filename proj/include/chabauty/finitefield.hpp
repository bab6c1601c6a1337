#pragma once

// Arithmetic over F_p and F_{p^2} = F_p[t]/(t^2 - n) for word-sized odd
// primes p, plus the quadratic-residue helpers used by point counting.

#include <cstdint>
#include <vector>

#include "chabauty/exactmath.hpp"

namespace chabauty {

/// Largest prime accepted where a full table of F_p (or F_{p^2}) is built.
inline constexpr std::uint64_t kMaxTablePrime = 1'000'000;
inline constexpr std::uint64_t kMaxTableSize = 1'000'000;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
/// Inverse of a nonzero residue mod a prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

struct FpElement {
    std::uint64_t value = 0;
    std::uint64_t p = 0;

    FpElement() = default;
    FpElement(std::uint64_t v, std::uint64_t modulus) : value(v % modulus), p(modulus) {}

    friend bool operator==(const FpElement&, const FpElement&) = default;
    friend FpElement operator+(FpElement a, FpElement b);
    friend FpElement operator-(FpElement a, FpElement b);
    friend FpElement operator*(FpElement a, FpElement b);
};

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion.
/// Throws std::invalid_argument when p is even or composite.
int legendre(const BigInt& a, std::uint64_t p);
int legendre(std::uint64_t a, std::uint64_t p);

/// Membership table for the squares of F_p (0 included).
class SquaresTable {
public:
    explicit SquaresTable(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    bool contains(std::uint64_t residue) const { return is_square_[residue % p_]; }
    /// Sorted list of the distinct squares.
    std::vector<std::uint64_t> residues() const;

private:
    std::uint64_t p_;
    std::vector<bool> is_square_;
};

/// Convenience wrapper returning SquaresTable(p).residues().
std::vector<std::uint64_t> squares_table(std::uint64_t p);

/// A polynomial reduced once into F_p for repeated evaluation.
class FpPolynomial {
public:
    FpPolynomial(const IntPolynomial& f, std::uint64_t p);

    std::uint64_t modulus() const { return p_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t operator()(std::uint64_t x) const;

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

/// Horner evaluation of f at x in F_p.
FpElement eval_mod(const IntPolynomial& f, FpElement x);

/// Least positive quadratic nonresidue mod an odd prime.
std::uint64_t least_nonresidue(std::uint64_t p);

struct Fp2Element {
    std::uint64_t a = 0;  // a + b*t
    std::uint64_t b = 0;
    friend bool operator==(const Fp2Element&, const Fp2Element&) = default;
};

/// F_p[t]/(t^2 - n), n the least positive nonresidue.
class Fp2Field {
public:
    explicit Fp2Field(std::uint64_t p);
    /// Explicit nonresidue; verified.
    Fp2Field(std::uint64_t p, std::uint64_t nonresidue);

    std::uint64_t p() const { return p_; }
    std::uint64_t nonresidue() const { return n_; }

    Fp2Element add(Fp2Element x, Fp2Element y) const;
    Fp2Element mul(Fp2Element x, Fp2Element y) const;
    Fp2Element pow(Fp2Element x, std::uint64_t e) const;
    /// Evaluates a polynomial already reduced into F_p.
    Fp2Element eval(const FpPolynomial& f, Fp2Element x) const;

    /// Element index a*p + b, the enumeration order used by tables.
    std::uint64_t index(Fp2Element x) const { return x.a * p_ + x.b; }

private:
    std::uint64_t p_;
    std::uint64_t n_;
};

/// True iff z = 0 or z^((p^2-1)/2) = 1.
bool fp2_is_square(const Fp2Field& field, Fp2Element z);

/// Squareness lookup over F_{p^2}; table when p^2 <= kMaxTableSize,
/// exponentiation otherwise.
class Fp2SquareTest {
public:
    explicit Fp2SquareTest(const Fp2Field& field);
    bool operator()(Fp2Element z) const;

private:
    Fp2Field field_;
    std::vector<bool> table_;
};

}  // namespace chabauty
