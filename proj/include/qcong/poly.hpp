#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcong/errors.hpp"

namespace qcong {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Dense representation: coeffs[i] is the coefficient of q^i. Canonical form
/// is maintained by every constructor and operation: the highest stored
/// coefficient is nonzero, and the zero polynomial is the empty sequence.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return constant(1); }
    static IntPoly constant(mpz_class c);
    /// c * q^exp
    static IntPoly monomial(mpz_class c, std::size_t exp);

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is nullopt, never a sentinel integer.
    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    const std::vector<mpz_class>& coefficients() const { return c_; }
    /// Coefficient of q^i; zero beyond the stored range.
    const mpz_class& coeff(std::size_t i) const;
    const mpz_class& leading_coefficient() const;  // zero polynomial -> 0

    /// Largest bit-length over all coefficients (0 for the zero polynomial).
    std::size_t max_coeff_bits() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator-(const IntPoly& f, const IntPoly& g);
    friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
    friend bool operator==(const IntPoly& f, const IntPoly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const IntPoly& f, const IntPoly& g) { return !(f == g); }

    std::string str() const;  // human-readable, e.g. "1 + 2*q + q^3"

private:
    void trim();
    std::vector<mpz_class> c_;
};

/// exact_div failed: no integer-coefficient quotient exists. Carries the
/// remainder at the point division broke down.
struct InexactDivision : Error {
    explicit InexactDivision(IntPoly rem)
        : Error("inexact polynomial division, remainder " + rem.str()),
          remainder(std::move(rem)) {}
    IntPoly remainder;
};

/// Euclidean division by a divisor with leading coefficient +1 or -1; stays
/// over the integers. Returns (quot, rem) with f = quot*g + rem and
/// deg(rem) < deg(g) or rem = 0.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g);

/// Exact quotient h with f = g*h; throws InexactDivision if none exists.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// f^e by repeated squaring; f^0 = 1.
IntPoly pow(const IntPoly& f, unsigned long e);

/// Horner evaluation at an integer point.
mpz_class eval_int(const IntPoly& f, const mpz_class& x);

/// Substitutes q -> q^t (t >= 1): coefficient of q^i moves to q^{i*t}.
IntPoly compose_qpow(const IntPoly& f, unsigned long t);

namespace detail {
std::vector<mpz_class> mul_schoolbook(const std::vector<mpz_class>& f,
                                      const std::vector<mpz_class>& g);
std::vector<mpz_class> mul_karatsuba(const std::vector<mpz_class>& f,
                                     const std::vector<mpz_class>& g,
                                     std::size_t threshold);
}  // namespace detail

/// Degree threshold below which multiplication uses schoolbook convolution;
/// Karatsuba splitting above. Must not affect results (differential-tested).
inline constexpr std::size_t kKaratsubaThreshold = 64;

/// Multiplication with an explicit threshold; exposed for differential tests.
IntPoly mul_with_threshold(const IntPoly& f, const IntPoly& g, std::size_t threshold);

/// Wire format: JSON array of base-10 coefficient strings, lowest degree
/// first, canonical form required on input.
std::vector<std::string> to_coeff_strings(const IntPoly& f);
IntPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs);

/// Exact fraction used for the claims' rational coefficient formulas.
/// Always stored in lowest terms with positive denominator.
class RationalScalar {
public:
    RationalScalar() : v_(0) {}
    RationalScalar(mpz_class num, mpz_class den);
    static RationalScalar from_integer(const mpz_class& n) { return RationalScalar(n, 1); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    /// Throws NonIntegralCoefficient unless denominator = 1.
    mpz_class to_integer() const;

    friend RationalScalar operator+(const RationalScalar& a, const RationalScalar& b);
    friend RationalScalar operator*(const RationalScalar& a, const RationalScalar& b);
    friend bool operator==(const RationalScalar& a, const RationalScalar& b) {
        return a.v_ == b.v_;
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

}  // namespace qcong
