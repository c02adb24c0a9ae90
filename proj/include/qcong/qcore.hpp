#pragma once

#include "qcong/poly.hpp"

namespace qcong {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
IntPoly q_number(unsigned long n);

/// [n]!_q = [n]_q [n-1]_q ... [1]_q; empty product = 1.
IntPoly q_factorial(unsigned long n);

/// Gaussian binomial coefficient binom(n, k)_q, degree k(n-k), positive
/// coefficients. Iterative prefix-product scheme: multiply by [n-k+j]_q then
/// exact-divide by [j]_q for j = 1..k. Every prefix is itself a Gaussian
/// binomial, so each division is exact. Throws InvalidRange if k > n.
IntPoly q_binomial(unsigned long n, unsigned long k);

/// Division-free Pascal-recurrence implementation,
/// binom(n,k)_q = binom(n-1,k-1)_q + q^k binom(n-1,k)_q.
/// Kept permanently as an independent oracle for q_binomial.
IntPoly q_binomial_pascal(unsigned long n, unsigned long k);

/// binom(n, k)_{q^t} = q_binomial(n, k) with q -> q^t.
IntPoly q_binomial_base(unsigned long n, unsigned long k, unsigned long t);

/// q-shifted factorial (q^a; q)_n = prod_{j=0}^{n-1} (1 - q^{a+j}).
/// Only the monomial first argument A = q^a is supported.
IntPoly q_shifted_factorial(unsigned long a, unsigned long n);

}  // namespace qcong
