#pragma once

#include "qcong/poly.hpp"

namespace qcong {

/// The reduction modulus [p]_q^k, with its expanded polynomial built eagerly
/// at construction so a (p, k) sweep reuses it. Degree is k(p-1), leading
/// coefficient 1. p is not required to be prime here; primality is enforced
/// in the claims layer where the theorems demand it.
struct QModulus {
    unsigned long p;
    unsigned long k;
    IntPoly poly;
};

/// Throws InvalidParameter if p < 2 or k < 1.
QModulus modulus(unsigned long p, unsigned long k);

/// Canonical remainder of f modulo [p]_q^k: the unique representative of
/// degree < k(p-1), or zero.
IntPoly reduce(const IntPoly& f, const QModulus& M);

/// True iff M.poly divides f - g exactly. Computes the difference first,
/// then a single division.
bool congruent(const IntPoly& f, const IntPoly& g, const QModulus& M);

/// Same contract as reduce, computed by an independent top-down coefficient
/// elimination that shares no code with divrem_monic. Test oracle.
IntPoly reduce_oracle(const IntPoly& f, const QModulus& M);

}  // namespace qcong
