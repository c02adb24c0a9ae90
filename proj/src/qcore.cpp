#include "qcong/qcore.hpp"

#include <algorithm>
#include <vector>

namespace qcong {

IntPoly q_number(unsigned long n) {
    std::vector<mpz_class> c(n, mpz_class(1));
    return IntPoly(std::move(c));
}

IntPoly q_factorial(unsigned long n) {
    IntPoly acc = IntPoly::one();
    for (unsigned long j = 2; j <= n; ++j) acc = acc * q_number(j);
    return acc;
}

IntPoly q_binomial(unsigned long n, unsigned long k) {
    if (k > n) throw InvalidRange("q_binomial requires k <= n");
    if (k > n - k) k = n - k;  // symmetry, fewer steps
    IntPoly acc = IntPoly::one();
    for (unsigned long j = 1; j <= k; ++j) {
        acc = exact_div(acc * q_number(n - k + j), q_number(j));
    }
    return acc;
}

IntPoly q_binomial_pascal(unsigned long n, unsigned long k) {
    if (k > n) throw InvalidRange("q_binomial requires k <= n");
    // Row-by-row in place: after processing row r, row[j] = binom(r, j)_q.
    // Entries above the current row start as the zero polynomial, which makes
    // the j = r case fall out of the same update.
    std::vector<IntPoly> row(k + 1);
    row[0] = IntPoly::one();
    for (unsigned long r = 1; r <= n; ++r) {
        for (unsigned long j = std::min(r, k); j >= 1; --j) {
            row[j] = row[j - 1] + IntPoly::monomial(1, j) * row[j];
        }
    }
    return row[k];
}

IntPoly q_binomial_base(unsigned long n, unsigned long k, unsigned long t) {
    if (t == 0) throw InvalidParameter("base change requires t >= 1");
    return compose_qpow(q_binomial(n, k), t);
}

IntPoly q_shifted_factorial(unsigned long a, unsigned long n) {
    IntPoly acc = IntPoly::one();
    for (unsigned long j = 0; j < n; ++j) {
        acc = acc * (IntPoly::one() - IntPoly::monomial(1, a + j));
    }
    return acc;
}

}  // namespace qcong
