#include "qcong/congruence.hpp"

#include "qcong/qcore.hpp"

namespace qcong {

QModulus modulus(unsigned long p, unsigned long k) {
    if (p < 2) throw InvalidParameter("modulus requires p >= 2");
    if (k < 1) throw InvalidParameter("modulus requires k >= 1");
    return QModulus{p, k, pow(q_number(p), k)};
}

IntPoly reduce(const IntPoly& f, const QModulus& M) {
    return divrem_monic(f, M.poly).second;
}

bool congruent(const IntPoly& f, const IntPoly& g, const QModulus& M) {
    return reduce(f - g, M).is_zero();
}

IntPoly reduce_oracle(const IntPoly& f, const QModulus& M) {
    const std::size_t dm = *M.poly.degree();
    const auto& m = M.poly.coefficients();
    std::vector<mpz_class> r = f.coefficients();
    // Peel the top coefficient by subtracting that multiple of the shifted
    // modulus until the degree drops below deg M. The modulus is monic, so
    // each peel clears one position exactly.
    while (r.size() > dm) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.size() <= dm) break;
        const mpz_class lead = r.back();
        const std::size_t shift = r.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) r[shift + i] -= lead * m[i];
    }
    return IntPoly(std::move(r));
}

}  // namespace qcong
