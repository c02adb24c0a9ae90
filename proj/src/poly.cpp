#include "qcong/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace qcong {

namespace {
const mpz_class kZero = 0;
}

IntPoly IntPoly::constant(mpz_class c) {
    IntPoly p;
    if (c != 0) p.c_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::monomial(mpz_class c, std::size_t exp) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(exp, kZero);
        p.c_.push_back(std::move(c));
    }
    return p;
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& IntPoly::leading_coefficient() const {
    return c_.empty() ? kZero : c_.back();
}

std::size_t IntPoly::max_coeff_bits() const {
    std::size_t bits = 0;
    for (const auto& c : c_) {
        if (c == 0) continue;
        bits = std::max(bits, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    return bits;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly operator+(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    r.c_.resize(std::max(f.c_.size(), g.c_.size()), kZero);
    for (std::size_t i = 0; i < f.c_.size(); ++i) r.c_[i] = f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r.c_[i] += g.c_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& f, const IntPoly& g) {
    IntPoly r;
    r.c_.resize(std::max(f.c_.size(), g.c_.size()), kZero);
    for (std::size_t i = 0; i < f.c_.size(); ++i) r.c_[i] = f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r.c_[i] -= g.c_[i];
    r.trim();
    return r;
}

namespace detail {

std::vector<mpz_class> mul_schoolbook(const std::vector<mpz_class>& f,
                                      const std::vector<mpz_class>& g) {
    if (f.empty() || g.empty()) return {};
    std::vector<mpz_class> r(f.size() + g.size() - 1, kZero);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            // r[i+j] += f[i] * g[j], without a temporary
            mpz_addmul(r[i + j].get_mpz_t(), f[i].get_mpz_t(), g[j].get_mpz_t());
        }
    }
    return r;
}

namespace {

// r[off..] += a
void add_into(std::vector<mpz_class>& r, const std::vector<mpz_class>& a, std::size_t off) {
    if (r.size() < off + a.size()) r.resize(off + a.size(), kZero);
    for (std::size_t i = 0; i < a.size(); ++i) r[off + i] += a[i];
}

void sub_into(std::vector<mpz_class>& r, const std::vector<mpz_class>& a, std::size_t off) {
    if (r.size() < off + a.size()) r.resize(off + a.size(), kZero);
    for (std::size_t i = 0; i < a.size(); ++i) r[off + i] -= a[i];
}

std::vector<mpz_class> add_vecs(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(std::max(a.size(), b.size()), kZero);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

}  // namespace

std::vector<mpz_class> mul_karatsuba(const std::vector<mpz_class>& f,
                                     const std::vector<mpz_class>& g,
                                     std::size_t threshold) {
    if (std::min(f.size(), g.size()) <= threshold) return mul_schoolbook(f, g);

    const std::size_t half = std::max(f.size(), g.size()) / 2;
    if (half == 0) return mul_schoolbook(f, g);
    const auto split = [half](const std::vector<mpz_class>& v) {
        std::vector<mpz_class> lo(v.begin(), v.begin() + std::min(half, v.size()));
        std::vector<mpz_class> hi(v.begin() + std::min(half, v.size()), v.end());
        return std::pair{std::move(lo), std::move(hi)};
    };
    auto [f0, f1] = split(f);
    auto [g0, g1] = split(g);

    auto z0 = mul_karatsuba(f0, g0, threshold);
    auto z2 = mul_karatsuba(f1, g1, threshold);
    auto zm = mul_karatsuba(add_vecs(f0, f1), add_vecs(g0, g1), threshold);

    std::vector<mpz_class> r(f.size() + g.size() - 1, kZero);
    add_into(r, z0, 0);
    add_into(r, z2, 2 * half);
    add_into(r, zm, half);
    sub_into(r, z0, half);
    sub_into(r, z2, half);
    return r;
}

}  // namespace detail

IntPoly mul_with_threshold(const IntPoly& f, const IntPoly& g, std::size_t threshold) {
    return IntPoly(detail::mul_karatsuba(f.coefficients(), g.coefficients(), threshold));
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    return mul_with_threshold(f, g, kKaratsubaThreshold);
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw DivisionByZero{};
    const mpz_class& lc = g.leading_coefficient();
    if (lc != 1 && lc != -1) throw NonMonicDivisor{};
    if (lc == -1) {
        auto [quot, rem] = divrem_monic(f, -g);
        return {-quot, rem};
    }

    const std::size_t dg = *g.degree();
    if (f.is_zero() || *f.degree() < dg) return {IntPoly::zero(), f};

    std::vector<mpz_class> rem = f.coefficients();
    const auto& gc = g.coefficients();
    std::vector<mpz_class> quot(rem.size() - dg, kZero);
    for (std::size_t top = rem.size(); top-- > dg;) {
        if (rem[top] == 0) continue;
        const std::size_t shift = top - dg;
        quot[shift] = rem[top];
        for (std::size_t i = 0; i < dg; ++i) {
            mpz_submul(rem[shift + i].get_mpz_t(), quot[shift].get_mpz_t(), gc[i].get_mpz_t());
        }
        rem[top] = 0;
    }
    rem.resize(dg);
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    if (g.is_zero()) throw DivisionByZero{};
    if (f.is_zero()) return IntPoly::zero();

    const std::size_t dg = *g.degree();
    if (*f.degree() < dg) throw InexactDivision(f);

    // Integer long division with a divisibility check at each step. If the
    // leading coefficient of the running remainder is not divisible by the
    // leading coefficient of g, the quotient in Q[q] has a non-integer
    // coefficient, so no integer quotient exists.
    const mpz_class& lc = g.leading_coefficient();
    std::vector<mpz_class> rem = f.coefficients();
    const auto& gc = g.coefficients();
    std::vector<mpz_class> quot(rem.size() - dg, kZero);
    for (std::size_t top = rem.size(); top-- > dg;) {
        if (rem[top] == 0) continue;
        if (!mpz_divisible_p(rem[top].get_mpz_t(), lc.get_mpz_t())) {
            rem.resize(top + 1);
            throw InexactDivision(IntPoly(std::move(rem)));
        }
        const std::size_t shift = top - dg;
        quot[shift] = rem[top] / lc;
        for (std::size_t i = 0; i < dg; ++i) {
            mpz_submul(rem[shift + i].get_mpz_t(), quot[shift].get_mpz_t(), gc[i].get_mpz_t());
        }
        rem[top] = 0;
    }
    IntPoly r(std::move(rem));
    if (!r.is_zero()) throw InexactDivision(std::move(r));
    return IntPoly(std::move(quot));
}

IntPoly pow(const IntPoly& f, unsigned long e) {
    IntPoly result = IntPoly::one();
    IntPoly base = f;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

mpz_class eval_int(const IntPoly& f, const mpz_class& x) {
    mpz_class acc = 0;
    const auto& c = f.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x + c[i];
    }
    return acc;
}

IntPoly compose_qpow(const IntPoly& f, unsigned long t) {
    if (t == 0) throw InvalidParameter("compose_qpow requires t >= 1");
    if (t == 1 || f.is_zero()) return f;
    const auto& c = f.coefficients();
    std::vector<mpz_class> r((c.size() - 1) * t + 1, mpz_class(0));
    for (std::size_t i = 0; i < c.size(); ++i) r[i * t] = c[i];
    return IntPoly(std::move(r));
}

std::string IntPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> to_coeff_strings(const IntPoly& f) {
    std::vector<std::string> out;
    out.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) out.push_back(c.get_str());
    return out;
}

IntPoly poly_from_coeff_strings(const std::vector<std::string>& coeffs) {
    std::vector<mpz_class> c;
    c.reserve(coeffs.size());
    for (const auto& s : coeffs) {
        mpz_class v;
        if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0) {
            throw InvalidParameter("invalid coefficient string: \"" + s + "\"");
        }
        c.push_back(std::move(v));
    }
    if (!c.empty() && c.back() == 0) {
        throw InvalidParameter("coefficient array is not in canonical form (trailing zero)");
    }
    return IntPoly(std::move(c));
}

RationalScalar::RationalScalar(mpz_class num, mpz_class den) {
    if (den == 0) throw DivisionByZero{};
    v_ = mpq_class(std::move(num), std::move(den));
    v_.canonicalize();
}

mpz_class RationalScalar::to_integer() const {
    if (!is_integer()) {
        throw NonIntegralCoefficient("expected integer, got " + v_.get_str());
    }
    return v_.get_num();
}

RationalScalar operator+(const RationalScalar& a, const RationalScalar& b) {
    RationalScalar r;
    r.v_ = a.v_ + b.v_;
    r.v_.canonicalize();
    return r;
}

RationalScalar operator*(const RationalScalar& a, const RationalScalar& b) {
    RationalScalar r;
    r.v_ = a.v_ * b.v_;
    r.v_.canonicalize();
    return r;
}

}  // namespace qcong
