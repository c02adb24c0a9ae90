#include "qcong/claims.hpp"

#include <chrono>

#include "qcong/primes.hpp"
#include "qcong/qcore.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_prime(long p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) throw NotPrime(p);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw HypothesisViolated(what);
}

void check_degree_cap(long estimated_degree, long cap) {
    if (estimated_degree > cap) {
        throw ResourceCap("lhs degree " + std::to_string(estimated_degree) +
                          " exceeds cap " + std::to_string(cap));
    }
}

IntPoly binom(unsigned long n, unsigned long k, const BuildOptions& opts) {
    return opts.use_pascal_oracle ? q_binomial_pascal(n, k) : q_binomial(n, k);
}

mpz_class int_binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// (1-q)^2 [p]_q^2, the cofactor shared by the claims carrying a scalar
// correction term.
IntPoly correction_base(long p) {
    return pow((IntPoly::one() - IntPoly::monomial(1, 1)) * q_number(p), 2);
}

VerificationRecord make_int_record(ClaimId id, const ClaimParams& params,
                                   const mpz_class& lhs, const mpz_class& rhs,
                                   const mpz_class& mod, Clock::time_point t0) {
    VerificationRecord rec;
    rec.id = id;
    rec.params = params;
    mpz_class res = (lhs - rhs) % mod;
    rec.holds = (res == 0);
    if (!rec.holds) rec.residual = IntPoly::constant(res);
    rec.lhs_degree = 0;
    rec.max_coeff_bits =
        lhs == 0 ? 0 : static_cast<long>(mpz_sizeinbase(lhs.get_mpz_t(), 2));
    rec.wall_time_ms = ms_since(t0);
    return rec;
}

}  // namespace

const char* claim_name(ClaimId id) {
    switch (id) {
        case ClaimId::GlaisherBinom: return "GLAISHER_BINOM";
        case ClaimId::GlaisherProd: return "GLAISHER_PROD";
        case ClaimId::AndrewsQ: return "ANDREWS_Q";
        case ClaimId::Theorem1: return "THEOREM1";
        case ClaimId::Lemma1: return "LEMMA1";
        case ClaimId::Lemma2: return "LEMMA2";
        case ClaimId::AndrewsProdQ: return "ANDREWS_PROD_Q";
        case ClaimId::Theorem2: return "THEOREM2";
    }
    return "?";
}

std::optional<ClaimId> claim_from_name(const std::string& name) {
    for (ClaimId id : {ClaimId::GlaisherBinom, ClaimId::GlaisherProd, ClaimId::AndrewsQ,
                       ClaimId::Theorem1, ClaimId::Lemma1, ClaimId::Lemma2,
                       ClaimId::AndrewsProdQ, ClaimId::Theorem2}) {
        if (name == claim_name(id)) return id;
    }
    return std::nullopt;
}

RationalScalar theorem1_coefficient(long p, long m) {
    const mpz_class P = p, M = m;
    return RationalScalar(M * M * (P * P - 1), 8) +
           RationalScalar(M * (P - 1) * (7 * P - 5), 24);
}

CongruenceClaim build_claim(ClaimId id, const ClaimParams& params, const BuildOptions& opts) {
    const long p = params.p;
    const long m = params.m;

    switch (id) {
        case ClaimId::AndrewsQ: {
            require_prime(p);
            require(p >= 3, "ANDREWS_Q requires an odd prime");
            require(m >= 1, "ANDREWS_Q requires m >= 1");
            check_degree_cap(m * p * (p - 1), opts.degree_cap);
            CongruenceClaim c{id, params, {}, {}, modulus(p, 2), "eq7"};
            c.lhs = binom((m + 1) * p - 1, p - 1, opts);
            c.rhs = IntPoly::monomial(1, static_cast<std::size_t>(m) * p * (p - 1) / 2);
            return c;
        }
        case ClaimId::Theorem1: {
            require_prime(p);
            require(p >= 5, "THEOREM1 requires p >= 5");
            require(m >= 1, "THEOREM1 requires m >= 1");
            check_degree_cap(m * p * (p - 1), opts.degree_cap);
            const mpz_class c0 = theorem1_coefficient(p, m).to_integer();
            CongruenceClaim c{id, params, {}, {}, modulus(p, 3), "eq8"};
            c.lhs = binom((m + 1) * p - 1, p - 1, opts);
            c.rhs = IntPoly::monomial(1, static_cast<std::size_t>(m) * p * (p - 1) / 2) -
                    IntPoly::constant(c0) * correction_base(p);
            return c;
        }
        case ClaimId::Lemma1: {
            require_prime(p);
            require(p >= 5, "LEMMA1 requires p >= 5");
            require(m >= 1, "LEMMA1 requires m >= 1");
            check_degree_cap(m * p * p, opts.degree_cap);
            const mpz_class unit = RationalScalar(mpz_class(p) * p - 1, 12).to_integer();
            const mpz_class scalar = int_binomial(m + 1, 2) * unit;
            CongruenceClaim c{id, params, {}, {}, modulus(p, 3), "eq9"};
            c.lhs = binom((m + 1) * p, p, opts);
            c.rhs = q_binomial_base(m + 1, 1, static_cast<unsigned long>(p) * p) -
                    IntPoly::constant(scalar) * correction_base(p);
            return c;
        }
        case ClaimId::Lemma2: {
            require_prime(p);
            require(p >= 3, "LEMMA2 requires an odd prime");
            const long i = params.i.value_or(-1);
            const long s = params.s.value_or(-1);
            require(i >= 0, "LEMMA2 requires i >= 0");
            require(s >= 1, "LEMMA2 requires s >= 1");
            check_degree_cap(p * i, opts.degree_cap);
            CongruenceClaim c{id, params, {}, {}, modulus(p, s), "eq10"};
            c.lhs = IntPoly::monomial(1, static_cast<std::size_t>(p) * i);
            const IntPoly step = q_number(p) * (IntPoly::one() - IntPoly::monomial(1, 1));
            IntPoly term = IntPoly::one();  // [p]_q^k (1-q)^k
            IntPoly rhs;
            for (long k = 0; k < s; ++k) {
                IntPoly summand = IntPoly::constant(int_binomial(i, k)) * term;
                rhs = (k % 2 == 0) ? rhs + summand : rhs - summand;
                term = term * step;
            }
            c.rhs = rhs;
            return c;
        }
        case ClaimId::AndrewsProdQ: {
            require_prime(p);
            require(p >= 3, "ANDREWS_PROD_Q requires an odd prime");
            require(m >= 1, "ANDREWS_PROD_Q requires m >= 1");
            check_degree_cap((p - 1) * (m * p + 1) + (p - 1) * (p - 2) / 2, opts.degree_cap);
            const mpz_class rhs0 = RationalScalar((mpz_class(p) * p - 1) * p, 24).to_integer();
            const IntPoly numer =
                q_shifted_factorial(m * p + 1, p - 1) -
                IntPoly::monomial(1, static_cast<std::size_t>(m) * p * (p - 1) / 2) *
                    q_shifted_factorial(1, p - 1);
            const IntPoly denom =
                (IntPoly::one() - IntPoly::monomial(1, static_cast<std::size_t>(m + 1) * p)) *
                (IntPoly::one() - IntPoly::monomial(1, static_cast<std::size_t>(m) * p));
            CongruenceClaim c{id, params, {}, {}, modulus(p, 1), "eq12"};
            // An inexact division here would contradict the congruence as
            // stated; InexactDivision propagates as a distinguished finding.
            c.lhs = exact_div(numer, denom);
            c.rhs = IntPoly::constant(rhs0);
            return c;
        }
        case ClaimId::Theorem2: {
            require_prime(p);
            if (!(opts.allow_p3_theorem2 && p == 3)) {
                require(p >= 5, "THEOREM2 requires p >= 5");
            }
            require(m >= 1, "THEOREM2 requires m >= 1");
            check_degree_cap((p - 1) * (m * p + 1) + (p - 1) * (p - 2) / 2, opts.degree_cap);
            const mpz_class t =
                RationalScalar(mpz_class(m) * (m + 1) * (mpz_class(p) * p - 1) * p, 24)
                    .to_integer();
            CongruenceClaim c{id, params, {}, {}, modulus(p, 3), "eq13"};
            c.lhs = q_shifted_factorial(m * p + 1, p - 1) -
                    IntPoly::monomial(1, static_cast<std::size_t>(m) * p * (p - 1) / 2) *
                        q_shifted_factorial(1, p - 1);
            c.rhs = IntPoly::constant(t) * correction_base(p);
            return c;
        }
        case ClaimId::GlaisherBinom:
        case ClaimId::GlaisherProd:
            throw InvalidParameter("Glaisher claims are integer congruences; use "
                                   "glaisher_binom / glaisher_prod");
    }
    throw InvalidParameter("unknown claim id");
}

VerificationRecord verify(const CongruenceClaim& claim) {
    const auto t0 = Clock::now();
    VerificationRecord rec;
    rec.id = claim.id;
    rec.params = claim.params;
    rec.lhs_degree = claim.lhs.degree() ? static_cast<long>(*claim.lhs.degree()) : -1;
    rec.max_coeff_bits = static_cast<long>(claim.lhs.max_coeff_bits());
    rec.residual = reduce(claim.lhs - claim.rhs, claim.mod);
    rec.holds = rec.residual.is_zero();
    rec.wall_time_ms = ms_since(t0);
    return rec;
}

VerificationRecord glaisher_binom(long p, long m) {
    const auto t0 = Clock::now();
    require_prime(p);
    require(p >= 5, "Glaisher's congruence requires p >= 5");
    require(m >= 1, "Glaisher's congruence requires m >= 1");
    const mpz_class lhs = int_binomial(m * p + p - 1, p - 1);
    const mpz_class p3 = mpz_class(p) * p * p;
    return make_int_record(ClaimId::GlaisherBinom, {p, m}, lhs, 1, p3, t0);
}

VerificationRecord glaisher_prod(long p, long m) {
    const auto t0 = Clock::now();
    require_prime(p);
    require(p >= 5, "Glaisher's congruence requires p >= 5");
    require(m >= 1, "Glaisher's congruence requires m >= 1");
    mpz_class lhs = 1, rhs = 1;
    for (long j = 1; j <= p - 1; ++j) {
        lhs *= mpz_class(m) * p + j;
        rhs *= j;
    }
    const mpz_class p3 = mpz_class(p) * p * p;
    return make_int_record(ClaimId::GlaisherProd, {p, m}, lhs, rhs, p3, t0);
}

VerificationRecord andrews_q(long p, long m, const BuildOptions& opts) {
    return verify(build_claim(ClaimId::AndrewsQ, {p, m}, opts));
}

VerificationRecord theorem1(long p, long m, const BuildOptions& opts) {
    return verify(build_claim(ClaimId::Theorem1, {p, m}, opts));
}

VerificationRecord lemma1(long p, long m, const BuildOptions& opts) {
    return verify(build_claim(ClaimId::Lemma1, {p, m}, opts));
}

VerificationRecord lemma2(long p, long i, long s, const BuildOptions& opts) {
    ClaimParams params{p, 0, i, s};
    return verify(build_claim(ClaimId::Lemma2, params, opts));
}

VerificationRecord andrews_prod_q(long p, long m, const BuildOptions& opts) {
    return verify(build_claim(ClaimId::AndrewsProdQ, {p, m}, opts));
}

VerificationRecord theorem2(long p, long m, const BuildOptions& opts) {
    return verify(build_claim(ClaimId::Theorem2, {p, m}, opts));
}

VerificationRecord specialize_q1(const CongruenceClaim& claim) {
    const auto t0 = Clock::now();
    const IntPoly diff = claim.lhs - claim.rhs;
    const IntPoly h = exact_div(diff, claim.mod.poly);  // throws if claim false
    const mpz_class pk = eval_int(claim.mod.poly, 1);   // equals p^k
    const mpz_class lhs1 = eval_int(claim.lhs, 1);
    const mpz_class rhs1 = eval_int(claim.rhs, 1);

    VerificationRecord rec;
    rec.id = claim.id;
    rec.params = claim.params;
    rec.holds = (lhs1 - rhs1 == pk * eval_int(h, 1));
    rec.lhs_degree = 0;
    rec.max_coeff_bits =
        lhs1 == 0 ? 0 : static_cast<long>(mpz_sizeinbase(lhs1.get_mpz_t(), 2));
    if (!rec.holds) rec.residual = IntPoly::constant(lhs1 - rhs1);
    rec.wall_time_ms = ms_since(t0);
    return rec;
}

}  // namespace qcong
