#pragma once

#include <optional>
#include <string>

#include "qcong/congruence.hpp"
#include "qcong/poly.hpp"

namespace qcong {

enum class ClaimId {
    GlaisherBinom,
    GlaisherProd,
    AndrewsQ,
    Theorem1,
    Lemma1,
    Lemma2,
    AndrewsProdQ,
    Theorem2,
};

const char* claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(const std::string& name);

struct ClaimParams {
    long p = 0;
    long m = 0;
    std::optional<long> i;  // Lemma2 only
    std::optional<long> s;  // Lemma2 only
};

/// A fully materialized congruence instance: both sides built exactly,
/// ready for checking by reduction.
struct CongruenceClaim {
    ClaimId id;
    ClaimParams params;
    IntPoly lhs;
    IntPoly rhs;
    QModulus mod;
    std::string eq_tag;
};

struct VerificationRecord {
    ClaimId id;
    ClaimParams params;
    bool holds = false;
    long lhs_degree = 0;
    long max_coeff_bits = 0;
    IntPoly residual;  // canonical remainder of lhs - rhs when the claim fails
    double wall_time_ms = 0.0;
};

/// Degree cap for claim builders; a lhs degree above it raises ResourceCap.
inline constexpr long kDefaultDegreeCap = 200000;

/// Options for claim construction. The oracle route rebuilds every
/// q-binomial through the Pascal recurrence instead of the default
/// iterative scheme; results must be identical.
struct BuildOptions {
    long degree_cap = kDefaultDegreeCap;
    bool use_pascal_oracle = false;
    bool allow_p3_theorem2 = false;  // probe p = 3 experimentally
};

/// Builds the q-polynomial claim instance for one of the six q-congruences
/// (AndrewsQ, Theorem1, Lemma1, Lemma2, AndrewsProdQ, Theorem2).
/// Throws NotPrime / HypothesisViolated / NonIntegralCoefficient /
/// InexactDivision / ResourceCap per the claim's contract.
CongruenceClaim build_claim(ClaimId id, const ClaimParams& params,
                            const BuildOptions& opts = {});

/// Checks a materialized claim by exact reduction of lhs - rhs.
VerificationRecord verify(const CongruenceClaim& claim);

/// The rational coefficient in THEOREM1's rhs: m^2(p^2-1)/8 + m(p-1)(7p-5)/24.
RationalScalar theorem1_coefficient(long p, long m);

// Convenience builders, one per congruence. The two Glaisher claims are
// integer congruences mod p^3 and are checked directly in big-integer
// arithmetic; the rest build polynomials and reduce.
VerificationRecord glaisher_binom(long p, long m);
VerificationRecord glaisher_prod(long p, long m);
VerificationRecord andrews_q(long p, long m, const BuildOptions& opts = {});
VerificationRecord theorem1(long p, long m, const BuildOptions& opts = {});
VerificationRecord lemma1(long p, long m, const BuildOptions& opts = {});
VerificationRecord lemma2(long p, long i, long s, const BuildOptions& opts = {});
VerificationRecord andrews_prod_q(long p, long m, const BuildOptions& opts = {});
VerificationRecord theorem2(long p, long m, const BuildOptions& opts = {});

/// q = 1 specialization of a verified claim: divides out the modulus exactly
/// and checks the integer identity lhs(1) - rhs(1) = p^k * h(1), recovering
/// the classical congruence mod p^k. Throws InexactDivision if the claim
/// does not actually hold.
VerificationRecord specialize_q1(const CongruenceClaim& claim);

}  // namespace qcong
