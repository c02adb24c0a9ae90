#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcong/claims.hpp"

namespace qcong {

inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { Json, Csv, Human };

std::vector<ClaimId> all_claim_ids();

struct SweepConfig {
    std::vector<ClaimId> claims = all_claim_ids();
    long p_min = 3;
    long p_max = 31;
    long m_min = 1;
    long m_max = 4;
    long i_max = 12;            // Lemma2 only
    std::vector<long> s_set = {1, 2, 3, 4};  // Lemma2 only
    int workers = 1;
    OutputFormat format = OutputFormat::Human;
    bool negative_controls = false;
    long degree_cap = kDefaultDegreeCap;
    bool oracle_mode = false;
};

/// One sweep row: either a verification result, or the error that stopped
/// this instance (errors never abort the sweep). Negative-control rows hold
/// the perturbed claim's outcome; they pass when holds = false.
struct SweepRecord {
    VerificationRecord rec;
    bool negative_control = false;
    bool inconsistent = false;  // oracle mode: the two routes disagreed
    std::string error;          // nonempty iff the builder threw

    bool passed() const {
        if (!error.empty()) return false;
        return negative_control ? !rec.holds : rec.holds;
    }
};

struct SweepSummary {
    long holds = 0;
    long fails = 0;
    long errors = 0;
    long controls_passed = 0;
    long controls_failed = 0;
    long inconsistencies = 0;
};

struct SweepReport {
    std::string version = kToolVersion;
    SweepConfig config;
    std::vector<SweepRecord> records;
    SweepSummary summary;
    double total_wall_time_ms = 0.0;
};

/// Enumerates primes in range, builds and checks every in-hypothesis claim
/// instance, aggregates in deterministic order (claim, p, m, i, s)
/// regardless of worker count or completion order.
SweepReport run_sweep(const SweepConfig& config);

/// run_sweep with every q-binomial recomputed through the Pascal oracle and
/// every reduction cross-checked against reduce_oracle; disagreements are
/// flagged as inconsistencies.
SweepReport run_oracle_mode(SweepConfig config);

/// Exit status contract: 0 all pass, 1 any failed claim / failed control /
/// inconsistency. (Usage errors are the CLI's code 2.)
int report_exit_code(const SweepReport& report);

nlohmann::json report_to_json(const SweepReport& report);
std::string report_to_csv(const SweepReport& report);
std::string report_to_human(const SweepReport& report);

/// Micro-benchmark over (p, m) sizes: times both q-binomial algorithms,
/// modulus reduction, and end-to-end THEOREM1 checking. Returns CSV.
std::string run_bench(const std::vector<std::pair<long, long>>& sizes);

}  // namespace qcong
