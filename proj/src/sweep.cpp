#include "qcong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "qcong/primes.hpp"
#include "qcong/qcore.hpp"

namespace qcong {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Task {
    ClaimId id;
    ClaimParams params;
    bool negative_control = false;
};

bool claim_in_hypothesis(ClaimId id, long p) {
    switch (id) {
        case ClaimId::GlaisherBinom:
        case ClaimId::GlaisherProd:
        case ClaimId::Theorem1:
        case ClaimId::Lemma1:
        case ClaimId::Theorem2:
            return p >= 5;
        case ClaimId::AndrewsQ:
        case ClaimId::Lemma2:
        case ClaimId::AndrewsProdQ:
            return p >= 3;  // odd prime
    }
    return false;
}

std::vector<Task> enumerate_tasks(const SweepConfig& cfg) {
    std::vector<ClaimId> claims = cfg.claims;
    std::sort(claims.begin(), claims.end());
    claims.erase(std::unique(claims.begin(), claims.end()), claims.end());

    std::vector<long> s_set = cfg.s_set;
    std::sort(s_set.begin(), s_set.end());
    s_set.erase(std::unique(s_set.begin(), s_set.end()), s_set.end());

    const auto primes = primes_in_range(std::max<long>(cfg.p_min, 2), std::max<long>(cfg.p_max, 0));

    std::vector<Task> tasks;
    for (ClaimId id : claims) {
        for (auto pu : primes) {
            const long p = static_cast<long>(pu);
            if (!claim_in_hypothesis(id, p)) continue;
            if (id == ClaimId::Lemma2) {
                for (long i = 0; i <= cfg.i_max; ++i) {
                    for (long s : s_set) {
                        tasks.push_back({id, ClaimParams{p, 0, i, s}, false});
                        if (cfg.negative_controls) {
                            tasks.push_back({id, ClaimParams{p, 0, i, s}, true});
                        }
                    }
                }
            } else {
                for (long m = cfg.m_min; m <= cfg.m_max; ++m) {
                    tasks.push_back({id, ClaimParams{p, m}, false});
                    if (cfg.negative_controls) {
                        tasks.push_back({id, ClaimParams{p, m}, true});
                    }
                }
            }
        }
    }
    return tasks;
}

SweepRecord run_task(const Task& task, const SweepConfig& cfg) {
    SweepRecord out;
    out.negative_control = task.negative_control;
    try {
        if (task.id == ClaimId::GlaisherBinom || task.id == ClaimId::GlaisherProd) {
            auto rec = task.id == ClaimId::GlaisherBinom
                           ? glaisher_binom(task.params.p, task.params.m)
                           : glaisher_prod(task.params.p, task.params.m);
            if (task.negative_control) {
                // rhs + 1 perturbation: lhs ≡ rhs + 1 (mod p^3) holds iff the
                // original residual is ≡ 1, i.e. never when the claim holds.
                const mpz_class p3 =
                    mpz_class(task.params.p) * task.params.p * task.params.p;
                const mpz_class res =
                    rec.holds ? mpz_class(0) : eval_int(rec.residual, 0);
                rec.holds = ((res - 1) % p3 == 0);
            }
            out.rec = rec;
            return out;
        }

        BuildOptions opts;
        opts.degree_cap = cfg.degree_cap;
        CongruenceClaim claim = build_claim(task.id, task.params, opts);
        if (task.negative_control) claim.rhs = claim.rhs + IntPoly::one();
        out.rec = verify(claim);

        if (cfg.oracle_mode && !task.negative_control) {
            BuildOptions oracle_opts = opts;
            oracle_opts.use_pascal_oracle = true;
            const CongruenceClaim claim2 = build_claim(task.id, task.params, oracle_opts);
            const IntPoly rem2 = reduce_oracle(claim2.lhs - claim2.rhs, claim2.mod);
            const bool holds2 = rem2.is_zero();
            out.inconsistent = (claim.lhs != claim2.lhs) || (claim.rhs != claim2.rhs) ||
                               (holds2 != out.rec.holds) || (rem2 != out.rec.residual);
        }
    } catch (const Error& e) {
        out.error = e.what();
        out.rec.id = task.id;
        out.rec.params = task.params;
    }
    return out;
}

}  // namespace

std::vector<ClaimId> all_claim_ids() {
    return {ClaimId::GlaisherBinom, ClaimId::GlaisherProd, ClaimId::AndrewsQ,
            ClaimId::Theorem1,      ClaimId::Lemma1,       ClaimId::Lemma2,
            ClaimId::AndrewsProdQ,  ClaimId::Theorem2};
}

SweepReport run_sweep(const SweepConfig& config) {
    if (config.p_min > config.p_max || config.m_min > config.m_max || config.workers < 1) {
        throw InvalidParameter("invalid sweep ranges or worker count");
    }
    const auto t0 = Clock::now();

    const std::vector<Task> tasks = enumerate_tasks(config);
    std::vector<SweepRecord> results(tasks.size());

    const int workers = std::min<int>(config.workers, std::max<std::size_t>(tasks.size(), 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) break;
            results[idx] = run_task(tasks[idx], config);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Tasks were generated in (claim, p, m, i, s) order and results are
    // stored by task index, so aggregation order is schedule-independent.
    SweepReport report;
    report.config = config;
    report.records = std::move(results);
    for (const auto& r : report.records) {
        if (!r.error.empty()) {
            ++report.summary.errors;
        } else if (r.negative_control) {
            r.passed() ? ++report.summary.controls_passed : ++report.summary.controls_failed;
        } else {
            r.rec.holds ? ++report.summary.holds : ++report.summary.fails;
        }
        if (r.inconsistent) ++report.summary.inconsistencies;
    }
    report.total_wall_time_ms = ms_since(t0);
    return report;
}

SweepReport run_oracle_mode(SweepConfig config) {
    config.oracle_mode = true;
    return run_sweep(config);
}

int report_exit_code(const SweepReport& report) {
    if (report.summary.fails > 0 || report.summary.controls_failed > 0 ||
        report.summary.inconsistencies > 0) {
        return 1;
    }
    return 0;
}

namespace {

nlohmann::json config_to_json(const SweepConfig& cfg) {
    nlohmann::json claims = nlohmann::json::array();
    for (ClaimId id : cfg.claims) claims.push_back(claim_name(id));
    const char* fmt = cfg.format == OutputFormat::Json   ? "json"
                      : cfg.format == OutputFormat::Csv ? "csv"
                                                        : "human";
    return {{"claims", claims},
            {"p_min", cfg.p_min},
            {"p_max", cfg.p_max},
            {"m_min", cfg.m_min},
            {"m_max", cfg.m_max},
            {"i_max", cfg.i_max},
            {"s_set", cfg.s_set},
            {"workers", cfg.workers},
            {"format", fmt},
            {"negative_controls", cfg.negative_controls},
            {"degree_cap", cfg.degree_cap},
            {"oracle_mode", cfg.oracle_mode}};
}

nlohmann::json record_to_json(const SweepRecord& r) {
    nlohmann::json j = {{"claim", claim_name(r.rec.id)},
                        {"p", r.rec.params.p},
                        {"m", r.rec.params.m},
                        {"holds", r.rec.holds},
                        {"lhs_degree", r.rec.lhs_degree},
                        {"max_coeff_bits", r.rec.max_coeff_bits},
                        {"wall_time_ms", r.rec.wall_time_ms}};
    if (r.rec.params.i) j["i"] = *r.rec.params.i;
    if (r.rec.params.s) j["s"] = *r.rec.params.s;
    if (!r.rec.holds && !r.rec.residual.is_zero()) {
        j["residual"] = to_coeff_strings(r.rec.residual);
    }
    if (r.negative_control) j["negative_control"] = true;
    if (r.inconsistent) j["inconsistent"] = true;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

}  // namespace

nlohmann::json report_to_json(const SweepReport& report) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : report.records) records.push_back(record_to_json(r));
    return {{"version", report.version},
            {"config", config_to_json(report.config)},
            {"records", records},
            {"summary",
             {{"holds", report.summary.holds},
              {"fails", report.summary.fails},
              {"errors", report.summary.errors},
              {"controls_passed", report.summary.controls_passed},
              {"controls_failed", report.summary.controls_failed},
              {"inconsistencies", report.summary.inconsistencies}}},
            {"total_wall_time_ms", report.total_wall_time_ms}};
}

std::string report_to_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "claim,p,m,i,s,holds,lhs_degree,max_coeff_bits,wall_time_ms,"
          "negative_control,inconsistent,error\n";
    for (const auto& r : report.records) {
        os << claim_name(r.rec.id) << ',' << r.rec.params.p << ',' << r.rec.params.m << ',';
        if (r.rec.params.i) os << *r.rec.params.i;
        os << ',';
        if (r.rec.params.s) os << *r.rec.params.s;
        os << ',' << (r.rec.holds ? "true" : "false") << ',' << r.rec.lhs_degree << ','
           << r.rec.max_coeff_bits << ',' << r.rec.wall_time_ms << ','
           << (r.negative_control ? "true" : "false") << ','
           << (r.inconsistent ? "true" : "false") << ',' << r.error << '\n';
    }
    return os.str();
}

std::string report_to_human(const SweepReport& report) {
    std::ostringstream os;
    os << "qcongruence " << report.version << "\n";
    for (const auto& r : report.records) {
        os << "  " << claim_name(r.rec.id) << " p=" << r.rec.params.p;
        if (r.rec.params.i) {
            os << " i=" << *r.rec.params.i << " s=" << *r.rec.params.s;
        } else {
            os << " m=" << r.rec.params.m;
        }
        if (r.negative_control) os << " [control]";
        if (!r.error.empty()) {
            os << "  ERROR: " << r.error;
        } else {
            os << "  " << (r.passed() ? "ok" : "FAIL");
            if (r.inconsistent) os << "  INCONSISTENT";
        }
        os << "\n";
    }
    os << "summary: " << report.summary.holds << " hold, " << report.summary.fails << " fail, "
       << report.summary.errors << " error";
    if (report.config.negative_controls) {
        os << ", controls " << report.summary.controls_passed << "/"
           << (report.summary.controls_passed + report.summary.controls_failed);
    }
    if (report.config.oracle_mode) {
        os << ", " << report.summary.inconsistencies << " inconsistencies";
    }
    os << " (" << report.total_wall_time_ms << " ms)\n";
    return os.str();
}

std::string run_bench(const std::vector<std::pair<long, long>>& sizes) {
    std::ostringstream os;
    os << "p,m,lhs_degree,max_coeff_bits,qbinom_iter_ms,qbinom_pascal_ms,reduce_ms,"
          "theorem1_ms\n";
    for (const auto& [p, m] : sizes) {
        auto t0 = Clock::now();
        const IntPoly b = q_binomial((m + 1) * p - 1, p - 1);
        const double iter_ms = ms_since(t0);

        t0 = Clock::now();
        const IntPoly b2 = q_binomial_pascal((m + 1) * p - 1, p - 1);
        const double pascal_ms = ms_since(t0);

        const QModulus M = modulus(p, 3);
        t0 = Clock::now();
        const IntPoly r = reduce(b, M);
        const double reduce_ms = ms_since(t0);
        (void)r;
        (void)b2;

        t0 = Clock::now();
        const auto rec = theorem1(p, m);
        const double thm_ms = ms_since(t0);

        os << p << ',' << m << ',' << rec.lhs_degree << ',' << rec.max_coeff_bits << ','
           << iter_ms << ',' << pascal_ms << ',' << reduce_ms << ',' << thm_ms << '\n';
    }
    return os.str();
}

}  // namespace qcong
