// Batch verifier CLI: parameter sweeps over primes and m-ranges for the
// Glaisher / Andrews q-congruence family, with JSON/CSV/human reports,
// an oracle cross-check mode, and a polynomial-kernel micro-benchmark.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcong/sweep.hpp"

namespace {

constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct CliOptions {
    std::string claims;
    qcong::SweepConfig cfg;
    std::string format = "human";
    std::string out;
};

void add_sweep_flags(CLI::App* cmd, CliOptions& o) {
    cmd->add_option("--claims", o.claims,
                    "Comma-separated claim names (default: all). Names: GLAISHER_BINOM, "
                    "GLAISHER_PROD, ANDREWS_Q, THEOREM1, LEMMA1, LEMMA2, ANDREWS_PROD_Q, "
                    "THEOREM2");
    cmd->add_option("--p-min", o.cfg.p_min, "Smallest prime to test");
    cmd->add_option("--p-max", o.cfg.p_max, "Largest prime to test");
    cmd->add_option("--m-min", o.cfg.m_min, "Smallest m");
    cmd->add_option("--m-max", o.cfg.m_max, "Largest m");
    cmd->add_option("--i-max", o.cfg.i_max, "Largest i (LEMMA2)");
    cmd->add_option("--s", o.cfg.s_set, "Powers s to test (LEMMA2)");
    cmd->add_option("--workers", o.cfg.workers, "Worker threads");
    cmd->add_option("--format", o.format, "Output format: json, csv, human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    cmd->add_option("--out", o.out, "Write the report to a file instead of stdout");
    cmd->add_flag("--negative-controls", o.cfg.negative_controls,
                  "Also run rhs+1 perturbations, which must fail");
    cmd->add_option("--degree-cap", o.cfg.degree_cap,
                    "Refuse claim instances whose lhs degree exceeds this");
}

int run_sweep_command(CliOptions& o, bool oracle) {
    if (!o.claims.empty()) {
        o.cfg.claims.clear();
        for (const auto& name : split(o.claims, ',')) {
            auto id = qcong::claim_from_name(name);
            if (!id) {
                std::cerr << "unknown claim name: " << name << "\n";
                return kExitUsage;
            }
            o.cfg.claims.push_back(*id);
        }
    }
    o.cfg.format = o.format == "json"  ? qcong::OutputFormat::Json
                   : o.format == "csv" ? qcong::OutputFormat::Csv
                                       : qcong::OutputFormat::Human;
    o.cfg.oracle_mode = oracle;

    qcong::SweepReport report;
    try {
        report = qcong::run_sweep(o.cfg);
    } catch (const qcong::InvalidParameter& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::string text;
    switch (o.cfg.format) {
        case qcong::OutputFormat::Json:
            text = qcong::report_to_json(report).dump(2) + "\n";
            break;
        case qcong::OutputFormat::Csv:
            text = qcong::report_to_csv(report);
            break;
        case qcong::OutputFormat::Human:
            text = qcong::report_to_human(report);
            if (report.records.empty()) text += "warning: no claim instances in range\n";
            break;
    }

    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            std::cerr << "cannot open output file: " << o.out << "\n";
            return kExitUsage;
        }
        f << text;
    }
    return qcong::report_exit_code(report);
}

int run_bench_command(const std::string& sizes_arg, const std::string& out) {
    std::vector<std::pair<long, long>> sizes;
    for (const auto& item : split(sizes_arg, ',')) {
        const auto parts = split(item, ':');
        if (parts.size() != 2) {
            std::cerr << "bad --sizes entry (want p:m): " << item << "\n";
            return kExitUsage;
        }
        try {
            sizes.emplace_back(std::stol(parts[0]), std::stol(parts[1]));
        } catch (const std::exception&) {
            std::cerr << "bad --sizes entry (want p:m): " << item << "\n";
            return kExitUsage;
        }
    }
    const std::string csv = qcong::run_bench(sizes);
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out);
        if (!f) {
            std::cerr << "cannot open output file: " << out << "\n";
            return kExitUsage;
        }
        f << csv;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verifier for q-analogue binomial congruences"};
    app.require_subcommand(1);
    app.set_version_flag("--version", qcong::kToolVersion);

    CliOptions verify_opts;
    CLI::App* verify = app.add_subcommand("verify", "Run a claim sweep");
    add_sweep_flags(verify, verify_opts);

    CliOptions oracle_opts;
    CLI::App* oracle =
        app.add_subcommand("oracle", "Run a claim sweep with independent-oracle cross-checks");
    add_sweep_flags(oracle, oracle_opts);

    std::string bench_sizes;
    std::string bench_out;
    CLI::App* bench = app.add_subcommand("bench", "Micro-benchmark the polynomial kernel");
    bench->add_option("--sizes", bench_sizes, "Comma-separated p:m pairs, e.g. 5:1,13:2");
    bench->add_option("--out", bench_out, "Write the CSV to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (verify->parsed()) return run_sweep_command(verify_opts, false);
    if (oracle->parsed()) return run_sweep_command(oracle_opts, true);
    if (bench->parsed()) return run_bench_command(bench_sizes, bench_out);
    return kExitUsage;
}
