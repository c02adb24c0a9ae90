// End-to-end checks of the qverify binary: flags, formats, exit codes.
// argv[1] is the path to the built executable.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

std::string g_binary;

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("verify: all claims hold on a small grid, exit 0") {
    const auto r = run("verify --claims LEMMA1 --p-min 5 --p-max 13 --m-min 1 --m-max 3 "
                       "--format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["records"].size() == 12);
    CHECK(j["summary"]["holds"] == 12);
}

TEST_CASE("verify: a failing claim exits with the counterexample code") {
    const auto r = run("verify --claims THEOREM1 --p-min 5 --p-max 7 --m-min 1 --m-max 1 "
                       "--format json");
    CHECK(r.exit_code == 1);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["summary"]["fails"] == 2);
    CHECK(j["records"][0].contains("residual"));
}

TEST_CASE("verify: csv and human formats") {
    const auto csv = run("verify --claims ANDREWS_Q --p-max 5 --m-max 1 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("claim,p,m,", 0) == 0);

    const auto human = run("verify --claims ANDREWS_Q --p-max 5 --m-max 1");
    CHECK(human.exit_code == 0);
    CHECK(human.output.find("summary:") != std::string::npos);
}

TEST_CASE("verify: empty prime range warns, exit 0") {
    const auto r = run("verify --p-min 24 --p-max 28");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("warning") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("verify --claims BOGUS").exit_code == 2);
    CHECK(run("verify --p-min 10 --p-max 5").exit_code == 2);
    CHECK(run("verify --no-such-flag").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("bench --sizes 5").exit_code == 2);
}

TEST_CASE("oracle mode on the lemma2 grid") {
    const auto r = run("oracle --claims LEMMA2 --p-max 7 --i-max 4 --format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["summary"]["inconsistencies"] == 0);
    CHECK(j["config"]["oracle_mode"] == true);
}

TEST_CASE("negative controls still exit 0 when they fail as required") {
    const auto r = run("verify --claims ANDREWS_Q --p-max 5 --m-max 1 --negative-controls "
                       "--format json");
    CHECK(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.output);
    CHECK(j["summary"]["controls_passed"] > 0);
    CHECK(j["summary"]["controls_failed"] == 0);
}

TEST_CASE("bench emits its table") {
    const auto r = run("bench --sizes 5:1,13:2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("p,m,lhs_degree", 0) == 0);
    CHECK(r.output.find("\n5,1,") != std::string::npos);
}

TEST_CASE("report can be written to a file") {
    const std::string path = "cli_test_report.json";
    const auto r = run("verify --claims GLAISHER_BINOM --p-min 5 --p-max 7 --format json --out " +
                       path);
    CHECK(r.exit_code == 0);
    FILE* f = fopen(path.c_str(), "r");
    REQUIRE(f != nullptr);
    fclose(f);
    remove(path.c_str());
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_driver_test <path-to-qverify>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
