#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"

namespace {

std::string binary_path() {
    const char* p = std::getenv("GWCUT_BIN");
    REQUIRE(p != nullptr);
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + binary_path() + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sample writes the tree text format deterministically") {
    auto a = run("sample --law poisson1 --n 10 --seed 1");
    CHECK(a.exit_code == 0);
    CHECK(a.output.substr(0, 3) == "10\n");
    auto b = run("sample --law poisson1 --n 10 --seed 1");
    CHECK(a.output == b.output);
    auto c = run("sample --law poisson1 --n 10 --seed 2");
    CHECK(a.output != c.output);
}

TEST_CASE("divisibility violation surfaces the span hint with exit code 2") {
    auto r = run("sample --law binary --n 10 --seed 1");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("divisible") != std::string::npos);
    CHECK(r.output.find("p=2") != std::string::npos);
}

TEST_CASE("missing seed is a usage error") {
    auto r = run("sample --law poisson1 --n 10");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cutstats on a small case emits a report") {
    auto r = run("cutstats --law poisson1 --n 200 --k 1 --reps 300 --seed 5 --threads 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"test\"") != std::string::npos);
    CHECK(r.output.find("cutstats_ks_vs_chi2k") != std::string::npos);
    CHECK(r.output.find("low_power") != std::string::npos);
}

TEST_CASE("cutstats with one replicate is flagged low power but passes") {
    auto r = run("cutstats --law poisson1 --n 50 --k 1 --reps 1 --seed 5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"low_power\": true") != std::string::npos);
}

TEST_CASE("cutstats csv output is deterministic and sorted") {
    auto a = run("cutstats --law poisson1 --n 50 --k 1 --reps 20 --seed 9 --format csv --sorted");
    auto b = run("cutstats --law poisson1 --n 50 --k 1 --reps 20 --seed 9 --format csv --sorted "
                 "--threads 4");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.substr(0, 25) == "replicate,n_cuts,normali");
}

TEST_CASE("verify --fast passes and is seed-stable on the exact suites") {
    auto r = run("verify --fast --seed 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"pass\": true") != std::string::npos);

    auto r2 = run("verify --fast --seed 99");
    CHECK(r2.exit_code == 0);
}

TEST_CASE("mutation hook makes the oracle suite fail") {
    auto r = run("verify --fast --seed 3", "GWCUT_MUTATE=1 ");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("matrix on a small case reports per-entry stats") {
    auto r = run("matrix --law poisson1 --n 300 --m 2 --reps 200 --cont-k 150 --cont-reps 100 "
                 "--seed 11 --ks-threshold 0.2 --cont-ks-threshold 0.3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("d0_1") != std::string::npos);
    CHECK(r.output.find("d1_2") != std::string::npos);
    CHECK(r.output.find("mean_gap") != std::string::npos);
}

}  // TEST_SUITE
