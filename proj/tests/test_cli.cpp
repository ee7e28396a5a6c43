// Copyright 2026 The isinglab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end checks of the command line driver. The binary under test is
// passed as the first program argument; every invocation goes through the
// shell with stderr discarded, so assertions see exactly the payload a
// scripted consumer would.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = std::move(out);
    return result;
}

nlohmann::json parse(const RunResult& r) {
    REQUIRE(!r.output.empty());
    return nlohmann::json::parse(r.output);
}

int line_count(const std::string& text) {
    int lines = 0;
    for (char c : text) lines += c == '\n';
    return lines;
}

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

TEST_CASE("reproduce emits the closed-form table and flags the violation") {
    const RunResult full = run_cli("reproduce");
    CHECK(full.exit_code == 0);
    const nlohmann::json r = parse(full);
    CHECK(r.at("pass").get<bool>());
    CHECK(r.at("violation").get<bool>());
    CHECK(std::abs(r.at("ch")[0].at("measured").get<double>() -
                   (-(1.0 + kSqrt2) / 2.0)) <= 1e-12);
    CHECK(std::abs(r.at("chsh").at("measured").get<double>() -
                   (-2.0 * kSqrt2)) <= 1e-12);
    CHECK(r.at("correlations").size() == 4);
    CHECK(r.at("max_defect").get<double>() <= 1e-10);

    const nlohmann::json half = parse(run_cli("reproduce --lambda 0.5"));
    CHECK(!half.at("violation").get<bool>());
    CHECK(std::abs(half.at("ch")[0].at("measured").get<double>() -
                   (-(1.0 + 0.5 * kSqrt2) / 2.0)) <= 1e-12);

    const nlohmann::json flat = parse(run_cli("reproduce --lambda 0"));
    for (const auto& entry : flat.at("correlations"))
        CHECK(std::abs(entry.at("measured").get<double>()) <= 1e-12);
}

TEST_CASE("rerunning a command reproduces its payload byte for byte") {
    const std::vector<std::string> commands = {
        "reproduce --lambda 0.7",
        "verify-prop3 --lambda 0.9",
        "search --mode noncommuting --resolution 4 --lambda 1",
        "search --mode commuting --budget 3000 --seed 11",
        "bellmax --budget 50000 --seed 2",
        "classical-suite --seed 9",
        "censorship",
        "reproduce --format csv",
    };
    for (const std::string& command : commands) {
        CAPTURE(command);
        const RunResult first = run_cli(command);
        const RunResult second = run_cli(command);
        CHECK(first.exit_code == second.exit_code);
        CHECK(first.output == second.output);
        CHECK(!first.output.empty());
    }
}

TEST_CASE("screening verdict command distinguishes candidate vectors") {
    const RunResult good = run_cli("verify-prop3");
    CHECK(good.exit_code == 0);
    const nlohmann::json g = parse(good);
    CHECK(g.at("satisfied").get<bool>());
    CHECK(!g.at("commuting").get<bool>());
    CHECK(!g.at("trivial").get<bool>());
    CHECK(g.at("residuals").size() == 8);
    CHECK(g.at("worst_residual").get<double>() <= 1e-10);

    const RunResult bad = run_cli("verify-prop3 --c 1,0,0 --cprime 0,0,1");
    CHECK(bad.exit_code == 1);
    const nlohmann::json b = parse(bad);
    CHECK(!b.at("satisfied").get<bool>());
    CHECK(std::abs(b.at("worst_residual").get<double>() - kSqrt2 / 32.0) <=
          1e-12);

    const RunResult rotated = run_cli("verify-prop3 --c 0,0,1 --cprime 1,0,0");
    CHECK(rotated.exit_code == 0);
}

TEST_CASE("search scan collects the solution set") {
    const RunResult scan =
        run_cli("search --mode noncommuting --resolution 6");
    CHECK(scan.exit_code == 0);
    const nlohmann::json r = parse(scan);
    CHECK(r.at("satisfied").get<bool>());
    CHECK(r.at("best_residual").get<double>() <= 1e-10);
    const auto count = r.at("solution_count").get<long long>();
    CHECK(count >= 6 * 32);  // the guaranteed circle of screening vectors
    CHECK(r.at("solutions").size() == static_cast<std::size_t>(count));

    const RunResult floor = run_cli("search --mode commuting --budget 3000");
    CHECK(floor.exit_code == 1);
    const nlohmann::json f = parse(floor);
    CHECK(!f.at("satisfied").get<bool>());
    CHECK(f.at("best_residual").get<double>() > 1e-3);
    CHECK(f.at("best_coefficients").size() >= 1);
}

TEST_CASE("bell maximizer command reports the ceiling") {
    const RunResult singlet = run_cli("bellmax");
    CHECK(singlet.exit_code == 0);
    const nlohmann::json s = parse(singlet);
    CHECK(s.at("maximal").get<bool>());
    CHECK(std::abs(s.at("value").get<double>() - kSqrt2) <= 1e-4);
    CHECK(s.at("value").get<double>() <= kSqrt2 + 1e-9);
    CHECK(!s.at("budget_exhausted").get<bool>());

    for (int seed = 0; seed < 3; ++seed) {
        const RunResult random =
            run_cli("bellmax --state random --seed " + std::to_string(seed));
        CHECK(random.exit_code == 0);
        CHECK(parse(random).at("value").get<double>() <= kSqrt2 + 1e-6);
    }
}

TEST_CASE("censorship command verifies the conditional identities") {
    const RunResult run = run_cli("censorship");
    CHECK(run.exit_code == 0);
    const nlohmann::json r = parse(run);
    CHECK(r.at("verified").get<bool>());
    CHECK(r.at("conditional_defect").get<double>() <= 1e-12);
    CHECK(r.at("contexts").size() == 4);
    for (const auto& context : r.at("contexts")) {
        CHECK(std::abs(context.at("weight").get<double>() - 0.25) <= 1e-12);
        for (const auto& outcome : context.at("outcomes"))
            CHECK(outcome.at("defect").get<double>() <= 1e-12);
    }
}

TEST_CASE("classical suite command checks every bound") {
    for (const std::string seed : {"0", "31415"}) {
        const RunResult run = run_cli("classical-suite --seed " + seed);
        CHECK(run.exit_code == 0);
        const nlohmann::json r = parse(run);
        CHECK(r.at("pass").get<bool>());
        CHECK(r.at("max_ch").get<double>() <= 1e-12);
        CHECK(r.at("min_ch").get<double>() >= -1.0 - 1e-12);
        CHECK(r.at("identity_defect").get<double>() <= 1e-12);
        CHECK(r.at("arith_max").get<double>() <= 1e-12);
        CHECK(r.at("epr").at("defect").get<double>() <= 1e-12);
    }
}

TEST_CASE("csv format emits the value table") {
    const RunResult csv = run_cli("reproduce --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("entry,measured,expected,defect,source", 0) == 0);
    // 4 correlations + 4 six-term rows + 1 four-term row + 2 flags + header.
    CHECK(line_count(csv.output) == 12);

    const RunResult table = run_cli("verify-prop3 --format csv");
    CHECK(table.exit_code == 0);
    CHECK(line_count(table.output) == 13);  // 8 residuals + 4 summary + header
}

TEST_CASE("config file supplies defaults and flags win") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "isinglab_cli_test.conf";
    {
        std::ofstream file(path);
        file << "lambda=0.5\n";
    }
    const nlohmann::json from_config =
        parse(run_cli("reproduce --config " + path.string()));
    CHECK(from_config.at("inputs").at("lambda").get<double>() == 0.5);
    CHECK(!from_config.at("violation").get<bool>());

    const nlohmann::json overridden = parse(
        run_cli("reproduce --config " + path.string() + " --lambda 1"));
    CHECK(overridden.at("inputs").at("lambda").get<double>() == 1.0);
    CHECK(overridden.at("violation").get<bool>());
    fs::remove(path);
}

TEST_CASE("output path writes the same payload") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "isinglab_cli_out.json";
    const RunResult direct = run_cli("verify-prop3");
    const RunResult redirected = run_cli("verify-prop3 --out " + path.string());
    CHECK(redirected.exit_code == 0);
    CHECK(redirected.output.empty());
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::string written((std::istreambuf_iterator<char>(file)),
                        std::istreambuf_iterator<char>());
    CHECK(written == direct.output);
    fs::remove(path);
}

TEST_CASE("malformed invocations exit with the input-error code") {
    CHECK(run_cli("reproduce --lambda 1.5").exit_code == 2);
    CHECK(run_cli("reproduce --lambda -0.25").exit_code == 2);
    CHECK(run_cli("verify-prop3 --c 1,2").exit_code == 2);
    CHECK(run_cli("verify-prop3 --c 0,3,4").exit_code == 2);
    CHECK(run_cli("verify-prop3 --c a,b,c").exit_code == 2);
    CHECK(run_cli("search --mode sideways").exit_code == 2);
    CHECK(run_cli("search --resolution 1").exit_code == 2);
    CHECK(run_cli("search --budget 0").exit_code == 2);
    CHECK(run_cli("bellmax --state thermal").exit_code == 2);
    CHECK(run_cli("reproduce --format yaml").exit_code == 2);
    CHECK(run_cli("reproduce --out /nonexistent/x.json").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
    CHECK(run_cli("--help").exit_code == 0);
}

int main(int argc, char** argv) {
    std::vector<char*> doctest_args;
    doctest_args.push_back(argv[0]);
    for (int i = 1; i < argc; ++i) {
        if (g_cli.empty() && argv[i][0] != '-') {
            g_cli = argv[i];
        } else {
            doctest_args.push_back(argv[i]);
        }
    }
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
        return 1;
    }
    doctest::Context context(static_cast<int>(doctest_args.size()),
                             doctest_args.data());
    return context.run();
}
