// Copyright 2026 The gqca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "gqca/cell.hpp"
#include "gqca/layout.hpp"
#include "gqca/rule.hpp"
#include "gqca/transport.hpp"

using namespace gqca;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string &args) {
    std::string cmd = std::string(GQCA_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf;
    std::string out;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) {
        out += buf.data();
    }
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string &name) {
    const char *dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("sim traces a pulse file and the trace lines parse back") {
    std::string pulses = temp_path("gqca_cli_t1.pulse");
    save_pulse_file(pulses, transport(4));
    RunResult r = run_cli("sim --config dddduuddddddduudduudd --pulses " + pulses);
    CHECK(r.exit_code == 0);
    // every trace line: step | rule | config
    size_t lines = 0;
    std::stringstream ss(r.out);
    std::string line;
    while (std::getline(ss, line)) {
        size_t p1 = line.find(" | ");
        REQUIRE(p1 != std::string::npos);
        size_t p2 = line.find(" | ", p1 + 3);
        REQUIRE(p2 != std::string::npos);
        CHECK_NOTHROW(parse_rule(line.substr(p1 + 3, p2 - p1 - 3)));
        CHECK_NOTHROW(parse_config(line.substr(p2 + 3)));
        ++lines;
    }
    CHECK(lines == 4);
}

TEST_CASE("identical args give byte-identical output") {
    std::string pulses = temp_path("gqca_cli_t2.pulse");
    PulseSequence seq = transport(2);
    seq.push_back(parse_rule("A0:H"));
    save_pulse_file(pulses, seq);
    std::string args = "sim --config dddduudddddd --pulses " + pulses + " --seed 7";
    RunResult a = run_cli(args);
    RunResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("superposed(") != std::string::npos);
}

TEST_CASE("gate subcommand applies a library gate") {
    std::string lay_path = temp_path("gqca_cli_t3.layout");
    save_layout_file(lay_path, min_two_qubit_layout());
    RunResult r = run_cli("gate --layout " + lay_path + " --word q=01,cu=1 --gate C-X@1,0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("q=11,cu=1") != std::string::npos);
}

TEST_CASE("spectra subcommand emits the scan csv") {
    RunResult r = run_cli("spectra --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("k,W,margin,separated\n", 0) == 0);
    CHECK(r.out.find("true") != std::string::npos);
    RunResult grid = run_cli("spectra --scan 1.5:3.5:0.5");
    CHECK(grid.exit_code == 0);
    CHECK(grid.out.find("crossover_k") != std::string::npos);
}

TEST_CASE("parallel subcommand reports budgets as csv") {
    RunResult r = run_cli("parallel --n 4 --pred single:2 --report csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("N,tau,total_pulses,overhead_factor\n", 0) == 0);
}

TEST_CASE("usage and domain errors map to exit codes 2 and 1") {
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("sim --config dud --pulses /nonexistent.pulse").exit_code == 1);
}

TEST_CASE("verify passes on the checked-in library") {
    RunResult r = run_cli("verify");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
