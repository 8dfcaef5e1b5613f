// Copyright 2026 The boolcube-vqml Authors
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
#include "boolcube/cli.hpp"
#include "boolcube/error.hpp"
#include "boolcube/parallel.hpp"

#include <catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace boolcube;
using namespace boolcube::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string &name) {
    const auto dir = fs::temp_directory_path() / "boolcube_cli_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

fs::path write_config(const fs::path &dir, const std::string &text) {
    const auto p = dir / "config.json";
    std::ofstream(p) << text;
    return p;
}

int invoke(std::vector<std::string> args, std::string *out_text = nullptr,
           std::string *err_text = nullptr) {
    args.insert(args.begin(), "boolcube-vqml");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int rc = run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text != nullptr) {
        *out_text = out.str();
    }
    if (err_text != nullptr) {
        *err_text = err.str();
    }
    return rc;
}

std::string slurp(const fs::path &p) {
    std::ifstream f(p);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("config parsing", "[cli][config]") {
    const auto c = parse_config(R"({"schema": 1, "target": "g6", "embedding": "qrac",
        "optimizer": {"kind": "adam", "budget": 50, "seed": 4}, "ansatz": {"layers": 2}})");
    CHECK(c.target.num_bits() == 6);
    CHECK(c.target.size() == 4);
    CHECK(c.family == Family::kQrac);
    CHECK(c.train.optimizer == train::OptimizerKind::kAdam);
    CHECK(c.train.budget == 50);
    CHECK(c.layers == 2);

    const auto inl = parse_config(R"({"schema": 1, "target": {"n": 3, "spectrum": {"110": 0.5}}})");
    CHECK(inl.target[parse_mask("110")] == 0.5);

    const auto custom = parse_config(
        R"({"schema": 1, "target": {"preset": "g3", "coefficients": [1, 2, 3]}})");
    CHECK(custom.target[parse_mask("001")] == 3.0);
}

TEST_CASE("config errors name the field", "[cli][config]") {
    auto message = [](const std::string &text) {
        try {
            (void)parse_config(text);
        } catch (const InvalidArgument &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message(R"({"target": "g3"})").find("schema") != std::string::npos);
    CHECK(message(R"({"schema": 2})").find("schema") != std::string::npos);
    CHECK(message(R"({"schema": 1, "embeding": "qrac"})").find("embeding") != std::string::npos);
    CHECK(message(R"({"schema": 1, "optimizer": {"budget": -1}})").find("optimizer.budget") !=
          std::string::npos);
    CHECK(message(R"({"schema": 1, "target": {"n": 3, "spectrum": {"12": 1}}})")
              .find("target.spectrum.12") != std::string::npos);
    CHECK(message(R"({"schema": 1, "target": "g4"})").find("target") != std::string::npos);
    CHECK(message("{not json").find("JSON") != std::string::npos);
}

TEST_CASE("fit writes its artifacts", "[cli][fit]") {
    const auto dir = scratch("fit");
    const auto cfg = write_config(
        dir, R"({"schema": 1, "target": "g3", "embedding": "qrac", "optimizer": {"seed": 1}})");
    REQUIRE(invoke({"fit", "--config", cfg.string(), "--out", (dir / "out").string()}) == kExitOk);
    for (const char *f : {"loss.csv", "values.csv", "spectrum.csv", "summary.json"}) {
        CHECK(fs::exists(dir / "out" / f));
    }
    const auto summary = nlohmann::json::parse(slurp(dir / "out" / "summary.json"));
    CHECK(summary["final_risk"].get<double>() < 1e-4);
    CHECK(summary.contains("wall_time_s"));
    CHECK(summary["seed"] == 1);
    CHECK(slurp(dir / "out" / "values.csv").rfind("mask_binary,target,model\n", 0) == 0);
}

TEST_CASE("fit with an empty target starts from zero angles", "[cli][fit]") {
    const auto dir = scratch("fit_empty");
    const auto cfg = write_config(
        dir, R"({"schema": 1, "target": {"n": 2, "spectrum": {}}, "embedding": "phase"})");
    REQUIRE(invoke({"fit", "--config", cfg.string(), "--out", dir.string()}) == kExitOk);
    const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
    CHECK(summary["final_risk"].get<double>() < 1e-20);
}

TEST_CASE("synth families reproduce their targets", "[cli][synth]") {
    const std::vector<std::pair<std::string, std::string>> cases{
        {"phase", R"("g3")"},
        {"qrac", R"("g6")"},
        {"qrac-permuted", R"({"n": 6, "spectrum": {"110000": 0.4}})"},
        {"ensemble-phase", R"("g6")"},
        {"ensemble-qrac", R"({"n": 4, "spectrum": {"1001": 0.3, "0100": -0.2}})"},
    };
    for (const auto &[family, target] : cases) {
        const auto dir = scratch("synth_" + family);
        const auto cfg = write_config(dir, R"({"schema": 1, "target": )" + target +
                                               R"(, "embedding": ")" + family + R"("})");
        INFO(family);
        REQUIRE(invoke({"synth", "--config", cfg.string(), "--out", dir.string()}) == kExitOk);
        const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
        CHECK(summary["max_abs_error"].get<double>() < 1e-9);
        const auto obs = nlohmann::json::parse(slurp(dir / "observable.json"));
        CHECK(!obs["members"].empty());
    }
}

TEST_CASE("hypothesis violations exit 1", "[cli][synth]") {
    const auto dir = scratch("synth_bad");
    const auto cfg = write_config(
        dir, R"({"schema": 1, "target": {"n": 3, "spectrum": {"110": 1}}, "embedding": "qrac"})");
    std::string err;
    CHECK(invoke({"synth", "--config", cfg.string(), "--out", dir.string()}, nullptr, &err) ==
          kExitNumerical);
    CHECK(err.find("110") != std::string::npos);
}

TEST_CASE("usage errors exit 2", "[cli][usage]") {
    CHECK(invoke({}) == kExitUsage);
    CHECK(invoke({"train"}) == kExitUsage);
    CHECK(invoke({"fit"}) == kExitUsage);
    CHECK(invoke({"verify", "--suite", "thm9"}) == kExitUsage);
    CHECK(invoke({"fit", "--config", "/nonexistent/config.json"}) == kExitUsage);
    const auto dir = scratch("usage");
    const auto cfg = write_config(dir, R"({"schema": 1, "target": "g3", "embedding": "ensemble-qrac"})");
    CHECK(invoke({"fit", "--config", cfg.string(), "--out", dir.string()}) == kExitUsage);
    CHECK(invoke({"--help"}) == kExitOk);
}

TEST_CASE("verify runs a suite and writes a report", "[cli][verify]") {
    std::string out;
    CHECK(invoke({"verify", "--suite", "thm1"}, &out) == kExitOk);
    CHECK(out.find("suite thm1: PASS") != std::string::npos);
    const auto dir = scratch("verify");
    const auto cfg = write_config(dir, R"({"schema": 1, "suite": "appendixA2", "suite_seed": 3})");
    CHECK(invoke({"verify", "--config", cfg.string(), "--out", dir.string()}) == kExitOk);
    const auto report = nlohmann::json::parse(slurp(dir / "verify_appendixA2.json"));
    CHECK(report["pass"] == true);
    CHECK(report["seed"] == 3);
}

TEST_CASE("thread cap from the environment", "[cli][threads]") {
    ::setenv("BOOLCUBE_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    ::setenv("BOOLCUBE_THREADS", "100000", 1);
    CHECK(worker_count() <= std::max(1U, std::thread::hardware_concurrency()));
    ::unsetenv("BOOLCUBE_THREADS");
}

TEST_CASE("installed binary reports exit codes", "[cli][process]") {
    const std::string exe = BOOLCUBE_CLI_PATH;
    const int rc = std::system((exe + " verify --suite nope > /dev/null 2>&1").c_str());
    REQUIRE(WIFEXITED(rc));
    CHECK(WEXITSTATUS(rc) == kExitUsage);
}

TEST_CASE("fit outputs are byte reproducible", "[cli][fit]") {
    const auto dir = scratch("repro");
    const auto cfg = write_config(dir, R"({"schema": 1, "target": "g6", "embedding": "qrac",
        "optimizer": {"budget": 60, "seed": 9}})");
    REQUIRE(invoke({"fit", "--config", cfg.string(), "--out", (dir / "a").string()}) == kExitOk);
    REQUIRE(invoke({"fit", "--config", cfg.string(), "--out", (dir / "b").string()}) == kExitOk);
    for (const char *f : {"loss.csv", "values.csv", "spectrum.csv"}) {
        CHECK(slurp(dir / "a" / f) == slurp(dir / "b" / f));
    }
    std::istringstream values(slurp(dir / "a" / "values.csv"));
    std::size_t rows = 0;
    for (std::string line; std::getline(values, line);) {
        ++rows;
    }
    CHECK(rows == 65);
}
