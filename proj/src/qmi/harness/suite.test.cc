// Copyright 2026 The qmilab Authors
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

#include "qmi/harness/suite.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmi/harness/experiment_spec.h"

namespace qmi {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path fresh_dir(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("qmi_suite_" + name);
    fs::remove_all(p);
    return p;
}

json small_suite() {
    return json::parse(R"({
        "seed": 5,
        "experiments": [
            {"name": "uncond",
             "spec": {"shape": {"n_a": 2, "n_b": 1}, "engine": "dense", "ensemble": "haar",
                      "monitoring": "unmonitored", "steps": 4, "trajectories": 100, "entropy": "renyi2"},
             "checks": [{"kind": "theory", "curve": "thm3-exact", "params": {"n_a": 2, "n_b": 1},
                         "stderr_mult": 3, "abs_tol": 1e-9}]},
            {"name": "stab",
             "spec": {"shape": {"n_a": 8, "n_b": 2}, "engine": "stabilizer", "monitoring": "unmonitored",
                      "steps": 10, "trajectories": 4},
             "checks": [{"kind": "lifetime", "expected": 6.0, "rel_tol": 0.15}]}
        ]
    })");
}

TEST(Suite, EmptyExperimentListSucceeds) {
    fs::path dir = fresh_dir("empty");
    SuiteResult r = run_suite(json::parse(R"({"experiments": []})"), dir.string());
    EXPECT_TRUE(r.passed());
    json manifest = json::parse(slurp(dir / "manifest.json"));
    EXPECT_TRUE(manifest["experiments"].empty());
    EXPECT_EQ(manifest["format_version"], 1);
    fs::remove_all(dir);
}

TEST(Suite, RunsChecksAndWritesArtifacts) {
    fs::path dir = fresh_dir("small");
    SuiteResult r = run_suite(small_suite(), dir.string());
    ASSERT_EQ(r.rows.size(), 2u);
    for (const auto &row : r.rows) EXPECT_TRUE(row.passed) << row.experiment << " " << row.check << ": " << row.detail;
    EXPECT_TRUE(fs::exists(dir / "uncond.csv"));
    EXPECT_TRUE(fs::exists(dir / "stab.json"));
    json sidecar = json::parse(slurp(dir / "uncond.json"));
    EXPECT_EQ(sidecar["format_version"], 1);
    EXPECT_EQ(sidecar["spec"]["entropy"], "renyi2");
    json manifest = json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(manifest["experiments"][0]["seed"], derive_seed(5, {0}));
    EXPECT_TRUE(manifest["experiments"][0].contains("wall_seconds"));
    EXPECT_NE(slurp(dir / "report.txt").find("PASS uncond"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Suite, RerunIsByteIdentical) {
    fs::path a = fresh_dir("a"), b = fresh_dir("b");
    run_suite(small_suite(), a.string());
    run_suite(small_suite(), b.string());
    for (const char *f : {"uncond.csv", "stab.csv", "uncond.json", "report.json"}) EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    fs::path c = fresh_dir("c");
    run_suite(small_suite(), c.string(), 6);
    EXPECT_NE(slurp(a / "uncond.csv"), slurp(c / "uncond.csv"));
    for (const auto &d : {a, b, c}) fs::remove_all(d);
}

TEST(Suite, FailuresAreRecordedPerExperiment) {
    json cfg = small_suite();
    cfg["experiments"][1]["checks"][0]["expected"] = 20.0;
    cfg["experiments"].push_back(json::parse(R"({"name": "broken", "spec": {"shape": {"n_a": 2, "n_b": 3},
        "engine": "dense", "monitoring": {"kind": "partial", "period": 1, "n_erased": 4}}})"));
    fs::path dir = fresh_dir("fail");
    SuiteResult r = run_suite(cfg, dir.string());
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.failed_experiments, 1u);
    json manifest = json::parse(slurp(dir / "manifest.json"));
    EXPECT_EQ(manifest["experiments"][2]["status"], "error");
    EXPECT_EQ(manifest["experiments"][0]["status"], "ok");
    fs::remove_all(dir);
}

}  // namespace
}  // namespace qmi
