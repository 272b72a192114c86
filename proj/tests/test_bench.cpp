// Copyright 2026 The HADOF Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "hadof/bench.hpp"
#include "hadof/report.hpp"

namespace hadof {

namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("hadof_test_" + name);
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string without_wall_time(BenchRow r) {
    r.wall_time_s = 0.0;
    return format_csv_row(r);
}

HadofConfig quick_config() {
    HadofConfig cfg;
    cfg.marginal_shots = 100;
    cfg.final_shots = 200;
    return cfg;
}

}  // namespace

TEST_CASE("generate_instances", "[bench][gen]") {
    const auto dir = scratch_dir("gen");
    const auto paths = generate_instances(10, 3, 1, dir);
    REQUIRE(paths.size() == 3);
    std::vector<std::string> first;
    for (const auto& p : paths) {
        first.push_back(slurp(p));
        CHECK(read_qubo_file(p.string()) == generate_random_qubo(10, 1 + (&p - paths.data())));
    }
    CHECK(slurp(dir / "manifest.txt") ==
          "qubo_n10_seed1.txt\nqubo_n10_seed2.txt\nqubo_n10_seed3.txt\n");
    generate_instances(10, 3, 1, dir);
    for (std::size_t i = 0; i < 3; ++i) CHECK(slurp(paths[i]) == first[i]);

    const auto empty_dir = scratch_dir("gen_empty");
    CHECK(generate_instances(10, 0, 1, empty_dir).empty());
    CHECK(slurp(empty_dir / "manifest.txt").empty());
}

TEST_CASE("n = 500 instance has n(n+1)/2 coefficient lines", "[bench][gen]") {
    const auto dir = scratch_dir("gen500");
    const auto paths = generate_instances(500, 1, 9, dir);
    std::ifstream in(paths.at(0));
    std::string line;
    std::size_t lines = 0;
    std::getline(in, line);
    CHECK(line == "qubo 500");
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 125250);
}

TEST_CASE("run_solver", "[bench]") {
    QuboMatrix q(1);
    q.set(0, 0, -5.0);
    const auto exact = run_solver(q, SolverKind::exact, quick_config());
    CHECK(exact.best.objective == -5.0);
    CHECK(exact.most_probable.objective == -5.0);
    CHECK(exact.average_objective == -5.0);

    const auto q8 = generate_random_qubo(8, 4);
    auto cfg = quick_config();
    cfg.k = 8;
    cfg.seed = 12;
    const auto sa = run_solver(q8, SolverKind::sa, cfg);
    const auto hsa = run_solver(q8, SolverKind::hadof_sa, cfg);
    CHECK(sa.best.objective == hsa.best.objective);
    CHECK(sa.most_probable.assignment == hsa.most_probable.assignment);
    CHECK(sa.average_objective == hsa.average_objective);

    CHECK_THROWS_AS(run_solver(generate_random_qubo(12, 1), SolverKind::exact, cfg, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_solver_kind("cplex"), std::invalid_argument);
}

TEST_CASE("reference_objective switches to SA above the cap", "[bench]") {
    const auto q = generate_random_qubo(10, 2);
    const auto exact = reference_objective(q, quick_config());
    CHECK(exact.source == "exact");
    CHECK(exact.objective == brute_force(q).objective);
    const auto sa = reference_objective(q, quick_config(), 8);
    CHECK(sa.source == "sa");
    CHECK(sa.objective >= exact.objective);
}

TEST_CASE("bench rows", "[bench]") {
    BenchOptions opts;
    opts.sizes = {10};
    opts.solvers = {SolverKind::exact, SolverKind::sa};
    opts.instances_per_size = 2;
    opts.seed = 5;
    opts.base = quick_config();
    const auto rows = run_bench(opts);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
        CHECK(r.error.empty());
        CHECK(r.n == 10);
        if (r.solver == SolverKind::exact) {
            CHECK(*r.scaled_best == 1.0);
            CHECK(*r.scaled_most_probable == 1.0);
            CHECK(*r.scaled_avg == 1.0);
        }
    }
    CHECK(rows[0].seed == 5);
    CHECK(rows[2].seed == 6);
}

TEST_CASE("bench row invariants and determinism", "[bench][property]") {
    BenchOptions opts;
    opts.sizes = {8, 12};
    opts.k_values = {4};
    opts.solvers = {SolverKind::exact, SolverKind::sa, SolverKind::hadof_sa, SolverKind::hadof_qaoa};
    opts.instances_per_size = 2;
    opts.seed = 100;
    opts.base = quick_config();
    const auto a = run_bench(opts);
    opts.jobs = 3;
    const auto b = run_bench(opts);
    REQUIRE(a.size() == 16);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(without_wall_time(a[i]) == without_wall_time(b[i]));
        CHECK(*a[i].best_obj <= *a[i].avg_obj);
        CHECK(*a[i].best_obj <= *a[i].most_probable_obj);
        CHECK(*a[i].scaled_best <= 1.0 + 1e-12);
    }
}

TEST_CASE("bench records failures and continues", "[bench]") {
    BenchOptions opts;
    opts.sizes = {6};
    opts.k_values = {3, 7};
    opts.solvers = {SolverKind::exact, SolverKind::hadof_sa};
    opts.base = quick_config();
    opts.exact_cap = 5;
    const auto rows = run_bench(opts);
    REQUIRE(rows.size() == 3);
    CHECK_FALSE(rows[0].error.empty());  // exact above cap
    CHECK(rows[1].k == 3);
    CHECK(rows[1].best_obj.has_value());
    CHECK(rows[1].error.empty());
    CHECK(rows[2].k == 7);
    CHECK_FALSE(rows[2].error.empty());  // k > n
    CHECK_FALSE(rows[2].best_obj.has_value());
}

TEST_CASE("CSV output", "[bench]") {
    BenchRow r;
    r.n = 10;
    r.k = 5;
    r.solver = SolverKind::hadof_qaoa;
    r.seed = 3;
    r.best_obj = -12.5;
    r.error = "bad, \"thing\"";
    CHECK(format_csv_row(r) == "10,5,hadof-qaoa,3,-12.5,,,,,,,0,\"bad, \"\"thing\"\"\"");

    const auto dir = scratch_dir("csv");
    const auto path = dir / "out.csv";
    append_bench_csv(path, {r});
    append_bench_csv(path, {r});
    std::istringstream lines(slurp(path));
    std::string line;
    std::vector<std::string> all;
    while (std::getline(lines, line)) all.push_back(line);
    REQUIRE(all.size() == 3);
    CHECK(all[0] == kBenchCsvHeader);
    CHECK(all[1] == all[2]);
}

TEST_CASE("JSON result document", "[bench][report]") {
    const auto q = generate_random_qubo(10, 3);
    auto cfg = quick_config();
    cfg.seed = 4;
    const auto r = run_solver(q, SolverKind::hadof_qaoa, cfg);
    const auto doc = result_to_json(SolverKind::hadof_qaoa, 10, cfg, r, reference_objective(q, cfg));
    CHECK(doc["solver"] == "hadof-qaoa");
    CHECK(doc["config"]["k"] == 5);
    CHECK(doc["config"]["update_mode"] == "in-sweep");
    CHECK(doc["best"]["objective"].get<double>() == r.best.objective);
    CHECK(doc["best"]["assignment"].get<std::string>().size() == 10);
    CHECK(doc["reference"]["source"] == "exact");
    CHECK(doc["scaled"]["best"].get<double>() <= 1.0);
    CHECK(doc["marginal_trajectory"].size() == cfg.p);
    CHECK(doc["num_samples"] == 200);

    auto again = result_to_json(SolverKind::hadof_qaoa, 10, cfg, run_solver(q, SolverKind::hadof_qaoa, cfg),
                                reference_objective(q, cfg));
    auto first = doc;
    first.erase("wall_time_s");
    again.erase("wall_time_s");
    CHECK(first.dump() == again.dump());

    const auto none = result_to_json(SolverKind::sa, 10, cfg, r, std::nullopt);
    CHECK(none["scaled"].is_null());
    CHECK(none["reference"].is_null());
}

TEST_CASE("config JSON overlay", "[bench][report]") {
    HadofConfig cfg;
    apply_config_json(json::parse(R"({"k": 10, "update_mode": "snapshot", "sa": {"beta_cold": 6.5}})"), cfg);
    CHECK(cfg.k == 10);
    CHECK(cfg.update_mode == UpdateMode::snapshot);
    CHECK(cfg.sa.beta_cold == 6.5);
    CHECK(cfg.p == 10);
    CHECK_THROWS_AS(apply_config_json(json::parse(R"({"kk": 1})"), cfg), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_json(json::parse(R"({"update_mode": "sideways"})"), cfg),
                    std::invalid_argument);
}

}  // namespace hadof
