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

// hadof: generate QUBO instances, solve them, and run benchmark suites.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hadof/hadof.hpp"

namespace {

std::filesystem::path default_out_dir() {
    if (const char* env = std::getenv("HADOF_OUT_DIR"); env && *env) return env;
    return ".";
}

/// Flags shared by `solve` and `bench` that override HadofConfig fields.
struct ConfigFlags {
    std::optional<std::size_t> p;
    std::optional<std::size_t> shots;
    std::optional<std::size_t> final_shots;
    std::optional<std::string> update_mode;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> sa_sweeps;
    std::optional<double> beta_hot;
    std::optional<double> beta_cold;
    std::string config_file;

    void add_to(CLI::App& app) {
        app.add_option("--p", p, "QAOA layers / annealing stages (default 10)");
        app.add_option("--shots", shots, "shots per marginal estimate; 0 = exact marginals (QAOA only)");
        app.add_option("--final-shots", final_shots, "final samples per subset (default 5000)");
        app.add_option("--update-mode", update_mode, "in-sweep or snapshot")
            ->check(CLI::IsMember({"in-sweep", "snapshot"}));
        app.add_option("--seed", seed, "base random seed");
        app.add_option("--sa-sweeps", sa_sweeps, "SA sweeps per stage (default 10)");
        app.add_option("--beta-hot", beta_hot, "SA initial inverse temperature (default 0.1)");
        app.add_option("--beta-cold", beta_cold, "SA final inverse temperature (default 4.0)");
        app.add_option("--config", config_file, "JSON config file; flags take precedence")
            ->check(CLI::ExistingFile);
    }

    /// Built-in defaults, then the config file, then explicit flags.
    hadof::HadofConfig resolve(std::optional<std::size_t> k) const {
        hadof::HadofConfig cfg;
        if (!config_file.empty()) {
            std::ifstream in(config_file);
            hadof::apply_config_json(hadof::json::parse(in), cfg);
        }
        if (k) cfg.k = *k;
        if (p) cfg.p = *p;
        if (shots) cfg.marginal_shots = *shots;
        if (final_shots) cfg.final_shots = *final_shots;
        if (update_mode) cfg.update_mode = hadof::parse_update_mode(*update_mode);
        if (seed) cfg.seed = *seed;
        if (sa_sweeps) cfg.sa.sweeps_per_stage = *sa_sweeps;
        if (beta_hot) cfg.sa.beta_hot = *beta_hot;
        if (beta_cold) cfg.sa.beta_cold = *beta_cold;
        return cfg;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HADOF QUBO toolkit: decomposition with QAOA or SA sub-solvers"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate random QUBO instances");
    std::size_t gen_n = 0;
    std::size_t gen_count = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "variable count")->required()->check(CLI::PositiveNumber);
    gen->add_option("--count", gen_count, "number of instances");
    gen->add_option("--seed", gen_seed, "seed of the first instance; instance i uses seed + i");
    gen->add_option("--out", gen_out, "output directory (default $HADOF_OUT_DIR or .)");

    // solve
    auto* solve = app.add_subcommand("solve", "solve one QUBO instance file");
    std::string solve_file;
    std::string solve_solver = "hadof-qaoa";
    std::optional<std::size_t> solve_k;
    std::string solve_out;
    bool solve_no_reference = false;
    ConfigFlags solve_flags;
    solve->add_option("instance", solve_file, "QUBO text file")->required()->check(CLI::ExistingFile);
    solve->add_option("--solver", solve_solver, "exact, sa, hadof-sa or hadof-qaoa")
        ->check(CLI::IsMember({"exact", "sa", "hadof-sa", "hadof-qaoa"}));
    solve->add_option("--k", solve_k, "subset size (default 5)");
    solve->add_option("--out", solve_out, "write the JSON result here instead of stdout");
    solve->add_flag("--no-reference", solve_no_reference, "skip computing the scaling reference");
    solve_flags.add_to(*solve);

    // bench
    auto* bench = app.add_subcommand("bench", "run a benchmark suite and append CSV rows");
    std::vector<std::size_t> bench_sizes;
    std::vector<std::size_t> bench_k{5};
    std::vector<std::string> bench_solvers{"exact", "sa", "hadof-sa", "hadof-qaoa"};
    std::size_t bench_instances = 1;
    std::size_t bench_jobs = 1;
    std::string bench_out;
    ConfigFlags bench_flags;
    bench->add_option("--n", bench_sizes, "problem sizes, comma separated")->required()->delimiter(',');
    bench->add_option("--k", bench_k, "subset sizes for HADOF solvers, comma separated")->delimiter(',');
    bench->add_option("--solver", bench_solvers, "solvers, comma separated")
        ->delimiter(',')
        ->check(CLI::IsMember({"exact", "sa", "hadof-sa", "hadof-qaoa"}));
    bench->add_option("--instances", bench_instances, "instances per size");
    bench->add_option("--jobs", bench_jobs, "instances solved concurrently");
    bench->add_option("--out", bench_out, "CSV file (default $HADOF_OUT_DIR/bench.csv)");
    bench_flags.add_to(*bench);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const std::filesystem::path dir = gen_out.empty() ? default_out_dir() : std::filesystem::path(gen_out);
            const auto paths = hadof::generate_instances(gen_n, gen_count, gen_seed, dir);
            for (const auto& p : paths) std::cout << p.string() << '\n';
            return 0;
        }

        if (*solve) {
            const hadof::QuboMatrix q = hadof::read_qubo_file(solve_file);
            const auto kind = hadof::parse_solver_kind(solve_solver);
            hadof::HadofConfig cfg = solve_flags.resolve(solve_k);
            const hadof::HadofResult result = hadof::run_solver(q, kind, cfg);
            std::optional<hadof::Reference> reference;
            if (!solve_no_reference) reference = hadof::reference_objective(q, cfg);
            const auto doc = hadof::result_to_json(kind, q.size(), cfg, result, reference);
            if (solve_out.empty()) {
                std::cout << doc.dump(2) << '\n';
            } else {
                std::ofstream out(solve_out, std::ios::trunc);
                if (!out) throw std::runtime_error("cannot write " + solve_out);
                out << doc.dump(2) << '\n';
            }
            return 0;
        }

        if (*bench) {
            hadof::BenchOptions opts;
            opts.sizes = bench_sizes;
            opts.k_values = bench_k;
            for (const auto& s : bench_solvers) opts.solvers.push_back(hadof::parse_solver_kind(s));
            opts.instances_per_size = bench_instances;
            opts.jobs = bench_jobs;
            opts.base = bench_flags.resolve(std::nullopt);
            opts.seed = opts.base.seed;
            const std::filesystem::path out =
                bench_out.empty() ? default_out_dir() / "bench.csv" : std::filesystem::path(bench_out);
            const auto rows = hadof::run_bench(opts);
            hadof::append_bench_csv(out, rows);
            std::size_t failed = 0;
            for (const auto& r : rows) failed += !r.error.empty();
            std::cerr << rows.size() << " rows appended to " << out.string();
            if (failed) std::cerr << " (" << failed << " with errors)";
            std::cerr << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "hadof: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
