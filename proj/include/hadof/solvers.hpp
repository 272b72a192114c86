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

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hadof/engine.hpp"
#include "hadof/exact.hpp"
#include "hadof/io.hpp"
#include "hadof/qubo.hpp"

namespace hadof {

enum class SolverKind { exact, sa, hadof_sa, hadof_qaoa };

inline std::string_view to_string(SolverKind s) {
    switch (s) {
        case SolverKind::exact: return "exact";
        case SolverKind::sa: return "sa";
        case SolverKind::hadof_sa: return "hadof-sa";
        case SolverKind::hadof_qaoa: return "hadof-qaoa";
    }
    return "?";
}

inline SolverKind parse_solver_kind(std::string_view s) {
    if (s == "exact") return SolverKind::exact;
    if (s == "sa") return SolverKind::sa;
    if (s == "hadof-sa") return SolverKind::hadof_sa;
    if (s == "hadof-qaoa") return SolverKind::hadof_qaoa;
    throw std::invalid_argument("unknown solver '" + std::string(s) +
                                "' (expected exact, sa, hadof-sa or hadof-qaoa)");
}

inline bool is_hadof(SolverKind s) { return s == SolverKind::hadof_sa || s == SolverKind::hadof_qaoa; }

/// Runs one solver. The exact solver reports its optimum as the single
/// sample, so best = most probable = average.
inline HadofResult run_solver(const QuboMatrix& q, SolverKind kind, HadofConfig cfg,
                              std::size_t exact_cap = kDefaultExactCap) {
    switch (kind) {
        case SolverKind::exact: {
            const auto start = std::chrono::steady_clock::now();
            ExactResult r = brute_force(q, exact_cap);
            HadofResult out;
            out.best = {r.assignment, r.objective};
            out.most_probable = out.best;
            out.average_objective = r.objective;
            out.global_samples.push_back(out.best);
            out.wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            return out;
        }
        case SolverKind::sa:
            return run_global_sa(q, cfg);
        case SolverKind::hadof_sa:
            cfg.solver = SubSolver::sa;
            return run_hadof(q, cfg);
        case SolverKind::hadof_qaoa:
            cfg.solver = SubSolver::qaoa;
            return run_hadof(q, cfg);
    }
    throw std::logic_error("run_solver: unhandled solver");
}

struct Reference {
    double objective = 0.0;
    std::string source;  // "exact" or "sa"
};

/// Exact optimum when n fits the brute-force cap, else the best global-SA
/// sample under `cfg`.
inline Reference reference_objective(const QuboMatrix& q, const HadofConfig& cfg,
                                     std::size_t exact_cap = kDefaultExactCap) {
    if (q.size() <= exact_cap) return {brute_force(q, exact_cap).objective, "exact"};
    return {run_global_sa(q, cfg).best.objective, "sa"};
}

inline std::string instance_filename(std::size_t n, std::uint64_t seed) {
    return "qubo_n" + std::to_string(n) + "_seed" + std::to_string(seed) + ".txt";
}

/// Writes `count` instances with seeds seed, seed + 1, ... into out_dir and
/// a manifest.txt listing their file names one per line. Returns the paths.
inline std::vector<std::filesystem::path> generate_instances(std::size_t n, std::size_t count,
                                                             std::uint64_t seed,
                                                             const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());
    std::vector<std::filesystem::path> paths;
    std::string manifest;
    for (std::size_t i = 0; i < count; ++i) {
        const std::string name = instance_filename(n, seed + i);
        const auto path = out_dir / name;
        write_qubo_file(path.string(), generate_random_qubo(n, seed + i));
        paths.push_back(path);
        manifest += name + "\n";
    }
    std::ofstream out(out_dir / "manifest.txt", std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write manifest in " + out_dir.string());
    out << manifest;
    if (!out) throw std::runtime_error("manifest write failed in " + out_dir.string());
    return paths;
}

}  // namespace hadof
