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

// Benchmark suites over generated instances, one CSV row per
// (size, instance, solver, k).

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "hadof/engine.hpp"
#include "hadof/io.hpp"
#include "hadof/solvers.hpp"

namespace hadof {

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::vector<std::size_t> k_values{5};
    std::vector<SolverKind> solvers;
    std::size_t instances_per_size = 1;
    std::uint64_t seed = 0;
    HadofConfig base{};
    std::size_t jobs = 1;
    std::size_t exact_cap = kDefaultExactCap;
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t k = 0;
    SolverKind solver = SolverKind::exact;
    std::uint64_t seed = 0;
    std::optional<double> best_obj;
    std::optional<double> most_probable_obj;
    std::optional<double> avg_obj;
    std::optional<double> reference_obj;
    std::optional<double> scaled_best;
    std::optional<double> scaled_most_probable;
    std::optional<double> scaled_avg;
    double wall_time_s = 0.0;
    std::string error;
};

inline constexpr std::string_view kBenchCsvHeader =
    "n,k,solver,seed,best_obj,most_probable_obj,avg_obj,reference_obj,scaled_best,"
    "scaled_most_probable,scaled_avg,wall_time_s,error";

namespace detail {

inline std::string csv_number(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += (c == '\n' || c == '\r') ? ' ' : c;
    }
    return out + "\"";
}

/// Rows for one generated instance, in solver-then-k order.
inline std::vector<BenchRow> bench_instance(std::size_t n, std::uint64_t instance_seed,
                                            const BenchOptions& opts) {
    const QuboMatrix q = generate_random_qubo(n, instance_seed);
    HadofConfig cfg = opts.base;
    cfg.seed = instance_seed;

    std::optional<double> reference;
    std::string reference_error;
    try {
        const double r = reference_objective(q, cfg, opts.exact_cap).objective;
        if (r == 0.0)
            reference_error = "reference objective is zero; instance not scalable";
        else
            reference = r;
    } catch (const std::exception& e) {
        reference_error = std::string("reference failed: ") + e.what();
    }

    std::vector<BenchRow> rows;
    auto run_one = [&](SolverKind kind, std::size_t k) {
        BenchRow row;
        row.n = n;
        row.k = k;
        row.solver = kind;
        row.seed = instance_seed;
        row.reference_obj = reference;
        try {
            HadofConfig run_cfg = cfg;
            run_cfg.k = k;
            const HadofResult r = run_solver(q, kind, run_cfg, opts.exact_cap);
            row.best_obj = r.best.objective;
            row.most_probable_obj = r.most_probable.objective;
            row.avg_obj = r.average_objective;
            row.wall_time_s = r.wall_time;
            if (reference) {
                row.scaled_best = scaled_objective(r.best.objective, *reference);
                row.scaled_most_probable = scaled_objective(r.most_probable.objective, *reference);
                row.scaled_avg = scaled_objective(r.average_objective, *reference);
            } else {
                row.error = reference_error;
            }
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        rows.push_back(std::move(row));
    };

    for (SolverKind kind : opts.solvers) {
        if (is_hadof(kind)) {
            for (std::size_t k : opts.k_values) run_one(kind, k);
        } else {
            run_one(kind, n);
        }
    }
    return rows;
}

}  // namespace detail

inline std::string format_csv_row(const BenchRow& r) {
    std::string s;
    s += std::to_string(r.n) + ',';
    s += std::to_string(r.k) + ',';
    s += std::string(to_string(r.solver)) + ',';
    s += std::to_string(r.seed) + ',';
    s += detail::csv_number(r.best_obj) + ',';
    s += detail::csv_number(r.most_probable_obj) + ',';
    s += detail::csv_number(r.avg_obj) + ',';
    s += detail::csv_number(r.reference_obj) + ',';
    s += detail::csv_number(r.scaled_best) + ',';
    s += detail::csv_number(r.scaled_most_probable) + ',';
    s += detail::csv_number(r.scaled_avg) + ',';
    s += detail::format_double(r.wall_time_s) + ',';
    s += detail::csv_quote(r.error);
    return s;
}

/// Runs the whole suite. Instance i of size n uses seed opts.seed + i.
/// Instances run on up to opts.jobs threads; row order does not depend on
/// scheduling.
inline std::vector<BenchRow> run_bench(const BenchOptions& opts) {
    struct Task {
        std::size_t n;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t n : opts.sizes)
        for (std::size_t i = 0; i < opts.instances_per_size; ++i) tasks.push_back({n, opts.seed + i});

    std::vector<std::vector<BenchRow>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t = next++; t < tasks.size(); t = next++)
            results[t] = detail::bench_instance(tasks[t].n, tasks[t].seed, opts);
    };
    const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, std::max<std::size_t>(1, tasks.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    std::vector<BenchRow> rows;
    for (auto& r : results) rows.insert(rows.end(), r.begin(), r.end());
    return rows;
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool header) {
    if (header) out << kBenchCsvHeader << '\n';
    for (const auto& r : rows) out << format_csv_row(r) << '\n';
}

/// Appends rows to `path`, writing the header only when the file is new or empty.
inline void append_bench_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
    std::error_code ec;
    const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for appending");
    write_bench_csv(out, rows, fresh);
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace hadof
