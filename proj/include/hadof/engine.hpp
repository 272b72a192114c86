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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hadof/decomposition.hpp"
#include "hadof/qaoa.hpp"
#include "hadof/qubo.hpp"
#include "hadof/random.hpp"
#include "hadof/sa.hpp"
#include "hadof/sample_set.hpp"

namespace hadof {

enum class SubSolver { qaoa, sa };

/// in_sweep: a subset's new marginals are visible to later subsets of the
/// same sweep. snapshot: every subset of a sweep reads the marginals from
/// the start of the sweep and updates are applied together afterwards.
enum class UpdateMode { in_sweep, snapshot };

inline std::string_view to_string(SubSolver s) { return s == SubSolver::qaoa ? "qaoa" : "sa"; }
inline std::string_view to_string(UpdateMode m) {
    return m == UpdateMode::in_sweep ? "in-sweep" : "snapshot";
}

inline SubSolver parse_sub_solver(std::string_view s) {
    if (s == "qaoa") return SubSolver::qaoa;
    if (s == "sa") return SubSolver::sa;
    throw std::invalid_argument("unknown sub-solver '" + std::string(s) + "'");
}

inline UpdateMode parse_update_mode(std::string_view s) {
    if (s == "in-sweep") return UpdateMode::in_sweep;
    if (s == "snapshot") return UpdateMode::snapshot;
    throw std::invalid_argument("unknown update mode '" + std::string(s) + "'");
}

struct HadofConfig {
    std::size_t k = 5;
    std::size_t p = 10;
    /// Shots per marginal estimate; 0 selects exact Born marginals (QAOA only).
    std::size_t marginal_shots = 500;
    std::size_t final_shots = 5000;
    SubSolver solver = SubSolver::qaoa;
    UpdateMode update_mode = UpdateMode::in_sweep;
    std::uint64_t seed = 0;
    /// SA settings; `reads` is ignored in favour of the shot counts above.
    SaParams sa{};

    void validate(std::size_t n) const {
        if (k == 0 || k > n)
            throw std::invalid_argument("HadofConfig: k = " + std::to_string(k) +
                                        " must be in [1, n = " + std::to_string(n) + "]");
        if (p == 0) throw std::invalid_argument("HadofConfig: p must be positive");
        if (final_shots == 0) throw std::invalid_argument("HadofConfig: final_shots must be positive");
        if (solver == SubSolver::qaoa && k > kMaxQubits)
            throw std::invalid_argument("HadofConfig: k = " + std::to_string(k) +
                                        " exceeds the simulator cap of " +
                                        std::to_string(kMaxQubits) + " qubits");
        if (solver == SubSolver::sa && marginal_shots == 0)
            throw std::invalid_argument("HadofConfig: exact marginals are only available for QAOA");
        SaParams check = sa;
        check.reads = 1;
        check.validate();
    }
};

struct ScoredAssignment {
    Assignment assignment;
    double objective = 0.0;
};

struct SolutionStats {
    ScoredAssignment best;
    ScoredAssignment most_probable;
    double average = 0.0;
};

struct HadofResult {
    std::vector<ScoredAssignment> global_samples;
    ScoredAssignment best;
    ScoredAssignment most_probable;
    double average_objective = 0.0;
    /// Marginals after each sweep l = 1..p.
    std::vector<MarginalVector> marginal_trajectory;
    double wall_time = 0.0;
};

/// Stream seed for the solve of the subset whose first variable is
/// `subset_head` during sweep `sweep` (sweep p + 1 is the final pass).
/// Keying on the subset rather than its position keeps snapshot sweeps
/// independent of subset order.
inline std::uint64_t subset_seed(std::uint64_t seed, std::size_t sweep, std::size_t subset_head) {
    return derive_seed(seed, sweep, subset_head);
}

/// For each draw s, places every subset's s-th draw at that subset's
/// variables.
inline std::vector<Assignment> aggregate(std::span<const SampleSet> subset_samples,
                                         const SubsetPlan& plan) {
    if (subset_samples.size() != plan.subsets.size())
        throw std::invalid_argument("aggregate: one sample set per subset required");
    if (subset_samples.empty()) throw std::invalid_argument("aggregate: empty plan");
    const std::size_t shots = subset_samples.front().draws().size();
    std::size_t n = 0;
    for (std::size_t i = 0; i < plan.subsets.size(); ++i) {
        const auto& s = subset_samples[i];
        if (s.draws().size() != shots)
            throw std::invalid_argument("aggregate: draw count mismatch (" +
                                        std::to_string(s.draws().size()) + " vs " +
                                        std::to_string(shots) + ")");
        if (s.width() != plan.subsets[i].size())
            throw std::invalid_argument("aggregate: sample width does not match subset size");
        n += plan.subsets[i].size();
    }
    if (shots == 0) throw std::invalid_argument("aggregate: no ordered draws");

    std::vector<Assignment> globals(shots, Assignment(n, 0));
    for (std::size_t i = 0; i < plan.subsets.size(); ++i) {
        const auto& indices = plan.subsets[i];
        const auto& draws = subset_samples[i].draws();
        for (std::size_t s = 0; s < shots; ++s)
            for (std::size_t a = 0; a < indices.size(); ++a)
                globals[s].at(indices[a]) = draws[s][a] == '1';
    }
    return globals;
}

inline std::vector<ScoredAssignment> score(std::vector<Assignment> globals, const QuboMatrix& q) {
    std::vector<ScoredAssignment> out;
    out.reserve(globals.size());
    for (auto& x : globals) {
        const double e = evaluate(q, x);
        out.push_back({std::move(x), e});
    }
    return out;
}

/// Concatenation of each subset's modal draw.
inline Assignment most_probable_assignment(std::span<const SampleSet> subset_samples,
                                           const SubsetPlan& plan, std::size_t n) {
    if (subset_samples.size() != plan.subsets.size())
        throw std::invalid_argument("most_probable_assignment: one sample set per subset required");
    Assignment x(n, 0);
    for (std::size_t i = 0; i < plan.subsets.size(); ++i) {
        const std::string& modal = subset_samples[i].modal();
        for (std::size_t a = 0; a < plan.subsets[i].size(); ++a)
            x.at(plan.subsets[i][a]) = modal[a] == '1';
    }
    return x;
}

inline SolutionStats solution_stats(std::span<const ScoredAssignment> globals,
                                    std::span<const SampleSet> subset_samples,
                                    const SubsetPlan& plan, const QuboMatrix& q) {
    if (globals.empty()) throw std::invalid_argument("solution_stats: empty sample list");
    SolutionStats stats;
    std::size_t best = 0;
    for (std::size_t s = 0; s < globals.size(); ++s)
        if (globals[s].objective < globals[best].objective) best = s;
    // Mean taken as best + mean excess so that average >= best holds exactly.
    double excess = 0.0;
    for (const auto& g : globals) excess += g.objective - globals[best].objective;
    stats.best = globals[best];
    stats.average = globals[best].objective + excess / static_cast<double>(globals.size());
    stats.most_probable.assignment = most_probable_assignment(subset_samples, plan, q.size());
    stats.most_probable.objective = evaluate(q, stats.most_probable.assignment);
    return stats;
}

inline SolutionStats solution_stats(const std::vector<Assignment>& globals,
                                    std::span<const SampleSet> subset_samples,
                                    const SubsetPlan& plan, const QuboMatrix& q) {
    const auto scored = score(globals, q);
    return solution_stats(std::span<const ScoredAssignment>(scored), subset_samples, plan, q);
}

/// value / reference. With a negative exact minimum as reference the result
/// is at most 1, and 1 means optimal.
inline double scaled_objective(double value, double reference) {
    if (reference == 0.0)
        throw std::domain_error("scaled_objective: reference objective is zero");
    return value / reference;
}

namespace detail {

inline MarginalVector solve_for_marginals(const SubProblem& sub, const Schedule& schedule,
                                          std::size_t depth, const HadofConfig& cfg,
                                          std::uint64_t seed) {
    if (cfg.solver == SubSolver::qaoa) {
        const StateVector state = apply_qaoa(to_ising(sub.sub_q), schedule, depth);
        return qubit_marginals(state, cfg.marginal_shots, seed);
    }
    SaParams params = cfg.sa;
    params.reads = cfg.marginal_shots;
    return sa_marginals(sa_solve(sub, schedule, depth, params, seed));
}

inline SampleSet solve_for_samples(const SubProblem& sub, const Schedule& schedule,
                                   const HadofConfig& cfg, std::uint64_t seed) {
    if (cfg.solver == SubSolver::qaoa) {
        const StateVector state = apply_qaoa(to_ising(sub.sub_q), schedule, schedule.layers());
        return sample(state, cfg.final_shots, seed);
    }
    SaParams params = cfg.sa;
    params.reads = cfg.final_shots;
    return sa_solve(sub, schedule, schedule.layers(), params, seed);
}

inline HadofResult finish(const QuboMatrix& q, const SubsetPlan& plan,
                          const std::vector<SampleSet>& subset_samples) {
    HadofResult result;
    result.global_samples = score(aggregate(subset_samples, plan), q);
    const auto stats = solution_stats(std::span<const ScoredAssignment>(result.global_samples),
                                      subset_samples, plan, q);
    result.best = stats.best;
    result.most_probable = stats.most_probable;
    result.average_objective = stats.average;
    return result;
}

}  // namespace detail

/// Full HADOF run over an explicit plan.
inline HadofResult run_hadof(const QuboMatrix& q, const HadofConfig& cfg, const SubsetPlan& plan) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = q.size();
    cfg.validate(n);
    validate_plan(plan, n);
    if (plan.k > cfg.k) throw std::invalid_argument("run_hadof: plan subsets exceed k");

    const Schedule schedule = anneal_schedule(cfg.p);
    MarginalVector marginals = init_marginals(n);
    std::vector<MarginalVector> trajectory;
    trajectory.reserve(cfg.p);

    for (std::size_t layer = 1; layer <= cfg.p; ++layer) {
        MarginalVector next = marginals;
        for (const auto& subset : plan.subsets) {
            const MarginalVector& source = cfg.update_mode == UpdateMode::in_sweep ? next : marginals;
            const SubProblem sub = build_sub_qubo(q, subset, source);
            const MarginalVector local = detail::solve_for_marginals(
                sub, schedule, layer, cfg, subset_seed(cfg.seed, layer, subset.front()));
            for (std::size_t a = 0; a < subset.size(); ++a) next.set(subset[a], local[a]);
        }
        marginals = std::move(next);
        trajectory.push_back(marginals);
    }

    std::vector<SampleSet> subset_samples;
    subset_samples.reserve(plan.subsets.size());
    for (const auto& subset : plan.subsets) {
        const SubProblem sub = build_sub_qubo(q, subset, marginals);
        subset_samples.push_back(detail::solve_for_samples(
            sub, schedule, cfg, subset_seed(cfg.seed, cfg.p + 1, subset.front())));
    }

    HadofResult result = detail::finish(q, plan, subset_samples);
    result.marginal_trajectory = std::move(trajectory);
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

inline HadofResult run_hadof(const QuboMatrix& q, const HadofConfig& cfg) {
    cfg.validate(q.size());
    return run_hadof(q, cfg, partition_variables(q.size(), cfg.k));
}

/// Simulated annealing on the whole problem with final_shots reads at full
/// depth. Seeded exactly like the final pass of a single-subset HADOF run,
/// so run_hadof with k = n and solver = sa reproduces it sample for sample.
inline HadofResult run_global_sa(const QuboMatrix& q, const HadofConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    if (cfg.p == 0) throw std::invalid_argument("run_global_sa: p must be positive");
    if (cfg.final_shots == 0) throw std::invalid_argument("run_global_sa: final_shots must be positive");
    const Schedule schedule = anneal_schedule(cfg.p);
    SaParams params = cfg.sa;
    params.reads = cfg.final_shots;
    const SubsetPlan plan = partition_variables(q.size(), q.size());
    std::vector<SampleSet> samples;
    samples.push_back(sa_solve(q, schedule, cfg.p, params, subset_seed(cfg.seed, cfg.p + 1, 0)));
    HadofResult result = detail::finish(q, plan, samples);
    result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace hadof
