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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hadof/decomposition.hpp"
#include "hadof/qaoa.hpp"
#include "hadof/qubo.hpp"
#include "hadof/random.hpp"
#include "hadof/sample_set.hpp"

namespace hadof {

/// Simulated annealing settings. The inverse temperature at stage m is
///   beta_hot + (beta_cold - beta_hot) * gammas[m-1]
/// so the QAOA gamma ramp doubles as the annealing fraction.
struct SaParams {
    std::size_t sweeps_per_stage = 10;
    std::size_t reads = 500;
    double beta_hot = 0.1;
    double beta_cold = 4.0;

    void validate() const {
        if (sweeps_per_stage == 0) throw std::invalid_argument("SaParams: sweeps_per_stage must be positive");
        if (reads == 0) throw std::invalid_argument("SaParams: reads must be positive");
        if (!(beta_hot > 0.0)) throw std::invalid_argument("SaParams: beta_hot must be positive");
        if (!(beta_cold > beta_hot))
            throw std::invalid_argument("SaParams: beta_cold must exceed beta_hot");
    }
};

namespace detail {

/// Dense symmetric view of a QUBO for O(1) flip deltas with cached fields.
class DenseQubo {
 public:
    explicit DenseQubo(const QuboMatrix& q) : n_(q.size()), diag_(n_, 0.0), w_(n_ * n_, 0.0) {
        q.for_each([&](std::size_t i, std::size_t j, double v) {
            if (i == j) {
                diag_[i] += v;
            } else {
                w_[i * n_ + j] += v;
                w_[j * n_ + i] += v;
            }
        });
    }

    std::size_t size() const { return n_; }
    double diag(std::size_t i) const { return diag_[i]; }
    const double* row(std::size_t i) const { return w_.data() + i * n_; }

 private:
    std::size_t n_;
    std::vector<double> diag_;
    std::vector<double> w_;
};

inline std::vector<double> sa_betas(const Schedule& schedule, std::size_t depth, const SaParams& params) {
    std::vector<double> betas(depth);
    for (std::size_t m = 0; m < depth; ++m)
        betas[m] = params.beta_hot + (params.beta_cold - params.beta_hot) * schedule.gammas[m];
    return betas;
}

/// One Metropolis chain from a uniformly random start; returns the final state.
inline Assignment anneal_chain(const DenseQubo& q, const std::vector<double>& betas,
                               std::size_t sweeps_per_stage, Rng& rng) {
    const std::size_t n = q.size();
    Assignment x(n);
    for (auto& b : x) b = rng.coin();
    std::vector<double> field(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!x[i]) continue;
        const double* w = q.row(i);
        for (std::size_t j = 0; j < n; ++j) field[j] += w[j];
    }
    for (double beta : betas) {
        for (std::size_t sweep = 0; sweep < sweeps_per_stage; ++sweep) {
            for (std::size_t i = 0; i < n; ++i) {
                const double delta = (x[i] ? -1.0 : 1.0) * (q.diag(i) + field[i]);
                if (delta > 0.0 && rng.uniform() >= std::exp(-beta * delta)) continue;
                const double sign = x[i] ? -1.0 : 1.0;
                x[i] ^= 1U;
                const double* w = q.row(i);
                for (std::size_t j = 0; j < n; ++j) field[j] += sign * w[j];
            }
        }
    }
    return x;
}

}  // namespace detail

/// Runs `params.reads` independent chains over stages 1..depth on the given
/// QUBO. Read r uses its own stream derive_seed(seed, r); the returned set
/// records final states in read order.
inline SampleSet sa_solve(const QuboMatrix& q, const Schedule& schedule, std::size_t depth,
                          const SaParams& params, std::uint64_t seed) {
    params.validate();
    if (depth == 0 || depth > schedule.layers())
        throw std::invalid_argument("sa_solve: depth must be in [1, " +
                                    std::to_string(schedule.layers()) + "]");
    const detail::DenseQubo dense(q);
    const auto betas = detail::sa_betas(schedule, depth, params);
    SampleSet out(q.size());
    for (std::size_t r = 0; r < params.reads; ++r) {
        Rng rng(derive_seed(seed, r));
        out.add_draw(to_bitstring(detail::anneal_chain(dense, betas, params.sweeps_per_stage, rng)));
    }
    return out;
}

inline SampleSet sa_solve(const SubProblem& sub, const Schedule& schedule, std::size_t depth,
                          const SaParams& params, std::uint64_t seed) {
    if (sub.indices.empty()) throw std::invalid_argument("sa_solve: empty subset");
    return sa_solve(sub.sub_q, schedule, depth, params, seed);
}

inline MarginalVector sa_marginals(const SampleSet& samples) {
    if (samples.empty()) throw std::invalid_argument("sa_marginals: empty sample set");
    return MarginalVector(samples.bit_frequencies());
}

}  // namespace hadof
