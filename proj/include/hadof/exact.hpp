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

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadof/qubo.hpp"
#include "hadof/sa.hpp"

namespace hadof {

inline constexpr std::size_t kDefaultExactCap = 24;

struct ExactResult {
    Assignment assignment;
    double objective = 0.0;
};

/// Exhaustive minimization over all 2^n assignments in Gray-code order,
/// O(n) work per step. Ties (within a relative 1e-9) go to the smallest
/// assignment read as an integer with x_i as bit i.
inline ExactResult brute_force(const QuboMatrix& q, std::size_t cap = kDefaultExactCap) {
    const std::size_t n = q.size();
    if (n > cap || n >= 63)
        throw std::invalid_argument("brute_force: n = " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
    const detail::DenseQubo dense(q);
    std::vector<double> field(n, 0.0);
    std::uint64_t state = 0;
    double energy = 0.0;
    std::uint64_t best_state = 0;
    double best = 0.0;

    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t g = 1; g < count; ++g) {
        const auto i = static_cast<std::size_t>(std::countr_zero(g));
        const bool was_set = (state >> i) & 1U;
        const double sign = was_set ? -1.0 : 1.0;
        energy += sign * (dense.diag(i) + field[i]);
        state ^= std::uint64_t{1} << i;
        const double* w = dense.row(i);
        for (std::size_t j = 0; j < n; ++j) field[j] += sign * w[j];

        const double tol = 1e-9 * std::max(1.0, std::abs(best));
        if (energy < best - tol || (energy <= best + tol && state < best_state)) {
            best = energy;
            best_state = state;
        }
    }

    ExactResult r;
    r.assignment.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.assignment[i] = (best_state >> i) & 1U;
    r.objective = evaluate(q, r.assignment);
    return r;
}

}  // namespace hadof
