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

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadof/qubo.hpp"

namespace hadof {

/// Per-variable probabilities P(x_i = 1), each in [0, 1].
class MarginalVector {
 public:
    MarginalVector() = default;
    MarginalVector(std::size_t n, double value) : p_(n) {
        for (std::size_t i = 0; i < n; ++i) set(i, value);
    }
    explicit MarginalVector(std::vector<double> values) : p_(std::move(values)) {
        for (std::size_t i = 0; i < p_.size(); ++i) set(i, p_[i]);
    }

    std::size_t size() const { return p_.size(); }
    double operator[](std::size_t i) const { return p_[i]; }
    std::span<const double> values() const { return p_; }

    void set(std::size_t i, double value) {
        if (!(value >= 0.0 && value <= 1.0))
            throw std::domain_error("MarginalVector: probability " + std::to_string(value) +
                                    " outside [0, 1]");
        p_.at(i) = value;
    }

    friend bool operator==(const MarginalVector&, const MarginalVector&) = default;

 private:
    std::vector<double> p_;
};

inline MarginalVector init_marginals(std::size_t n) {
    if (n == 0) throw std::invalid_argument("init_marginals: n must be positive");
    return MarginalVector(n, 0.5);
}

/// Disjoint variable subsets covering 0..n-1, each of size at most k.
struct SubsetPlan {
    std::vector<std::vector<std::size_t>> subsets;
    std::size_t k = 0;

    std::size_t num_subsets() const { return subsets.size(); }
};

/// Maps (n, k) to a plan. Strategies must return disjoint subsets with
/// ascending indices that cover every variable.
using PartitionStrategy = std::function<SubsetPlan(std::size_t n, std::size_t k)>;

/// Contiguous blocks [0, k), [k, 2k), ...; the last block holds n mod k
/// variables when k does not divide n.
inline SubsetPlan partition_variables(std::size_t n, std::size_t k) {
    if (k == 0) throw std::invalid_argument("partition_variables: k must be positive");
    if (k > n)
        throw std::invalid_argument("partition_variables: k = " + std::to_string(k) +
                                    " exceeds n = " + std::to_string(n));
    SubsetPlan plan;
    plan.k = k;
    for (std::size_t start = 0; start < n; start += k) {
        auto& s = plan.subsets.emplace_back();
        for (std::size_t i = start; i < std::min(n, start + k); ++i) s.push_back(i);
    }
    return plan;
}

/// Throws unless the plan is a valid partition of 0..n-1.
inline void validate_plan(const SubsetPlan& plan, std::size_t n) {
    std::vector<bool> seen(n, false);
    std::size_t covered = 0;
    for (const auto& s : plan.subsets) {
        if (s.empty()) throw std::invalid_argument("SubsetPlan: empty subset");
        if (s.size() > plan.k) throw std::invalid_argument("SubsetPlan: subset larger than k");
        for (std::size_t a = 0; a < s.size(); ++a) {
            if (s[a] >= n) throw std::out_of_range("SubsetPlan: index out of range");
            if (a > 0 && s[a] <= s[a - 1])
                throw std::invalid_argument("SubsetPlan: indices must be ascending");
            if (seen[s[a]]) throw std::invalid_argument("SubsetPlan: subsets overlap");
            seen[s[a]] = true;
            ++covered;
        }
    }
    if (covered != n) throw std::invalid_argument("SubsetPlan: subsets do not cover all variables");
}

/// A sub-QUBO over `indices` with every other variable replaced by its
/// marginal expectation. For any sub-assignment y,
///   E[Q(y, x_rest)] = evaluate(sub_q, y) + offset
/// when each x_j outside the subset is an independent Bernoulli(p_j).
struct SubProblem {
    std::vector<std::size_t> indices;
    QuboMatrix sub_q;
    double offset = 0.0;

    std::size_t size() const { return indices.size(); }
};

inline SubProblem build_sub_qubo(const QuboMatrix& q, std::span<const std::size_t> subset,
                                 const MarginalVector& p) {
    const std::size_t n = q.size();
    if (subset.empty()) throw std::invalid_argument("build_sub_qubo: empty subset");
    if (p.size() != n) throw std::invalid_argument("build_sub_qubo: marginal vector length mismatch");

    constexpr std::size_t absent = static_cast<std::size_t>(-1);
    std::vector<std::size_t> local(n, absent);
    for (std::size_t a = 0; a < subset.size(); ++a) {
        const std::size_t g = subset[a];
        if (g >= n)
            throw std::out_of_range("build_sub_qubo: index " + std::to_string(g) +
                                    " out of range for n = " + std::to_string(n));
        if (local[g] != absent)
            throw std::invalid_argument("build_sub_qubo: duplicate index " + std::to_string(g));
        if (a > 0 && g < subset[a - 1])
            throw std::invalid_argument("build_sub_qubo: indices must be ascending");
        local[g] = a;
    }

    SubProblem sub{std::vector<std::size_t>(subset.begin(), subset.end()), QuboMatrix(subset.size()), 0.0};
    std::vector<double> linear(subset.size(), 0.0);
    q.for_each([&](std::size_t i, std::size_t j, double v) {
        const std::size_t li = local[i];
        const std::size_t lj = local[j];
        if (li != absent && lj != absent) {
            if (i == j)
                linear[li] += v;
            else
                sub.sub_q.add(li, lj, v);
        } else if (li != absent) {
            linear[li] += v * p[j];
        } else if (lj != absent) {
            linear[lj] += v * p[i];
        } else {
            // E[x_j^2] = p_j on the diagonal, p_i p_j for independent pairs.
            sub.offset += (i == j) ? v * p[i] : v * p[i] * p[j];
        }
    });
    for (std::size_t a = 0; a < linear.size(); ++a)
        if (linear[a] != 0.0 || q.contains(subset[a], subset[a])) sub.sub_q.add(a, a, linear[a]);
    return sub;
}

}  // namespace hadof
