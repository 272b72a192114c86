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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hadof/random.hpp"

namespace hadof {

/// A binary assignment x in {0, 1}^n, one byte per variable.
using Assignment = std::vector<std::uint8_t>;

/// Upper-triangular QUBO coefficient matrix. Entry (i, i) is the linear
/// term of variable i; entry (i, j), i < j, couples i and j. The objective
/// is sum_{i <= j} Q_ij x_i x_j.
///
/// Entries are stored sparsely per row, sorted by column. Lower-triangular
/// entries cannot be stored; absent entries read as zero.
class QuboMatrix {
 public:
    struct Entry {
        std::size_t col;
        double value;

        friend bool operator==(const Entry&, const Entry&) = default;
    };

    explicit QuboMatrix(std::size_t n) : rows_(n) {
        if (n == 0) throw std::invalid_argument("QuboMatrix: n must be positive");
    }

    std::size_t size() const { return rows_.size(); }

    /// Number of stored coefficients.
    std::size_t num_entries() const { return num_entries_; }

    double get(std::size_t i, std::size_t j) const {
        check_index(i, j);
        const auto& row = rows_[i];
        auto it = lower_bound(row, j);
        return (it != row.end() && it->col == j) ? it->value : 0.0;
    }

    bool contains(std::size_t i, std::size_t j) const {
        check_index(i, j);
        const auto& row = rows_[i];
        auto it = lower_bound(row, j);
        return it != row.end() && it->col == j;
    }

    /// Sets Q_ij, i <= j, replacing any stored value.
    void set(std::size_t i, std::size_t j, double value) { *slot(i, j) = value; }

    /// Adds to Q_ij, i <= j.
    void add(std::size_t i, std::size_t j, double value) { *slot(i, j) += value; }

    /// Entries of row i with column >= i, ascending by column.
    std::span<const Entry> row(std::size_t i) const { return rows_.at(i); }

    /// Calls fn(i, j, value) for every stored entry in row-major order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (const auto& e : rows_[i]) fn(i, e.col, e.value);
    }

    friend bool operator==(const QuboMatrix&, const QuboMatrix&) = default;

 private:
    using Row = std::vector<Entry>;

    static Row::const_iterator lower_bound(const Row& row, std::size_t j) {
        return std::lower_bound(row.begin(), row.end(), j,
                                [](const Entry& e, std::size_t c) { return e.col < c; });
    }

    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_.size() || j >= rows_.size())
            throw std::out_of_range("QuboMatrix: index (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") out of range for n = " +
                                    std::to_string(rows_.size()));
        if (j < i)
            throw std::invalid_argument("QuboMatrix: lower-triangular entry (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
    }

    double* slot(std::size_t i, std::size_t j) {
        check_index(i, j);
        auto& row = rows_[i];
        if (row.empty() || row.back().col < j) {
            row.push_back({j, 0.0});
            ++num_entries_;
            return &row.back().value;
        }
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const Entry& e, std::size_t c) { return e.col < c; });
        if (it == row.end() || it->col != j) {
            it = row.insert(it, {j, 0.0});
            ++num_entries_;
        }
        return &it->value;
    }

    std::vector<Row> rows_;
    std::size_t num_entries_ = 0;
};

/// Objective x^T Q x. Diagonal entries act linearly because x_i^2 = x_i.
inline double evaluate(const QuboMatrix& q, std::span<const std::uint8_t> x) {
    if (x.size() != q.size())
        throw std::invalid_argument("evaluate: assignment length " + std::to_string(x.size()) +
                                    " does not match n = " + std::to_string(q.size()));
    double total = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!x[i]) continue;
        for (const auto& e : q.row(i))
            if (x[e.col]) total += e.value;
    }
    return total;
}

/// Ising form of a QUBO: E(z) = sum_i h_i z_i + sum_{i<j} J_ij z_i z_j + offset,
/// with spins z_i = 2 x_i - 1 (so x_i = (1 + z_i) / 2).
struct IsingModel {
    struct Coupling {
        std::size_t i;
        std::size_t j;
        double value;
    };

    std::vector<double> h;
    std::vector<Coupling> couplings;  // i < j, row-major order
    double offset = 0.0;

    std::size_t size() const { return h.size(); }
};

/// Energy of a spin configuration; spins[i] must be -1 or +1.
inline double ising_energy(const IsingModel& model, std::span<const int> spins) {
    if (spins.size() != model.size())
        throw std::invalid_argument("ising_energy: spin vector length mismatch");
    double e = model.offset;
    for (std::size_t i = 0; i < model.h.size(); ++i) e += model.h[i] * spins[i];
    for (const auto& c : model.couplings) e += c.value * spins[c.i] * spins[c.j];
    return e;
}

inline IsingModel to_ising(const QuboMatrix& q) {
    IsingModel m;
    m.h.assign(q.size(), 0.0);
    q.for_each([&](std::size_t i, std::size_t j, double v) {
        if (i == j) {
            m.h[i] += v / 2.0;
            m.offset += v / 2.0;
        } else {
            const double quarter = v / 4.0;
            m.couplings.push_back({i, j, quarter});
            m.h[i] += quarter;
            m.h[j] += quarter;
            m.offset += quarter;
        }
    });
    return m;
}

/// Random dense upper-triangular instance with every entry (diagonal
/// included) drawn i.i.d. uniform on [lo, hi). Entries are drawn in
/// row-major order from Rng(seed), so the result is identical on every
/// platform for the same arguments.
inline QuboMatrix generate_random_qubo(std::size_t n, std::uint64_t seed, double lo = -10.0,
                                       double hi = 10.0) {
    if (n == 0) throw std::invalid_argument("generate_random_qubo: n must be positive");
    if (!(lo < hi)) throw std::invalid_argument("generate_random_qubo: requires lo < hi");
    QuboMatrix q(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) q.set(i, j, rng.uniform(lo, hi));
    return q;
}

}  // namespace hadof
