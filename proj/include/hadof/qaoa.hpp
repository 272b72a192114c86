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

// Dense statevector simulation of QAOA with the linear annealing
// parametrization.
//
// Each layer applies exp(-i gamma H_C / w) and then exp(-i beta H_M) with
// H_M = -sum_j X_j, whose ground state is the initial |+>^k. Here H_C is
// the Ising cost without its offset and w is its largest absolute field or
// coupling, so gamma in [0, 1] spans the same phase range for every
// sub-problem. With both angles positive the layers trotterize an anneal
// from the mixer ground state toward the cost ground state.
//
// Bit order: qubit j is bit j of the basis-state index (bit 0 least
// significant). In bitstrings qubit 0 is the leftmost character, so basis
// index 0b011 on three qubits reads "110".

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadof/decomposition.hpp"
#include "hadof/qubo.hpp"
#include "hadof/random.hpp"
#include "hadof/sample_set.hpp"

namespace hadof {

/// Largest register apply_qaoa accepts.
inline constexpr std::size_t kMaxQubits = 20;

/// Layer angles; layer m (1-based) uses betas[m-1] and gammas[m-1].
struct Schedule {
    std::vector<double> betas;
    std::vector<double> gammas;

    std::size_t layers() const { return betas.size(); }
};

/// beta_m = 1 - m/p and gamma_m = m/p for m = 1..p.
inline Schedule anneal_schedule(std::size_t p) {
    if (p == 0) throw std::invalid_argument("anneal_schedule: p must be positive");
    Schedule s;
    s.betas.reserve(p);
    s.gammas.reserve(p);
    for (std::size_t m = 1; m <= p; ++m) {
        const double frac = static_cast<double>(m) / static_cast<double>(p);
        s.betas.push_back(1.0 - frac);
        s.gammas.push_back(frac);
    }
    return s;
}

class StateVector {
 public:
    using amplitude_type = std::complex<double>;

    /// |+>^k.
    static StateVector plus_state(std::size_t qubits) {
        check_qubits(qubits);
        const std::size_t dim = std::size_t{1} << qubits;
        return StateVector(qubits, std::vector<amplitude_type>(dim, 1.0 / std::sqrt(double(dim))));
    }

    /// Computational basis state |index>.
    static StateVector basis_state(std::size_t qubits, std::size_t index) {
        check_qubits(qubits);
        const std::size_t dim = std::size_t{1} << qubits;
        if (index >= dim) throw std::out_of_range("basis_state: index out of range");
        std::vector<amplitude_type> amps(dim, 0.0);
        amps[index] = 1.0;
        return StateVector(qubits, std::move(amps));
    }

    StateVector(std::size_t qubits, std::vector<amplitude_type> amps)
        : qubits_(qubits), amps_(std::move(amps)) {
        if (amps_.size() != (std::size_t{1} << qubits_))
            throw std::invalid_argument("StateVector: amplitude count must be 2^qubits");
    }

    std::size_t qubits() const { return qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    const std::vector<amplitude_type>& amplitudes() const { return amps_; }
    std::vector<amplitude_type>& amplitudes() { return amps_; }

    double probability(std::size_t index) const { return std::norm(amps_.at(index)); }

    std::vector<double> probabilities() const {
        std::vector<double> out(amps_.size());
        for (std::size_t z = 0; z < amps_.size(); ++z) out[z] = std::norm(amps_[z]);
        return out;
    }

    double norm_squared() const {
        double s = 0.0;
        for (const auto& a : amps_) s += std::norm(a);
        return s;
    }

    /// Multiplies each amplitude by exp(-i gamma energies[z]).
    void apply_diagonal_phase(const std::vector<double>& energies, double gamma) {
        for (std::size_t z = 0; z < amps_.size(); ++z)
            amps_[z] *= std::polar(1.0, -gamma * energies[z]);
    }

    /// exp(+i beta X) on every qubit, i.e. exp(-i beta H_M) for H_M = -sum X.
    void apply_x_mixer(double beta) {
        const double c = std::cos(beta);
        const amplitude_type mis(0.0, std::sin(beta));
        for (std::size_t q = 0; q < qubits_; ++q) {
            const std::size_t stride = std::size_t{1} << q;
            for (std::size_t base = 0; base < amps_.size(); base += 2 * stride) {
                for (std::size_t z = base; z < base + stride; ++z) {
                    const amplitude_type a0 = amps_[z];
                    const amplitude_type a1 = amps_[z + stride];
                    amps_[z] = c * a0 + mis * a1;
                    amps_[z + stride] = mis * a0 + c * a1;
                }
            }
        }
    }

 private:
    static void check_qubits(std::size_t qubits) {
        if (qubits == 0 || qubits > kMaxQubits)
            throw std::invalid_argument("StateVector: qubit count " + std::to_string(qubits) +
                                        " outside [1, " + std::to_string(kMaxQubits) + "]");
    }

    std::size_t qubits_;
    std::vector<amplitude_type> amps_;
};

inline std::string basis_bitstring(std::size_t index, std::size_t qubits) {
    std::string s(qubits, '0');
    for (std::size_t j = 0; j < qubits; ++j)
        if ((index >> j) & 1U) s[j] = '1';
    return s;
}

/// Ising energy of every basis state, offset excluded.
inline std::vector<double> diagonal_energies(const IsingModel& model) {
    const std::size_t k = model.size();
    if (k == 0 || k > kMaxQubits)
        throw std::invalid_argument("diagonal_energies: qubit count " + std::to_string(k) +
                                    " outside [1, " + std::to_string(kMaxQubits) + "]");
    const std::size_t dim = std::size_t{1} << k;
    std::vector<double> e(dim, 0.0);
    for (std::size_t z = 0; z < dim; ++z) {
        double acc = 0.0;
        for (std::size_t i = 0; i < k; ++i) acc += ((z >> i) & 1U) ? model.h[i] : -model.h[i];
        for (const auto& c : model.couplings)
            acc += (((z >> c.i) ^ (z >> c.j)) & 1U) ? -c.value : c.value;
        e[z] = acc;
    }
    return e;
}

/// Largest |h_i| or |J_ij|; 1 for the zero model.
inline double cost_scale(const IsingModel& model) {
    double w = 0.0;
    for (double h : model.h) w = std::max(w, std::abs(h));
    for (const auto& c : model.couplings) w = std::max(w, std::abs(c.value));
    return w > 0.0 ? w : 1.0;
}

/// QAOA circuit for a fixed cost Hamiltonian. Each layer applies the cost
/// phase exp(-i gamma H_C / w) followed by the mixer exp(-i beta H_M).
class QaoaCircuit {
 public:
    explicit QaoaCircuit(const IsingModel& model)
        : qubits_(model.size()), energies_(diagonal_energies(model)) {
        const double w = cost_scale(model);
        for (auto& e : energies_) e /= w;
    }

    std::size_t qubits() const { return qubits_; }
    /// Normalized cost energies H_C(z) / w.
    const std::vector<double>& energies() const { return energies_; }

    StateVector initial_state() const { return StateVector::plus_state(qubits_); }

    void apply_layer(StateVector& state, double beta, double gamma) const {
        state.apply_diagonal_phase(energies_, gamma);
        state.apply_x_mixer(beta);
    }

    /// Applies layers 1..depth of the schedule to |+>^k.
    StateVector run(const Schedule& schedule, std::size_t depth) const {
        if (depth > schedule.layers())
            throw std::invalid_argument("apply_qaoa: depth " + std::to_string(depth) +
                                        " exceeds schedule length " +
                                        std::to_string(schedule.layers()));
        StateVector state = initial_state();
        for (std::size_t m = 0; m < depth; ++m)
            apply_layer(state, schedule.betas[m], schedule.gammas[m]);
        return state;
    }

 private:
    std::size_t qubits_;
    std::vector<double> energies_;
};

inline StateVector apply_qaoa(const IsingModel& model, const Schedule& schedule, std::size_t depth) {
    if (depth > schedule.layers())
        throw std::invalid_argument("apply_qaoa: depth exceeds schedule length");
    return QaoaCircuit(model).run(schedule, depth);
}

namespace detail {

/// Inverse-CDF sampler over basis states.
class BornSampler {
 public:
    explicit BornSampler(const StateVector& state) : cdf_(state.dimension()) {
        double acc = 0.0;
        for (std::size_t z = 0; z < cdf_.size(); ++z) {
            acc += state.probability(z);
            cdf_[z] = acc;
        }
        total_ = acc;
    }

    std::size_t draw(Rng& rng) const {
        const double u = rng.uniform() * total_;
        auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
        if (it == cdf_.end()) it = std::lower_bound(cdf_.begin(), cdf_.end(), total_);
        return static_cast<std::size_t>(it - cdf_.begin());
    }

 private:
    std::vector<double> cdf_;
    double total_ = 0.0;
};

}  // namespace detail

/// P(qubit j = 1). shots == 0 returns the exact Born marginals; otherwise
/// `shots` full-register draws are made and each qubit's bit is averaged.
inline MarginalVector qubit_marginals(const StateVector& state, std::size_t shots,
                                      std::uint64_t seed) {
    const std::size_t k = state.qubits();
    std::vector<double> ones(k, 0.0);
    if (shots == 0) {
        for (std::size_t z = 0; z < state.dimension(); ++z) {
            const double pz = state.probability(z);
            for (std::size_t j = 0; j < k; ++j)
                if ((z >> j) & 1U) ones[j] += pz;
        }
        const double total = state.norm_squared();
        for (auto& v : ones) v = std::clamp(v / total, 0.0, 1.0);
        return MarginalVector(std::move(ones));
    }
    detail::BornSampler sampler(state);
    Rng rng(seed);
    std::vector<std::size_t> counts(k, 0);
    for (std::size_t s = 0; s < shots; ++s) {
        const std::size_t z = sampler.draw(rng);
        for (std::size_t j = 0; j < k; ++j)
            if ((z >> j) & 1U) ++counts[j];
    }
    for (std::size_t j = 0; j < k; ++j)
        ones[j] = static_cast<double>(counts[j]) / static_cast<double>(shots);
    return MarginalVector(std::move(ones));
}

/// `shots` ordered draws from the Born distribution.
inline SampleSet sample(const StateVector& state, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("sample: shots must be positive");
    detail::BornSampler sampler(state);
    Rng rng(seed);
    SampleSet out(state.qubits());
    for (std::size_t s = 0; s < shots; ++s)
        out.add_draw(basis_bitstring(sampler.draw(rng), state.qubits()));
    return out;
}

}  // namespace hadof
