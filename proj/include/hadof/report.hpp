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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hadof/engine.hpp"
#include "hadof/solvers.hpp"

namespace hadof {

using json = nlohmann::ordered_json;

inline json config_to_json(const HadofConfig& cfg) {
    return json{{"k", cfg.k},
                {"p", cfg.p},
                {"marginal_shots", cfg.marginal_shots},
                {"final_shots", cfg.final_shots},
                {"update_mode", std::string(to_string(cfg.update_mode))},
                {"seed", cfg.seed},
                {"sa",
                 {{"sweeps_per_stage", cfg.sa.sweeps_per_stage},
                  {"beta_hot", cfg.sa.beta_hot},
                  {"beta_cold", cfg.sa.beta_cold}}}};
}

/// Overlays keys present in `j` onto `cfg`; unknown keys are rejected.
inline void apply_config_json(const json& j, HadofConfig& cfg) {
    if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "k") cfg.k = value.get<std::size_t>();
        else if (key == "p") cfg.p = value.get<std::size_t>();
        else if (key == "marginal_shots") cfg.marginal_shots = value.get<std::size_t>();
        else if (key == "final_shots") cfg.final_shots = value.get<std::size_t>();
        else if (key == "update_mode") cfg.update_mode = parse_update_mode(value.get<std::string>());
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "sa") {
            for (const auto& [sk, sv] : value.items()) {
                if (sk == "sweeps_per_stage") cfg.sa.sweeps_per_stage = sv.get<std::size_t>();
                else if (sk == "beta_hot") cfg.sa.beta_hot = sv.get<double>();
                else if (sk == "beta_cold") cfg.sa.beta_cold = sv.get<double>();
                else throw std::invalid_argument("config: unknown key 'sa." + sk + "'");
            }
        } else {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }
}

inline json scored_to_json(const ScoredAssignment& s) {
    return json{{"objective", s.objective}, {"assignment", to_bitstring(s.assignment)}};
}

/// Result document written by `hadof solve`.
inline json result_to_json(SolverKind solver, std::size_t n, const HadofConfig& cfg,
                           const HadofResult& r, const std::optional<Reference>& reference) {
    json doc;
    doc["solver"] = std::string(to_string(solver));
    doc["n"] = n;
    doc["config"] = config_to_json(cfg);
    doc["best"] = scored_to_json(r.best);
    doc["most_probable"] = scored_to_json(r.most_probable);
    doc["average_objective"] = r.average_objective;
    doc["num_samples"] = r.global_samples.size();
    if (reference && reference->objective != 0.0) {
        doc["reference"] = {{"objective", reference->objective}, {"source", reference->source}};
        doc["scaled"] = {{"best", scaled_objective(r.best.objective, reference->objective)},
                         {"most_probable", scaled_objective(r.most_probable.objective, reference->objective)},
                         {"average", scaled_objective(r.average_objective, reference->objective)}};
    } else {
        doc["reference"] = reference ? json{{"objective", reference->objective},
                                            {"source", reference->source}}
                                     : json(nullptr);
        doc["scaled"] = nullptr;
    }
    json trajectory = json::array();
    for (const auto& m : r.marginal_trajectory) trajectory.push_back(json(std::vector<double>(m.values().begin(), m.values().end())));
    doc["marginal_trajectory"] = std::move(trajectory);
    doc["wall_time_s"] = r.wall_time;
    return doc;
}

}  // namespace hadof
