// Copyright 2026 The advgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ADVGRAPH_IO_HPP_
#define ADVGRAPH_IO_HPP_

#include <string>

#include "json.hpp"

#include "advgraph/game.hpp"
#include "advgraph/solver.hpp"

namespace advgraph {

// Instance schema:
//   { "n": int, "goal": int, "k": int, "edges": [[i, j], ...],
//     "weights": [[w per edge] per graph], "red_edges": [[a, b], ...] | "complete",
//     "robots": int, "max_ammo": int }
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

// Values keyed by "p/k/a"; policies as {state: {action: prob}} with
// probabilities below 1e-12 dropped. `inst` supplies the action labels.
nlohmann::json solution_to_json(const Solution& sol, const Instance& inst);
Solution solution_from_json(const nlohmann::json& j, const Instance& inst);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace advgraph

#endif  // ADVGRAPH_IO_HPP_
