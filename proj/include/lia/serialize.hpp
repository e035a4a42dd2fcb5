/*   Copyright 2026 the liafz authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
 */
#pragma once

#include <string>

#include "lia/companion.hpp"
#include "lia/engine.hpp"

namespace lia {

/// Operator descriptors: {"kind": string, "params": object} for negations
/// and aggregations, {"family": string, "params": object} for implications.
/// Nested operator fields accept either a bare catalog kind string or a
/// full descriptor object.
Negation make_negation(const nlohmann::json& d);
Aggregation make_aggregation(const nlohmann::json& d);
Implication make_implication(const nlohmann::json& d);

nlohmann::json descriptor(const Negation& n);
nlohmann::json descriptor(const Aggregation& a);
nlohmann::json descriptor(const Implication& i);

/// System document: {"inputs": [{"labels": [...]}...], "output":
/// {"labels": [...]}, "rules": [{"antecedents": [[...]...], "consequent":
/// [...]}], "combiner": ..., "implication": ..., "similarity": ...}.
MISOSystem load_system(const nlohmann::json& doc);
MISOSystem load_system_file(const std::string& path);

/// Input document: {"singleton": ["x12", "x23"]} or {"sets": [[...], ...]}.
std::vector<FuzzySet> load_input(const MISOSystem& sys,
                                 const nlohmann::json& doc);

nlohmann::json to_json(const OpCount& c);
nlohmann::json to_json(const InferenceResult& r);
nlohmann::json to_json(const CompanionResult& r);

}  // namespace lia
