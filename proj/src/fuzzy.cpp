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
#include "lia/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include "lia/error.hpp"

namespace lia {

void FuzzySet::validate() const {
    if (universe.size() != memberships.size())
        throw DomainError("fuzzy set has " + std::to_string(universe.size()) +
                          " labels but " + std::to_string(memberships.size()) +
                          " memberships");
    for (double v : memberships)
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("membership " + std::to_string(v) +
                              " outside [0,1]");
}

FuzzySet singleton_set(const std::vector<std::string>& universe,
                       const std::string& label) {
    auto it = std::find(universe.begin(), universe.end(), label);
    if (it == universe.end())
        throw DomainError("label '" + label + "' not in universe");
    FuzzySet s;
    s.universe = universe;
    s.memberships.assign(universe.size(), 0.0);
    s.memberships[static_cast<std::size_t>(it - universe.begin())] = 1.0;
    return s;
}

double similarity(const SimilarityMeasure& m, const FuzzySet& d_prime,
                  const FuzzySet& d) {
    if (m.kind == "custom-tabulated") return m.value;
    if (d_prime.size() != d.size())
        throw DomainError("similarity over non-conformable universes");
    bool restricted = m.kind == "support-restricted-sup-difference";
    if (!restricted && m.kind != "sup-difference")
        throw ParamError("unknown similarity kind '" + m.kind + "'");
    double worst = -1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (restricted && d_prime.memberships[i] <= 0.0) continue;
        worst = std::max(worst,
                         std::abs(d_prime.memberships[i] - d.memberships[i]));
    }
    if (worst < 0.0)
        throw DomainError(
            "support-restricted similarity of a set with empty support");
    return 1.0 - worst;
}

void MISOSystem::validate() const {
    if (input_universes.empty()) throw DomainError("system needs m >= 1 inputs");
    if (rules.empty()) throw DomainError("system needs at least one rule");
    for (const Rule& r : rules) {
        if (r.antecedents.size() != arity())
            throw DomainError("rule has " +
                              std::to_string(r.antecedents.size()) +
                              " antecedents, expected " +
                              std::to_string(arity()));
        for (std::size_t i = 0; i < arity(); ++i) {
            r.antecedents[i].validate();
            if (r.antecedents[i].universe != input_universes[i])
                throw DomainError("antecedent " + std::to_string(i + 1) +
                                  " does not conform to its universe");
        }
        r.consequent.validate();
        if (r.consequent.universe != output_universe)
            throw DomainError("consequent does not conform to the output "
                              "universe");
    }
}

std::vector<FuzzySet> expand(const MISOSystem& sys, const SingletonInput& in) {
    if (in.labels.size() != sys.arity())
        throw DomainError("singleton input has " +
                          std::to_string(in.labels.size()) +
                          " labels, expected " + std::to_string(sys.arity()));
    std::vector<FuzzySet> sets;
    sets.reserve(sys.arity());
    for (std::size_t i = 0; i < sys.arity(); ++i)
        sets.push_back(singleton_set(sys.input_universes[i], in.labels[i]));
    return sets;
}

}  // namespace lia
