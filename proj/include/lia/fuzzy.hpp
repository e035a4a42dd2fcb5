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
#include <vector>

#include "lia/aggregation.hpp"
#include "lia/implication.hpp"

namespace lia {

/// A fuzzy set over a finite, ordered universe of labelled elements.
struct FuzzySet {
    std::vector<std::string> universe;
    std::vector<double> memberships;

    /// Throws DomainError on length mismatch or out-of-range memberships.
    void validate() const;
    std::size_t size() const { return universe.size(); }
};

/// Singleton set: 1 at `label`, 0 elsewhere.  Throws DomainError when the
/// label is not in the universe.
FuzzySet singleton_set(const std::vector<std::string>& universe,
                       const std::string& label);

struct SimilarityMeasure {
    /// "support-restricted-sup-difference" (default), "sup-difference",
    /// or "custom-tabulated" (a fixed value, see `value`).
    std::string kind = "support-restricted-sup-difference";
    double value = 1.0;  // custom-tabulated only
};

/// S(D', D).  Support-restricted kind: 1 - max over {x : D'(x) > 0} of
/// |D'(x) - D(x)| (error on empty support); sup-difference kind maximizes
/// over the whole universe.
double similarity(const SimilarityMeasure& m, const FuzzySet& d_prime,
                  const FuzzySet& d);

struct Rule {
    std::vector<FuzzySet> antecedents;  // one per input universe
    FuzzySet consequent;                // on the output universe
};

struct MISOSystem {
    std::vector<std::vector<std::string>> input_universes;
    std::vector<std::string> output_universe;
    std::vector<Rule> rules;
    Aggregation combiner;
    Implication implication;
    SimilarityMeasure similarity;

    std::size_t arity() const { return input_universes.size(); }
    /// Structural validation (rule arity, universe conformance, membership
    /// ranges).  Throws DomainError.
    void validate() const;
};

struct SingletonInput {
    std::vector<std::string> labels;  // one per input universe
};

/// Expand a singleton input into one fuzzy set per input universe.
std::vector<FuzzySet> expand(const MISOSystem& sys, const SingletonInput& in);

}  // namespace lia
