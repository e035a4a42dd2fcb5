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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lia/aggregation.hpp"
#include "lia/implication.hpp"
#include "lia/negation.hpp"
#include "lia/properties.hpp"

namespace lia {

enum class Uniqueness { unique, exists, none };

/// Outcome of a companion construction: the partner operator (aggregation
/// and/or implication), the uniqueness verdict carried by the construction
/// (never inferred numerically), the machine-checked hypotheses, and the
/// grid certification of the returned LIA pair.
struct CompanionResult {
    std::optional<Aggregation> aggregation;
    std::optional<Implication> implication;
    Uniqueness uniqueness = Uniqueness::exists;
    std::vector<std::pair<std::string, std::string>> hypotheses_checked;
    std::string source;  // construction tag
    std::string note;    // family description or counterexample
    GridCert certification;
};

std::string to_string(Uniqueness u);

/// For I(x,y)=A(N(x),y): the N-dual of A.  Requires a grid-associative
/// disjunctor and a continuous negation; unique when N is strict and the
/// natural negation of the implication is injective on the grid.
CompanionResult companion_for_an_implication(const Aggregation& a,
                                             const Negation& n);

/// (A,N)-implications over the smallest/greatest negations: the verdict
/// is a family (conjunctors without zero divisors, resp. without one
/// divisors) plus one certified concrete member.
CompanionResult companion_for_extreme_negations(const Aggregation& a,
                                                const std::string& which);

/// The residual implication of A satisfies LIA with A itself; unique when
/// the residual satisfies OP.
CompanionResult companion_for_r_implication(const Aggregation& a);

/// QL-implications: either the pseudo-inverse composite formula (when A1
/// has one divisors) or, for one-divisor-free A1, the greatest-negation
/// route yielding any zero-divisor-free aggregation.
CompanionResult companion_for_ql(const Aggregation& a1, const Aggregation& a2,
                                 const Negation& n);

/// f-implications pair with the product, uniquely.
CompanionResult companion_for_f_implication(const Generator& f);
/// g-implications pair with the product, uniquely.
CompanionResult companion_for_g_implication(const Generator& g);

/// Probabilistic ("plain") and probabilistic-S ("s") implications of a
/// copula; the governing functional equation is verified numerically on a
/// 3-D grid before the closed-form partner is built.
CompanionResult companion_for_probabilistic(const Aggregation& c,
                                            const std::string& variant);

/// Negative verdicts for power implications: none for the nilpotent
/// catalog t-norm; none within commutative or zero-divisor aggregations
/// for min and the strict catalog t-norm (with an EP-failure witness for
/// the min case).
CompanionResult power_implication_lia_verdict(const Aggregation& t);

struct CompatibilityResult {
    bool compatible = true;
    /// (x, y1, y2) with N(y1)=N(y2) but N(A(x,y1)) != N(A(x,y2)).
    std::optional<std::array<double, 3>> witness;
};

CompatibilityResult check_a_compatible(const Negation& n,
                                       const Aggregation& a,
                                       std::size_t grid = kDefaultGrid2d,
                                       double tol = kDefaultTol);

/// For an associative conjunctor A and a compatible continuous negation:
/// I(x,y) = N(A(x, pseudo_inverse(N)(y))).
CompanionResult implication_from_aggregation(const Aggregation& a,
                                             const Negation& n);

/// Companion implication of the representable aggregation built from g.
CompanionResult implication_for_representable(const Generator& g,
                                              const Negation& n);

}  // namespace lia
