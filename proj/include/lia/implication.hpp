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

#include <functional>
#include <string>

#include "json.hpp"
#include "lia/aggregation.hpp"
#include "lia/error.hpp"
#include "lia/functions.hpp"
#include "lia/negation.hpp"

namespace lia {

/// A fuzzy implication: non-increasing in the first argument,
/// non-decreasing in the second, with I(0,0)=I(1,1)=1 and I(1,0)=0.
/// Family constructors verify these axioms on a grid and throw
/// ConstructionError naming the failing axiom otherwise.
struct Implication {
    std::string family;
    nlohmann::json params = nlohmann::json::object();
    std::function<double(double, double)> fn;
    bool validated = true;

    double operator()(double x, double y) const {
        if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
            throw DomainError("implication argument outside unit square");
        return fn(x, y);
    }
};

/// Named catalog: kleene-dienes, lukasiewicz, weber, goedel, reichenbach,
/// greatest.
Implication imp_named(const std::string& name);

/// A(N(x), y) with A a disjunctor.
Implication imp_an(const Aggregation& a, const Negation& n);
/// A(1-x, y).
Implication imp_a(const Aggregation& a);

/// sup{t : A(x,t) <= y}.  Analytic for catalog kinds, bisection otherwise.
/// With validate=true (the default) the result must pass the implication
/// axioms or construction fails; validate=false returns the raw residual
/// (used for counterexample operators whose residual is not an
/// implication).
Implication residual_implication(const Aggregation& a, bool validate = true);

/// A1(N(x), A2(x,y)), accepted only when it passes the implication axioms.
Implication imp_ql(const Aggregation& a1, const Aggregation& a2,
                   const Negation& n);

/// f^{-1}(x f(y)) with 0*inf = 0; f decreasing, f(1)=0.
Implication imp_f_generated(const Generator& f);
/// g^{(-1)}(g(y)/x) with division by 0 giving inf; g increasing, g(0)=0.
Implication imp_g_generated(const Generator& g);

/// C(x,y)/x with 0/0 = 1; requires a declared copula.
Implication imp_probabilistic(const Aggregation& c);
/// C(x,y) - x + 1.
Implication imp_probabilistic_s(const Aggregation& c);

/// Closed forms of the power implication: two-valued for min, generator
/// ratio t(x)/t(y) for the Archimedean catalog t-norms (product,
/// lukasiewicz-tnorm).
Implication power_implication(const Aggregation& t);

/// N(A(x, pseudo_inverse(N)(y))) for an associative conjunctor A and a
/// continuous negation N.
Implication imp_from_conjunctor(const Aggregation& a, const Negation& n);

/// Companion form for the representable aggregation built from g:
/// with f = g o inverse(N), returns 1 where f(N(x))+f(y) <= f(0) and
/// f^{-1}(f(N(x))+f(y)-f(0)) elsewhere.  N must be strict.
Implication imp_representable_generated(const Generator& g,
                                        const Negation& n);

/// Unvalidated closed-form catalog, for counterexample operators:
/// "gated-mean-residual" (the residual of the gated-mean conjunctor,
/// which is not an implication: it takes the value 0.5 at (1,0)).
Implication imp_closed_form(const std::string& name);

/// N_I(x) = I(x, 0); flags certified by grid heuristics.
Negation natural_negation(const Implication& i);

}  // namespace lia
