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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lia/error.hpp"
#include "lia/functions.hpp"
#include "lia/gridcheck.hpp"
#include "lia/negation.hpp"

namespace lia {

/// A binary aggregation function: non-decreasing in each argument with
/// A(0,0)=0 and A(1,1)=1.
struct Aggregation {
    std::string kind;
    nlohmann::json params = nlohmann::json::object();
    std::function<double(double, double)> fn;
    bool declared_copula = false;

    double operator()(double x, double y) const {
        if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
            throw DomainError("aggregation argument outside unit square");
        return fn(x, y);
    }
};

// t-norms and t-conorms
Aggregation agg_min();
Aggregation agg_product();
Aggregation agg_lukasiewicz();        // (x+y-1) v 0
Aggregation agg_drastic();            // drastic t-norm
Aggregation agg_max();
Aggregation agg_probabilistic_sum();  // x+y-xy
Aggregation agg_bounded_sum();        // (x+y) ^ 1

// other conjunctors from the catalog
Aggregation agg_smallest_conjunctor();           // 1 only at (1,1)
Aggregation agg_greatest_averaging_conjunctor(); // 0 on the axes, else x v y
Aggregation agg_gated_mean();  // 0 if xy < 0.5, else (x+y)/2

/// g^{-1}((g(x)+g(y)-g(1)) v 0); g increasing, g(0)=0, g(1) finite.
Aggregation agg_representable(const Generator& g);

/// Weighted quasi-arithmetic mean f^{-1}((1-lambda) f(x) + lambda f(y));
/// f strictly monotone with f(0) infinite (catalog: "log").
Aggregation agg_wqam(const Generator& f, double lambda);

/// f^{-1}((1-lambda) f(T(x,y)) + lambda f(S(x,y))).
Aggregation agg_ts_function(const Aggregation& t, const Aggregation& s,
                            const Generator& f, double lambda);

/// The 3-pi uninorm xy / (xy + (1-x)(1-y)), conjunctive at the corners,
/// neutral element 0.5.
Aggregation agg_uninorm_3pi();

/// Named copulas: "product", "min", "lukasiewicz".
Aggregation agg_copula(const std::string& name);

Aggregation agg_tabulated(std::vector<double> grid,
                          std::vector<std::vector<double>> values);

/// N^{-1}(A(N(x),N(y))) for a strict negation N.
Aggregation n_dual(const Aggregation& a, const Negation& n);

/// phi^{-1}(A(phi(x),phi(y))).
Aggregation conjugate(const Aggregation& a, const Automorphism& phi);

struct ClassificationRecord {
    bool is_conjunctor = false;
    bool is_disjunctor = false;
    bool is_commutative = false;
    bool is_associative = false;
    std::optional<double> left_neutral;
    std::optional<double> right_neutral;
    std::optional<double> neutral;  // two-sided
    bool has_zero_divisors = false;
    bool has_one_divisors = false;
    std::optional<std::string> satisfies_lem_with;  // negation kind
    bool declared_copula = false;
    bool copula_2increasing = false;  // checked only when declared
    GridCert certification;
};

/// Exhaustive grid sweep (associativity on the full 3-D grid) plus a
/// seeded random search for zero/one divisors.
ClassificationRecord classify(const Aggregation& a,
                              std::size_t grid = kDefaultGrid2d,
                              double tol = kDefaultTol);

}  // namespace lia
