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
#include <vector>

#include "json.hpp"
#include "lia/error.hpp"
#include "lia/functions.hpp"

namespace lia {

/// A fuzzy negation: non-increasing on [0,1] with N(0)=1, N(1)=0.
/// The flags are certified at construction (analytically for catalog
/// members, by grid sweep for tabulated ones).
struct Negation {
    std::string kind;
    nlohmann::json params = nlohmann::json::object();
    std::function<double(double)> fn;
    bool continuous = false;
    bool strict = false;  // continuous and strictly decreasing
    bool strong = false;  // N(N(x)) = x

    double operator()(double x) const {
        if (!(x >= 0.0 && x <= 1.0))
            throw DomainError("negation argument outside [0,1]");
        return fn(x);
    }
};

Negation neg_standard();  // 1-x
Negation neg_smallest();  // 1 at 0, else 0
Negation neg_greatest();  // 0 at 1, else 1

/// Closed-form catalog: "one-minus-square" (1-x^2), "one-minus-sqrt".
Negation neg_closed_form(const std::string& name);

/// N(x) = g^{-1}(g(1) - g(x)); g increasing, g(0)=0, g(1) finite.
Negation neg_generator_based(const Generator& g);

/// Piecewise-linear interpolation through (grid[i], values[i]).
Negation neg_tabulated(std::vector<double> grid, std::vector<double> values);

/// The map sup{y : N(y) > x} with value 1 at x=0.  Requires a continuous
/// negation; the result is strict.
Negation pseudo_inverse(const Negation& n);

}  // namespace lia
