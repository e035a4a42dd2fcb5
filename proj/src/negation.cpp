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
#include "lia/negation.hpp"

#include <algorithm>
#include <cmath>

#include "lia/gridcheck.hpp"

namespace lia {

Negation neg_standard() {
    Negation n;
    n.kind = "standard";
    n.fn = [](double x) { return 1.0 - x; };
    n.continuous = n.strict = n.strong = true;
    return n;
}

Negation neg_smallest() {
    Negation n;
    n.kind = "smallest";
    n.fn = [](double x) { return x == 0.0 ? 1.0 : 0.0; };
    return n;
}

Negation neg_greatest() {
    Negation n;
    n.kind = "greatest";
    n.fn = [](double x) { return x == 1.0 ? 0.0 : 1.0; };
    return n;
}

Negation neg_closed_form(const std::string& name) {
    Negation n;
    n.kind = "custom-closed-form";
    n.params["name"] = name;
    n.continuous = n.strict = true;
    if (name == "one-minus-square") {
        n.fn = [](double x) {
            if (x == 0.0) return 1.0;
            if (x == 1.0) return 0.0;
            return 1.0 - x * x;
        };
    } else if (name == "one-minus-sqrt") {
        n.fn = [](double x) {
            if (x == 0.0) return 1.0;
            if (x == 1.0) return 0.0;
            return 1.0 - std::sqrt(x);
        };
    } else {
        throw ParamError("unknown closed-form negation: " + name);
    }
    return n;
}

Negation neg_generator_based(const Generator& g) {
    if (!g.increasing) throw ParamError("negation generator must increase");
    if (std::abs(g.fwd(0.0)) > 1e-15)
        throw ParamError("negation generator needs g(0)=0");
    double g1 = g.fwd(1.0);
    if (!std::isfinite(g1))
        throw ParamError("negation generator needs finite g(1)");
    Negation n;
    n.kind = "generator-based";
    n.params["generator"] = g.name;
    n.continuous = n.strict = n.strong = true;
    n.fn = [g, g1](double x) {
        if (x == 0.0) return 1.0;
        if (x == 1.0) return 0.0;
        return g.inv(g1 - g.fwd(x));
    };
    return n;
}

Negation neg_tabulated(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() != values.size() || grid.size() < 2)
        throw ParamError("tabulated negation needs matching grid/values");
    if (grid.front() != 0.0 || grid.back() != 1.0)
        throw ParamError("tabulated grid must span [0,1]");
    if (values.front() != 1.0 || values.back() != 0.0)
        throw ParamError("tabulated negation must have N(0)=1, N(1)=0");
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (grid[i] <= grid[i - 1])
            throw ParamError("tabulated grid must strictly increase");
        if (values[i] > values[i - 1] + 1e-12)
            throw ParamError("tabulated negation must be non-increasing");
    }
    Negation n;
    n.kind = "tabulated";
    n.params["grid"] = grid;
    n.params["values"] = values;
    n.continuous = true;  // linear interpolation
    n.fn = [grid = std::move(grid), values = std::move(values)](double x) {
        if (x <= 0.0) return 1.0;
        if (x >= 1.0) return 0.0;
        auto it = std::upper_bound(grid.begin(), grid.end(), x);
        std::size_t hi = static_cast<std::size_t>(it - grid.begin());
        std::size_t lo = hi - 1;
        double t = (x - grid[lo]) / (grid[hi] - grid[lo]);
        return values[lo] + t * (values[hi] - values[lo]);
    };
    return n;
}

Negation pseudo_inverse(const Negation& n) {
    if (!n.continuous)
        throw ConstructionError(
            "pseudo-inverse requires a continuous negation (kind '" + n.kind +
            "' is not certified continuous)");
    Negation r;
    r.kind = "pseudo-inverse";
    r.params["of"] = n.kind;
    r.continuous = true;
    r.strict = true;
    r.strong = n.strong;
    if (n.strong) {
        // An involutive negation is its own pseudo-inverse.
        auto base = n.fn;
        r.fn = [base](double x) {
            if (x == 0.0) return 1.0;
            if (x == 1.0) return 0.0;
            return base(x);
        };
        return r;
    }
    auto base = n.fn;
    r.fn = [base](double x) {
        if (x == 0.0) return 1.0;
        if (x >= 1.0) return 0.0;
        return gridcheck::sup_true_prefix(
            [&](double y) { return base(y) > x; });
    };
    return r;
}

}  // namespace lia
