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
#include "lia/aggregation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace lia {

Aggregation agg_min() {
    Aggregation a;
    a.kind = "min";
    a.fn = [](double x, double y) { return std::min(x, y); };
    return a;
}

Aggregation agg_product() {
    Aggregation a;
    a.kind = "product";
    a.fn = [](double x, double y) {
        if (x == 0.0 || y == 0.0) return 0.0;
        if (x == 1.0) return y;
        if (y == 1.0) return x;
        return x * y;
    };
    return a;
}

Aggregation agg_lukasiewicz() {
    Aggregation a;
    a.kind = "lukasiewicz-tnorm";
    a.fn = [](double x, double y) {
        if (x == 1.0) return y;
        if (y == 1.0) return x;
        return std::max(x + y - 1.0, 0.0);
    };
    return a;
}

Aggregation agg_drastic() {
    Aggregation a;
    a.kind = "drastic";
    a.fn = [](double x, double y) {
        if (y == 1.0) return x;
        if (x == 1.0) return y;
        return 0.0;
    };
    return a;
}

Aggregation agg_max() {
    Aggregation a;
    a.kind = "max";
    a.fn = [](double x, double y) { return std::max(x, y); };
    return a;
}

Aggregation agg_probabilistic_sum() {
    Aggregation a;
    a.kind = "probabilistic-sum";
    a.fn = [](double x, double y) {
        if (x == 1.0 || y == 1.0) return 1.0;
        if (x == 0.0) return y;
        if (y == 0.0) return x;
        return x + y - x * y;
    };
    return a;
}

Aggregation agg_bounded_sum() {
    Aggregation a;
    a.kind = "bounded-sum";
    a.fn = [](double x, double y) {
        if (x == 0.0) return y;
        if (y == 0.0) return x;
        return std::min(x + y, 1.0);
    };
    return a;
}

Aggregation agg_smallest_conjunctor() {
    Aggregation a;
    a.kind = "smallest-conjunctor";
    a.fn = [](double x, double y) {
        return (x == 1.0 && y == 1.0) ? 1.0 : 0.0;
    };
    return a;
}

Aggregation agg_greatest_averaging_conjunctor() {
    Aggregation a;
    a.kind = "greatest-averaging-conjunctor";
    a.fn = [](double x, double y) {
        if (x == 0.0 || y == 0.0) return 0.0;
        return std::max(x, y);
    };
    return a;
}

Aggregation agg_gated_mean() {
    Aggregation a;
    a.kind = "gated-mean";
    a.fn = [](double x, double y) {
        if (x * y < 0.5) return 0.0;
        return (x + y) / 2.0;
    };
    return a;
}

Aggregation agg_representable(const Generator& g) {
    if (!g.increasing) throw ParamError("representable generator must increase");
    if (std::abs(g.fwd(0.0)) > 1e-15)
        throw ParamError("representable generator needs g(0)=0");
    double g1 = g.fwd(1.0);
    if (!std::isfinite(g1))
        throw ParamError("representable generator needs finite g(1)");
    Aggregation a;
    a.kind = "representable";
    a.params["generator"] = g.name;
    a.fn = [g, g1](double x, double y) {
        if (x == 0.0 || y == 0.0) return 0.0;
        if (x == 1.0 && y == 1.0) return 1.0;
        double v = g.fwd(x) + g.fwd(y) - g1;
        return v <= 0.0 ? 0.0 : g.inv(v);
    };
    return a;
}

Aggregation agg_wqam(const Generator& f, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw ParamError("wqam lambda must lie in (0,1)");
    if (std::isfinite(f.fwd(0.0)))
        throw ParamError("wqam generator must be infinite at 0");
    Aggregation a;
    a.kind = "wqam";
    a.params["generator"] = f.name;
    a.params["lambda"] = lambda;
    a.fn = [f, lambda](double x, double y) {
        double fx = f.fwd(x), fy = f.fwd(y);
        if (std::isinf(fx)) return x;  // f(0) dominates: result 0
        if (std::isinf(fy)) return y;
        double v = (1.0 - lambda) * fx + lambda * fy;
        double r = f.inv(v);
        return std::clamp(r, 0.0, 1.0);
    };
    return a;
}

Aggregation agg_ts_function(const Aggregation& t, const Aggregation& s,
                            const Generator& f, double lambda) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw ParamError("ts-function lambda must lie in (0,1)");
    if (std::isfinite(f.fwd(0.0)))
        throw ParamError("ts-function generator must be infinite at 0");
    Aggregation a;
    a.kind = "ts-function";
    a.params["tnorm"] = t.kind;
    a.params["tconorm"] = s.kind;
    a.params["generator"] = f.name;
    a.params["lambda"] = lambda;
    auto tf = t.fn;
    auto sf = s.fn;
    a.fn = [tf, sf, f, lambda](double x, double y) {
        double ft = f.fwd(tf(x, y)), fs = f.fwd(sf(x, y));
        if (std::isinf(ft)) return 0.0;
        if (std::isinf(fs)) return 0.0;
        double v = (1.0 - lambda) * ft + lambda * fs;
        return std::clamp(f.inv(v), 0.0, 1.0);
    };
    return a;
}

Aggregation agg_uninorm_3pi() {
    Aggregation a;
    a.kind = "uninorm";
    a.params["name"] = "3pi";
    a.fn = [](double x, double y) {
        double p = x * y, q = (1.0 - x) * (1.0 - y);
        if (p == 0.0 && q == 0.0) return 0.0;  // conjunctive corners
        if (p == 0.0) return 0.0;
        if (q == 0.0) return 1.0;
        return p / (p + q);
    };
    return a;
}

Aggregation agg_copula(const std::string& name) {
    Aggregation a;
    if (name == "product")
        a = agg_product();
    else if (name == "min")
        a = agg_min();
    else if (name == "lukasiewicz")
        a = agg_lukasiewicz();
    else
        throw ParamError("unknown copula: " + name);
    a.kind = "copula";
    a.params = nlohmann::json::object();
    a.params["name"] = name;
    a.declared_copula = true;
    return a;
}

Aggregation agg_tabulated(std::vector<double> grid,
                          std::vector<std::vector<double>> values) {
    if (grid.size() < 2 || values.size() != grid.size())
        throw ParamError("tabulated aggregation needs square grid/values");
    for (auto& row : values)
        if (row.size() != grid.size())
            throw ParamError("tabulated aggregation needs square values");
    if (grid.front() != 0.0 || grid.back() != 1.0)
        throw ParamError("tabulated grid must span [0,1]");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1])
            throw ParamError("tabulated grid must strictly increase");
    if (values.front().front() != 0.0 || values.back().back() != 1.0)
        throw ParamError("tabulated aggregation needs A(0,0)=0, A(1,1)=1");
    Aggregation a;
    a.kind = "tabulated";
    a.params["grid"] = grid;
    a.params["values"] = values;
    a.fn = [grid = std::move(grid),
            values = std::move(values)](double x, double y) {
        auto cell = [&grid](double v) {
            if (v <= 0.0) return std::size_t{0};
            if (v >= 1.0) return grid.size() - 2;
            auto it = std::upper_bound(grid.begin(), grid.end(), v);
            return static_cast<std::size_t>(it - grid.begin()) - 1;
        };
        std::size_t i = cell(x), j = cell(y);
        double tx = (x - grid[i]) / (grid[i + 1] - grid[i]);
        double ty = (y - grid[j]) / (grid[j + 1] - grid[j]);
        double v00 = values[i][j], v10 = values[i + 1][j];
        double v01 = values[i][j + 1], v11 = values[i + 1][j + 1];
        return (1 - tx) * (1 - ty) * v00 + tx * (1 - ty) * v10 +
               (1 - tx) * ty * v01 + tx * ty * v11;
    };
    return a;
}

Aggregation n_dual(const Aggregation& a, const Negation& n) {
    if (!n.strict)
        throw ConstructionError("n-dual requires a strict negation (kind '" +
                                n.kind + "' is not certified strict)");
    Negation ninv = pseudo_inverse(n);
    Aggregation d;
    d.kind = "n-dual-of";
    d.params["of"] = a.kind;
    d.params["of_params"] = a.params;
    d.params["negation"] = n.kind;
    auto af = a.fn;
    auto nf = n.fn;
    auto invf = ninv.fn;
    d.fn = [af, nf, invf](double x, double y) {
        return invf(af(nf(x), nf(y)));
    };
    return d;
}

Aggregation conjugate(const Aggregation& a, const Automorphism& phi) {
    Aggregation c;
    c.kind = "conjugate-of";
    c.params["of"] = a.kind;
    c.params["of_params"] = a.params;
    c.params["phi"] = phi.name;
    if (phi.name == "power") c.params["power"] = phi.power;
    auto af = a.fn;
    c.fn = [af, phi](double x, double y) {
        return phi.inv(af(phi.fwd(x), phi.fwd(y)));
    };
    return c;
}

ClassificationRecord classify(const Aggregation& a, std::size_t grid,
                              double tol) {
    if (grid < 11) throw ParamError("classification grid must be >= 11");
    ClassificationRecord r;
    r.certification = GridCert::checked(grid, tol);
    r.declared_copula = a.declared_copula;
    auto g = unit_grid(grid);

    double a10 = a.fn(1.0, 0.0), a01 = a.fn(0.0, 1.0);
    r.is_conjunctor = std::abs(a10) <= tol && std::abs(a01) <= tol;
    r.is_disjunctor = std::abs(a10 - 1.0) <= tol && std::abs(a01 - 1.0) <= tol;
    if (r.is_conjunctor && r.is_disjunctor)
        throw Error("classification contradiction: conjunctor and disjunctor");

    r.is_commutative = gridcheck::commutative(a.fn, grid, tol);
    r.is_associative = gridcheck::associative(a.fn, grid, tol);

    for (double e : g) {
        bool left = true, right = true;
        for (double x : g) {
            if (std::abs(a.fn(e, x) - x) > tol) left = false;
            if (std::abs(a.fn(x, e) - x) > tol) right = false;
            if (!left && !right) break;
        }
        if (left && !r.left_neutral) r.left_neutral = e;
        if (right && !r.right_neutral) r.right_neutral = e;
        if (left && right && !r.neutral) r.neutral = e;
    }

    auto scan_divisors = [&](double x, double y) {
        if (x > 0.0 && y > 0.0 && a.fn(x, y) <= tol) r.has_zero_divisors = true;
        if (x < 1.0 && y < 1.0 && a.fn(x, y) >= 1.0 - tol)
            r.has_one_divisors = true;
    };
    for (double x : g)
        for (double y : g) scan_divisors(x, y);
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) scan_divisors(u(rng), u(rng));

    for (const Negation& n :
         {neg_standard(), neg_smallest(), neg_greatest()}) {
        bool lem = true;
        for (double x : g)
            if (a.fn(n.fn(x), x) < 1.0 - tol) {
                lem = false;
                break;
            }
        if (lem) {
            r.satisfies_lem_with = n.kind;
            break;
        }
    }

    if (a.declared_copula) {
        bool ok = true;
        for (double x : g) {
            if (std::abs(a.fn(x, 1.0) - x) > tol ||
                std::abs(a.fn(1.0, x) - x) > tol) {
                ok = false;
                break;
            }
        }
        // 2-increasing on adjacent rectangles; general rectangles follow
        // by summing adjacent ones.
        for (std::size_t i = 0; ok && i + 1 < g.size(); ++i)
            for (std::size_t j = 0; j + 1 < g.size(); ++j) {
                double d = a.fn(g[i + 1], g[j + 1]) - a.fn(g[i + 1], g[j]) -
                           a.fn(g[i], g[j + 1]) + a.fn(g[i], g[j]);
                if (d < -tol) {
                    ok = false;
                    break;
                }
            }
        r.copula_2increasing = ok;
    }
    return r;
}

}  // namespace lia
