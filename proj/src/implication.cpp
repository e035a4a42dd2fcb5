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
#include "lia/implication.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lia/gridcheck.hpp"

namespace lia {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string point(double x, double y) {
    std::ostringstream os;
    os << "(" << x << ", " << y << ")";
    return os.str();
}

/// Throws ConstructionError naming the first violated axiom.
void validate_implication(const std::function<double(double, double)>& fn,
                          const std::string& what,
                          std::size_t grid = kDefaultGrid2d,
                          double tol = kDefaultTol) {
    const double exact = 1e-12;
    if (std::abs(fn(0.0, 0.0) - 1.0) > exact)
        throw ConstructionError(what + " violates I3: I(0,0) != 1");
    if (std::abs(fn(1.0, 1.0) - 1.0) > exact)
        throw ConstructionError(what + " violates I4: I(1,1) != 1");
    if (std::abs(fn(1.0, 0.0)) > exact)
        throw ConstructionError(what + " violates I5: I(1,0) = " +
                                std::to_string(fn(1.0, 0.0)));
    auto g = unit_grid(grid);
    for (double y : g) {
        if (std::abs(fn(0.0, y) - 1.0) > exact)
            throw ConstructionError(what + " violates LB at y=" +
                                    std::to_string(y));
        double prev = fn(g[0], y);
        for (std::size_t i = 1; i < g.size(); ++i) {
            double cur = fn(g[i], y);
            if (cur > prev + tol)
                throw ConstructionError(what + " violates I1 at " +
                                        point(g[i], y));
            prev = cur;
        }
    }
    for (double x : g) {
        if (std::abs(fn(x, 1.0) - 1.0) > exact)
            throw ConstructionError(what + " violates RB at x=" +
                                    std::to_string(x));
        double prev = fn(x, g[0]);
        for (std::size_t i = 1; i < g.size(); ++i) {
            double cur = fn(x, g[i]);
            if (cur < prev - tol)
                throw ConstructionError(what + " violates I2 at " +
                                        point(x, g[i]));
            prev = cur;
        }
    }
}

}  // namespace

Implication imp_named(const std::string& name) {
    Implication i;
    i.family = "named";
    i.params["name"] = name;
    if (name == "kleene-dienes") {
        i.fn = [](double x, double y) { return std::max(1.0 - x, y); };
    } else if (name == "lukasiewicz") {
        i.fn = [](double x, double y) {
            return std::min(1.0 - x + y, 1.0);
        };
    } else if (name == "weber") {
        i.fn = [](double x, double y) { return x < 1.0 ? 1.0 : y; };
    } else if (name == "goedel") {
        i.fn = [](double x, double y) { return x <= y ? 1.0 : y; };
    } else if (name == "reichenbach") {
        i.fn = [](double x, double y) {
            if (x == 0.0 || y == 1.0) return 1.0;
            return 1.0 - x + x * y;
        };
    } else if (name == "greatest") {
        i.fn = [](double x, double y) {
            return (x == 1.0 && y == 0.0) ? 0.0 : 1.0;
        };
    } else {
        throw ParamError("unknown named implication: " + name);
    }
    return i;
}

Implication imp_an(const Aggregation& a, const Negation& n) {
    if (std::abs(a.fn(1.0, 0.0) - 1.0) > 1e-12 ||
        std::abs(a.fn(0.0, 1.0) - 1.0) > 1e-12)
        throw ConstructionError(
            "(A,N)-implication requires a disjunctor; '" + a.kind +
            "' has A(1,0)=" + std::to_string(a.fn(1.0, 0.0)));
    Implication i;
    i.family = "an-implication";
    i.params["aggregation"] = a.kind;
    i.params["negation"] = n.kind;
    auto af = a.fn;
    auto nf = n.fn;
    i.fn = [af, nf](double x, double y) { return af(nf(x), y); };
    validate_implication(i.fn, "(A,N)-implication over '" + a.kind + "'");
    return i;
}

Implication imp_a(const Aggregation& a) {
    Implication i = imp_an(a, neg_standard());
    i.family = "a-implication";
    i.params = nlohmann::json::object();
    i.params["aggregation"] = a.kind;
    return i;
}

Implication residual_implication(const Aggregation& a, bool validate) {
    Implication i;
    i.family = "r-implication";
    i.params["aggregation"] = a.kind;
    if (!validate) i.params["validate"] = false;
    if (a.kind == "min") {
        i.fn = [](double x, double y) { return x <= y ? 1.0 : y; };
    } else if (a.kind == "lukasiewicz-tnorm") {
        i.fn = [](double x, double y) {
            return std::min(1.0 - x + y, 1.0);
        };
    } else if (a.kind == "product") {
        i.fn = [](double x, double y) {
            if (x <= y) return 1.0;
            return y / x;  // x > y >= 0 so x > 0
        };
    } else if (a.kind == "gated-mean") {
        i.fn = [](double x, double y) {
            if (x <= 0.5) return 1.0;
            return std::max(1.0 / (2.0 * x), std::min(1.0, 2.0 * y - x));
        };
    } else {
        auto af = a.fn;
        i.fn = [af](double x, double y) {
            if (af(x, 1.0) <= y) return 1.0;
            return gridcheck::sup_true_prefix(
                [&](double t) { return af(x, t) <= y; });
        };
    }
    if (validate) {
        validate_implication(i.fn, "residual of '" + a.kind + "'");
    } else {
        i.validated = false;
    }
    return i;
}

Implication imp_ql(const Aggregation& a1, const Aggregation& a2,
                   const Negation& n) {
    Implication i;
    i.family = "ql-operation";
    i.params["a1"] = a1.kind;
    i.params["a2"] = a2.kind;
    i.params["negation"] = n.kind;
    auto f1 = a1.fn;
    auto f2 = a2.fn;
    auto nf = n.fn;
    i.fn = [f1, f2, nf](double x, double y) { return f1(nf(x), f2(x, y)); };
    validate_implication(i.fn, "QL-operation over ('" + a1.kind + "', '" +
                                   a2.kind + "', '" + n.kind + "')");
    return i;
}

Implication imp_f_generated(const Generator& f) {
    if (f.increasing) throw ParamError("f-generator must decrease");
    if (std::abs(f.fwd(1.0)) > 1e-15)
        throw ParamError("f-generator needs f(1)=0");
    Implication i;
    i.family = "f-generated";
    i.params["generator"] = f.name;
    i.fn = [f](double x, double y) {
        if (x == 0.0) return 1.0;  // 0 * inf = 0, and f^{-1}(0) = 1
        double fy = f.fwd(y);
        if (std::isinf(fy)) return 0.0;
        if (x == 1.0) return y;
        return f.inv(x * fy);
    };
    validate_implication(i.fn, "f-implication over '" + f.name + "'");
    return i;
}

Implication imp_g_generated(const Generator& g) {
    if (!g.increasing) throw ParamError("g-generator must increase");
    if (std::abs(g.fwd(0.0)) > 1e-15)
        throw ParamError("g-generator needs g(0)=0");
    double g1 = g.fwd(1.0);
    Implication i;
    i.family = "g-generated";
    i.params["generator"] = g.name;
    i.fn = [g, g1](double x, double y) {
        if (x == 0.0) return 1.0;  // g(y)/0 = inf, capped at 1
        double gy = g.fwd(y);
        if (std::isinf(gy)) return 1.0;
        double v = gy / x;
        if (v >= g1) return 1.0;
        return g.inv(v);
    };
    validate_implication(i.fn, "g-implication over '" + g.name + "'");
    return i;
}

Implication imp_probabilistic(const Aggregation& c) {
    if (!c.declared_copula)
        throw ConstructionError(
            "probabilistic implication requires a declared copula");
    Implication i;
    i.family = "probabilistic";
    i.params["copula"] = c.params.value("name", c.kind);
    auto cf = c.fn;
    i.fn = [cf](double x, double y) {
        if (x == 0.0) return 1.0;  // 0/0 convention
        double v = cf(x, y) / x;
        return std::clamp(v, 0.0, 1.0);
    };
    validate_implication(i.fn, "probabilistic implication");
    return i;
}

Implication imp_probabilistic_s(const Aggregation& c) {
    if (!c.declared_copula)
        throw ConstructionError(
            "probabilistic S-implication requires a declared copula");
    Implication i;
    i.family = "probabilistic-s";
    i.params["copula"] = c.params.value("name", c.kind);
    auto cf = c.fn;
    i.fn = [cf](double x, double y) {
        return std::clamp(cf(x, y) - x + 1.0, 0.0, 1.0);
    };
    validate_implication(i.fn, "probabilistic S-implication");
    return i;
}

Implication power_implication(const Aggregation& t) {
    Implication i;
    i.family = "t-power";
    i.params["tnorm"] = t.kind;
    if (t.kind == "min") {
        i.fn = [](double x, double y) { return x <= y ? 1.0 : 0.0; };
    } else if (t.kind == "product" || t.kind == "lukasiewicz-tnorm") {
        Generator gen = make_generator(
            t.kind == "product" ? "neg-log" : "one-minus");
        i.params["additive_generator"] = gen.name;
        i.fn = [gen](double x, double y) {
            if (x <= y) return 1.0;
            double tx = gen.fwd(x), ty = gen.fwd(y);
            if (std::isinf(ty)) return 0.0;  // only x > y = 0 with t(0)=inf
            return std::clamp(tx / ty, 0.0, 1.0);
        };
    } else {
        throw ConstructionError(
            "power implication closed forms cover min and the Archimedean "
            "catalog t-norms only; got '" +
            t.kind + "'");
    }
    validate_implication(i.fn, "power implication over '" + t.kind + "'");
    return i;
}

Implication imp_from_conjunctor(const Aggregation& a, const Negation& n) {
    if (std::abs(a.fn(1.0, 0.0)) > 1e-12 || std::abs(a.fn(0.0, 1.0)) > 1e-12)
        throw ConstructionError(
            "implication-from-conjunctor requires a conjunctor; '" + a.kind +
            "' fails the boundary conditions");
    Negation nt = pseudo_inverse(n);  // throws for non-continuous n
    Implication i;
    i.family = "from-conjunctor";
    i.params["aggregation"] = a.kind;
    i.params["negation"] = n.kind;
    auto af = a.fn;
    auto nf = n.fn;
    auto ntf = nt.fn;
    i.fn = [af, nf, ntf](double x, double y) {
        if (x == 0.0) return 1.0;
        return nf(af(x, ntf(y)));
    };
    validate_implication(i.fn, "implication from conjunctor '" + a.kind + "'");
    return i;
}

Implication imp_representable_generated(const Generator& g,
                                        const Negation& n) {
    if (!g.increasing || std::abs(g.fwd(0.0)) > 1e-15)
        throw ParamError("representable generator needs g increasing, g(0)=0");
    if (!std::isfinite(g.fwd(1.0)))
        throw ParamError("representable generator needs finite g(1)");
    if (!n.strict)
        throw ConstructionError(
            "representable companion implication requires a strict negation");
    Negation nt = pseudo_inverse(n);
    double g1 = g.fwd(1.0);
    Implication i;
    i.family = "representable-generated";
    i.params["generator"] = g.name;
    i.params["negation"] = n.kind;
    auto nf = n.fn;
    auto ntf = nt.fn;
    // With f = g o inverse(N): f(N(x)) = g(x), f(y) = g(inverse(N)(y)),
    // f(0) = g(1), and applying f^{-1} gives N(g^{-1}(...)).
    i.fn = [g, g1, nf, ntf](double x, double y) {
        if (x == 0.0 || y == 1.0) return 1.0;
        double w = g.fwd(x) + g.fwd(ntf(y)) - g1;
        if (w <= 0.0) return 1.0;
        return nf(g.inv(std::min(w, g1)));
    };
    validate_implication(i.fn, "representable companion implication");
    return i;
}

Implication imp_closed_form(const std::string& name) {
    if (name == "gated-mean-residual")
        return residual_implication(agg_gated_mean(), /*validate=*/false);
    throw ParamError("unknown closed-form implication: " + name);
}

Negation natural_negation(const Implication& i) {
    Negation n;
    n.kind = "natural-of-implication";
    n.params["family"] = i.family;
    n.params["family_params"] = i.params;
    auto f = i.fn;
    n.fn = [f](double x) { return f(x, 0.0); };
    const std::size_t probe = 1001;
    n.continuous = gridcheck::grid_continuous(n.fn, probe, 0.05);
    n.strict =
        n.continuous && gridcheck::strictly_decreasing(n.fn, probe, 1e-12);
    if (n.strict) {
        bool strong = true;
        for (double x : unit_grid(101))
            if (std::abs(n.fn(n.fn(x)) - x) > 1e-9) {
                strong = false;
                break;
            }
        n.strong = strong;
    }
    return n;
}

}  // namespace lia
