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
#include "lia/companion.hpp"

#include <cmath>
#include <sstream>

namespace lia {

namespace {

// Gate checks use a coarser grid than engine defaults; associativity is
// cubic in the grid size.
constexpr std::size_t kGateGrid = 41;

std::string triple(const std::array<double, 3>& w) {
    std::ostringstream os;
    os << "(" << w[0] << ", " << w[1] << ", " << w[2] << ")";
    return os.str();
}

GridCert certify_pair(const Implication& i, const Aggregation& a) {
    PropertyResult r = check_lia(i, a);
    if (!r.holds)
        throw ConstructionError("constructed pair fails LIA at " +
                                triple(*r.witness));
    return r.cert;
}

void note_check(CompanionResult& r, const std::string& hypothesis, bool ok,
                const std::string& how) {
    r.hypotheses_checked.emplace_back(hypothesis,
                                      (ok ? "holds " : "FAILS ") + how);
}

std::string gate_cert() {
    return "(grid-checked, " + std::to_string(kGateGrid) + " points)";
}

}  // namespace

std::string to_string(Uniqueness u) {
    switch (u) {
        case Uniqueness::unique: return "unique";
        case Uniqueness::exists: return "exists";
        case Uniqueness::none: return "none";
    }
    return "?";
}

CompanionResult companion_for_an_implication(const Aggregation& a,
                                             const Negation& n) {
    CompanionResult r;
    r.source = "n-dual-construction";
    ClassificationRecord cls = classify(a, kGateGrid);
    note_check(r, "A is a disjunctor", cls.is_disjunctor, gate_cert());
    note_check(r, "A is associative", cls.is_associative, gate_cert());
    note_check(r, "N is continuous", n.continuous, "(catalog-certified)");
    if (!cls.is_disjunctor || !cls.is_associative)
        throw ConstructionError(
            "the N-dual construction needs an associative disjunctor; '" +
            a.kind + "' fails the gate");
    if (!n.continuous)
        throw ConstructionError(
            "the N-dual construction needs a continuous negation; the "
            "extreme-negation construction covers the smallest/greatest "
            "cases instead");

    Implication i = imp_an(a, n);
    Negation nt = pseudo_inverse(n);
    Aggregation partner;
    partner.kind = "n-dual-of";
    partner.params["of"] = a.kind;
    partner.params["of_params"] = a.params;
    partner.params["negation"] = n.kind;
    auto af = a.fn;
    auto nf = n.fn;
    auto ntf = nt.fn;
    partner.fn = [af, nf, ntf](double x, double y) {
        return ntf(af(nf(x), nf(y)));
    };

    bool injective =
        n.strict &&
        gridcheck::grid_injective([&i](double x) { return i.fn(x, 0.0); },
                                  kDefaultGrid2d, 1e-12);
    note_check(r, "natural negation of the implication is injective",
               injective, "(grid-checked)");
    r.uniqueness = injective ? Uniqueness::unique : Uniqueness::exists;
    r.certification = certify_pair(i, partner);
    r.aggregation = std::move(partner);
    r.implication = std::move(i);
    return r;
}

CompanionResult companion_for_extreme_negations(const Aggregation& a,
                                                const std::string& which) {
    if (which != "smallest" && which != "greatest")
        throw ParamError("which must be 'smallest' or 'greatest'");
    CompanionResult r;
    r.source = "extreme-negation-construction";
    ClassificationRecord cls = classify(a, kGateGrid);
    note_check(r, "A is a disjunctor", cls.is_disjunctor, gate_cert());
    note_check(r, "A is associative", cls.is_associative, gate_cert());
    if (!cls.is_disjunctor || !cls.is_associative)
        throw ConstructionError(
            "the extreme-negation construction needs an associative "
            "disjunctor; '" +
            a.kind + "' fails the gate");

    Negation n = which == "smallest" ? neg_smallest() : neg_greatest();
    Implication i = imp_an(a, n);
    Aggregation member = which == "smallest" ? agg_min() : agg_product();
    r.note = which == "smallest"
                 ? "any conjunctor without zero divisors; certified member: "
                   "min"
                 : "any conjunctor without one divisors; certified member: "
                   "product";
    r.uniqueness = Uniqueness::exists;
    r.certification = certify_pair(i, member);
    r.aggregation = std::move(member);
    r.implication = std::move(i);
    return r;
}

CompanionResult companion_for_r_implication(const Aggregation& a) {
    CompanionResult r;
    r.source = "residual-self-pairing";
    ClassificationRecord cls = classify(a, kGateGrid);
    bool leftc =
        gridcheck::left_continuous_each_arg(a.fn, kDefaultGrid2d, 1e-7, 1e-3);
    note_check(r, "A is associative", cls.is_associative, gate_cert());
    note_check(r, "A is commutative", cls.is_commutative, gate_cert());
    note_check(r, "A is left-continuous", leftc, "(grid-consistent)");
    if (!cls.is_associative || !cls.is_commutative || !leftc) {
        std::string msg =
            "the residual self-pairing needs an associative, commutative, "
            "left-continuous aggregation; '" +
            a.kind + "' fails the gate";
        if (!leftc) {
            Implication raw = residual_implication(a, /*validate=*/false);
            PropertyResult lia = check_lia(raw, agg_min());
            if (!lia.holds)
                msg += "; its residual already fails LIA with min at " +
                       triple(*lia.witness);
        }
        throw ConstructionError(msg);
    }
    Implication i = residual_implication(a);
    PropertyReport props;
    {
        CheckOptions o;
        props = check_properties(i, o);
    }
    bool op = props.holds("OP");
    note_check(r, "residual satisfies OP (uniqueness)", op, "(grid-checked)");
    r.uniqueness = op ? Uniqueness::unique : Uniqueness::exists;
    r.certification = certify_pair(i, a);
    r.aggregation = a;
    r.implication = std::move(i);
    return r;
}

CompanionResult companion_for_ql(const Aggregation& a1, const Aggregation& a2,
                                 const Negation& n) {
    CompanionResult r;
    ClassificationRecord cls1 = classify(a1, kGateGrid);
    ClassificationRecord cls2 = classify(a2, kGateGrid);
    note_check(r, "A1 is a disjunctor", cls1.is_disjunctor, gate_cert());
    note_check(r, "A2 is a conjunctor", cls2.is_conjunctor, gate_cert());
    if (!cls1.is_disjunctor || !cls2.is_conjunctor)
        throw ConstructionError(
            "QL companion needs a disjunctor A1 and a conjunctor A2");

    if (!cls1.has_one_divisors) {
        // A one-divisor-free disjunctor can satisfy the excluded-middle
        // requirement only with the greatest negation; the implication then
        // collapses to an (A,N)-form pairing with any zero-divisor-free
        // aggregation.
        bool greatest = true;
        for (double x : unit_grid(kDefaultGrid2d))
            if (x < 1.0 && n.fn(x) < 1.0 - kDefaultTol) {
                greatest = false;
                break;
            }
        note_check(r, "N is the greatest negation (forced by LEM)", greatest,
                   "(grid-checked)");
        if (!greatest)
            throw ConstructionError(
                "A1 has no one divisors: the excluded-middle requirement "
                "forces the greatest negation, got '" +
                n.kind + "'");
        r.source = "ql-one-divisor-free-route";
        Implication i = imp_ql(a1, a2, neg_greatest());
        Aggregation member = agg_min();
        r.note =
            "any aggregation without zero divisors; certified member: min";
        r.uniqueness = Uniqueness::exists;
        r.certification = certify_pair(i, member);
        r.aggregation = std::move(member);
        r.implication = std::move(i);
        return r;
    }

    r.source = "ql-pseudo-inverse-composite";
    bool h_cont = gridcheck::grid_continuous(
        [&a1](double x) { return a1.fn(x, 0.0); }, 1001, 0.05);
    note_check(r, "x -> A1(x,0) is continuous", h_cont, "(grid-consistent)");
    note_check(r, "N is continuous", n.continuous, "(catalog-certified)");
    if (!h_cont || !n.continuous)
        throw ConstructionError(
            "QL companion needs continuous A1(.,0) and a continuous "
            "negation");

    Implication i = imp_ql(a1, a2, n);  // throws naming the failed axiom
    Negation nj = natural_negation(i);
    note_check(r, "natural negation of the QL-implication is continuous",
               nj.continuous, "(grid-consistent)");
    if (!nj.continuous)
        throw ConstructionError(
            "QL companion formula needs a continuous natural negation");
    Negation njt = pseudo_inverse(nj);

    Aggregation partner;
    partner.kind = "ql-companion";
    partner.params["a1"] = a1.kind;
    partner.params["a2"] = a2.kind;
    partner.params["negation"] = n.kind;
    auto jf = i.fn;
    auto njf = nj.fn;
    auto njtf = njt.fn;
    partner.fn = [jf, njf, njtf](double x, double y) {
        return njtf(jf(njtf(njf(x)), njf(y)));
    };
    r.note = "unique among commutative aggregations";
    r.uniqueness = Uniqueness::unique;
    r.certification = certify_pair(i, partner);
    r.aggregation = std::move(partner);
    r.implication = std::move(i);
    return r;
}

CompanionResult companion_for_f_implication(const Generator& f) {
    CompanionResult r;
    r.source = "f-generated-product";
    Implication i = imp_f_generated(f);
    note_check(r, "f decreasing with f(1)=0", true, "(catalog-certified)");
    Aggregation partner = agg_product();
    r.uniqueness = Uniqueness::unique;
    r.certification = certify_pair(i, partner);
    r.aggregation = std::move(partner);
    r.implication = std::move(i);
    return r;
}

CompanionResult companion_for_g_implication(const Generator& g) {
    CompanionResult r;
    r.source = "g-generated-product";
    Implication i = imp_g_generated(g);
    note_check(r, "g increasing with g(0)=0", true, "(catalog-certified)");
    ClassificationRecord cls = classify(agg_product(), kGateGrid);
    note_check(r, "partner has no zero divisors (necessary)",
               !cls.has_zero_divisors, gate_cert());
    Aggregation partner = agg_product();
    r.uniqueness = Uniqueness::unique;
    r.certification = certify_pair(i, partner);
    r.aggregation = std::move(partner);
    r.implication = std::move(i);
    return r;
}

CompanionResult companion_for_probabilistic(const Aggregation& c,
                                            const std::string& variant) {
    if (!c.declared_copula)
        throw ConstructionError(
            "probabilistic companion requires a declared copula");
    if (variant != "plain" && variant != "s")
        throw ParamError("variant must be 'plain' or 's'");
    CompanionResult r;
    r.source = variant == "plain" ? "probabilistic-copula-construction"
                                  : "probabilistic-s-copula-construction";
    auto cf = c.fn;
    auto g = unit_grid(kDefaultGrid3d);
    const double tol = kDefaultTol;
    // ratio with the 0/0 = 1 convention
    auto ratio = [](double num, double den) {
        if (den == 0.0) return 1.0;
        double v = num / den;
        return v > 1.0 ? 1.0 : v;
    };
    for (double x : g)
        for (double y : g)
            for (double z : g) {
                double lhs, rhs;
                if (variant == "plain") {
                    double w = ratio(cf(1.0 - y, z), 1.0 - y);
                    lhs = x * x * cf(1.0 - ratio(cf(x, y), x), z);
                    rhs = x * cf(x, w) - cf(x, y) * cf(x, w);
                } else {
                    lhs = cf(x, std::min(cf(1.0 - y, z) + y, 1.0));
                    rhs = cf(x, y) + cf(std::max(x - cf(x, y), 0.0), z);
                }
                if (std::abs(lhs - rhs) > tol) {
                    std::ostringstream os;
                    os << "copula functional equation for the " << variant
                       << " variant fails at " << triple({x, y, z})
                       << " (lhs=" << lhs << ", rhs=" << rhs
                       << "); LIA partners may still exist outside this "
                          "construction";
                    throw ConstructionError(os.str());
                }
            }
    note_check(r, "copula functional equation", true,
               "(grid-checked, " + std::to_string(kDefaultGrid3d) +
                   " points per axis)");

    Implication i = variant == "plain" ? imp_probabilistic(c)
                                       : imp_probabilistic_s(c);
    Aggregation partner;
    partner.kind = variant == "plain" ? "probabilistic-companion"
                                      : "probabilistic-s-companion";
    partner.params["copula"] = c.params.value("name", c.kind);
    if (variant == "plain") {
        partner.fn = [cf](double x, double y) {
            if (x == 0.0) return 0.0;
            double v = 1.0 - cf(x, 1.0 - y) / x;
            return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        };
    } else {
        partner.fn = [cf](double x, double y) {
            double v = x - cf(x, 1.0 - y);
            return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
        };
    }
    r.uniqueness = Uniqueness::unique;
    r.certification = certify_pair(i, partner);
    r.aggregation = std::move(partner);
    r.implication = std::move(i);
    return r;
}

CompanionResult power_implication_lia_verdict(const Aggregation& t) {
    CompanionResult r;
    r.uniqueness = Uniqueness::none;
    if (t.kind == "lukasiewicz-tnorm") {
        r.source = "power-nilpotent-verdict";
        r.note =
            "power implication of a nilpotent Archimedean t-norm: no LIA "
            "partner exists among aggregation functions";
        r.implication = power_implication(t);
        return r;
    }
    if (t.kind == "min" || t.kind == "product") {
        r.source = "power-min-strict-verdict";
        r.note =
            "power implication of '" + t.kind +
            "': no LIA partner exists among commutative aggregations or "
            "aggregations with zero divisors";
        Implication i = power_implication(agg_min());
        // EP failure witness for the min power implication
        double lhs = i.fn(0.5, i.fn(0.3, 0.4));
        double rhs = i.fn(0.3, i.fn(0.5, 0.4));
        std::ostringstream os;
        os << "; EP fails for the min power implication at (0.5, 0.3, 0.4): "
           << lhs << " vs " << rhs;
        r.note += os.str();
        note_check(r, "EP failure witness (0.5, 0.3, 0.4)",
                   std::abs(lhs - rhs) > kDefaultTol, "(direct evaluation)");
        r.implication = power_implication(t);
        return r;
    }
    throw ConstructionError(
        "power implication verdicts cover min, product, and "
        "lukasiewicz-tnorm; got '" +
        t.kind + "'");
}

CompatibilityResult check_a_compatible(const Negation& n,
                                       const Aggregation& a, std::size_t grid,
                                       double tol) {
    CompatibilityResult res;
    auto g = unit_grid(grid);
    std::vector<double> nv(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) nv[i] = n.fn(g[i]);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (std::abs(nv[i] - nv[j]) > tol) continue;
            for (double x : g) {
                if (std::abs(n.fn(a.fn(x, g[i])) - n.fn(a.fn(x, g[j]))) >
                    2.0 * tol) {
                    res.compatible = false;
                    res.witness = {x, g[i], g[j]};
                    return res;
                }
            }
        }
    return res;
}

CompanionResult implication_from_aggregation(const Aggregation& a,
                                             const Negation& n) {
    CompanionResult r;
    r.source = "conjunctor-negation-construction";
    ClassificationRecord cls = classify(a, kGateGrid);
    note_check(r, "A is a conjunctor", cls.is_conjunctor, gate_cert());
    note_check(r, "A is associative", cls.is_associative, gate_cert());
    note_check(r, "N is continuous", n.continuous, "(catalog-certified)");
    if (!cls.is_conjunctor || !cls.is_associative)
        throw ConstructionError(
            "implication-from-aggregation needs an associative conjunctor; "
            "'" +
            a.kind + "' fails the gate");
    if (!n.continuous)
        throw ConstructionError(
            "implication-from-aggregation needs a continuous negation");
    CompatibilityResult comp = check_a_compatible(n, a);
    note_check(r, "N is A-compatible", comp.compatible, "(grid-checked)");
    if (!comp.compatible)
        throw ConstructionError("negation '" + n.kind +
                                "' is not compatible with '" + a.kind +
                                "': witness " + triple(*comp.witness));
    Implication i = imp_from_conjunctor(a, n);
    r.note = "unique for the given natural negation";
    r.uniqueness = Uniqueness::unique;
    r.certification = certify_pair(i, a);
    r.aggregation = a;
    r.implication = std::move(i);
    return r;
}

CompanionResult implication_for_representable(const Generator& g,
                                              const Negation& n) {
    CompanionResult r;
    r.source = "representable-generator-construction";
    note_check(r, "N is strict", n.strict, "(catalog-certified)");
    Implication i = imp_representable_generated(g, n);
    Aggregation partner = agg_representable(g);
    r.uniqueness = Uniqueness::unique;
    r.certification = certify_pair(i, partner);
    r.aggregation = std::move(partner);
    r.implication = std::move(i);
    return r;
}

}  // namespace lia
