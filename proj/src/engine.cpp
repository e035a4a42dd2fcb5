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
#include "lia/engine.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "lia/error.hpp"
#include "lia/properties.hpp"

namespace lia {

namespace {

using Ledger = std::vector<std::pair<std::string, std::string>>;

std::string op_key(const MISOSystem& sys) {
    return sys.combiner.kind + "|" + sys.combiner.params.dump() + "|" +
           sys.implication.family + "|" + sys.implication.params.dump();
}

// Operator-level gate results are deterministic per descriptor, so cache
// them; per-system checks (set-dependent identities) are never cached.
const std::pair<bool, Ledger>& cached_gate(
    const std::string& key, const std::function<std::pair<bool, Ledger>()>& f) {
    static std::map<std::string, std::pair<bool, Ledger>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, f()).first;
    return it->second;
}

void note(Ledger& l, const std::string& hyp, bool ok) {
    l.emplace_back(hyp, ok ? "holds" : "FAILS");
}

[[noreturn]] void reject(const std::string& engine, const Ledger& l) {
    std::ostringstream os;
    os << engine << " admission failed:";
    for (const auto& e : l)
        if (e.second.rfind("FAILS", 0) == 0) os << " [" << e.first << "]";
    throw AdmissionError(os.str());
}

bool all_hold(const Ledger& l) {
    for (const auto& e : l)
        if (e.second.rfind("FAILS", 0) == 0) return false;
    return true;
}

Ledger gate_bks_hierarchical(const MISOSystem& sys) {
    auto r = cached_gate("bks-hier|" + op_key(sys), [&]() {
        Ledger l;
        PropertyReport p = check_properties(sys.implication, CheckOptions{});
        note(l, "implication satisfies NP", p.holds("NP"));
        ClassificationRecord c = classify(sys.combiner, kDefaultGrid3d);
        bool neutral = c.left_neutral &&
                       std::abs(*c.left_neutral - 1.0) <= kDefaultTol;
        note(l, "combiner is a conjunctor with left neutral element 1",
             c.is_conjunctor && neutral);
        note(l, "(implication, combiner) satisfies LIA",
             check_lia(sys.implication, sys.combiner).holds);
        return std::make_pair(all_hold(l), l);
    });
    if (!r.first) reject("hierarchical BKS", r.second);
    return r.second;
}

Ledger gate_sbr_hierarchical_ops(const MISOSystem& sys) {
    auto r = cached_gate("sbr-hier|" + op_key(sys), [&]() {
        Ledger l;
        ClassificationRecord c = classify(sys.combiner, kDefaultGrid3d);
        note(l, "combiner is grid-associative", c.is_associative);
        note(l, "combiner is grid-commutative", c.is_commutative);
        note(l, "(implication, combiner) satisfies LIA",
             check_lia(sys.implication, sys.combiner).holds);
        return std::make_pair(all_hold(l), l);
    });
    if (!r.first) reject("hierarchical SBR", r.second);
    return r.second;
}

Ledger gate_tip(const MISOSystem& sys, bool hierarchical) {
    std::string key = (hierarchical ? "tip-hier|" : "tip|") + op_key(sys);
    auto r = cached_gate(key, [&]() {
        Ledger l;
        PropertyReport p = check_properties(sys.implication, CheckOptions{});
        note(l, "implication is right-continuous in the second argument",
             p.holds("right-continuous-second"));
        note(l, "implication satisfies OP", p.holds("OP"));
        note(l, "(implication, combiner) satisfies LIA",
             check_lia(sys.implication, sys.combiner).holds);
        if (hierarchical) {
            ClassificationRecord c = classify(sys.combiner, kDefaultGrid3d);
            note(l, "combiner is a conjunctor", c.is_conjunctor);
        }
        return std::make_pair(all_hold(l), l);
    });
    if (!r.first) reject(hierarchical ? "hierarchical TIP" : "TIP", r.second);
    return r.second;
}

bool combiner_grid_associative(const MISOSystem& sys) {
    auto r = cached_gate("assoc|" + sys.combiner.kind + "|" +
                             sys.combiner.params.dump(),
                         [&]() {
                             Ledger l;
                             note(l, "combiner is grid-associative",
                                  classify(sys.combiner, kDefaultGrid3d)
                                      .is_associative);
                             return std::make_pair(all_hold(l), l);
                         });
    return r.first;
}

std::vector<std::size_t> sizes_of(const MISOSystem& sys) {
    std::vector<std::size_t> s;
    for (const auto& u : sys.input_universes) s.push_back(u.size());
    return s;
}

std::size_t support_cells(const std::vector<double>& v) {
    std::size_t c = 0;
    for (double x : v)
        if (x > 0.0) ++c;
    return c;
}

void check_inputs(const MISOSystem& sys, const std::vector<FuzzySet>& inputs) {
    sys.validate();
    if (inputs.size() != sys.arity())
        throw DomainError("got " + std::to_string(inputs.size()) +
                          " input sets, expected " +
                          std::to_string(sys.arity()));
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        inputs[i].validate();
        if (inputs[i].universe != sys.input_universes[i])
            throw DomainError("input set " + std::to_string(i + 1) +
                              " does not conform to its universe");
    }
}

// Sum two rule-count vectors with a per-rule label prefix.
void append_counts(OpCount& into, const OpCount& rule, std::size_t rule_index,
                   std::size_t nrules) {
    for (const auto& s : rule.stages) {
        if (nrules > 1)
            into.stages.emplace_back(
                "rule " + std::to_string(rule_index + 1) + ": " + s.first,
                s.second);
        else
            into.stages.push_back(s);
    }
}

FuzzySet finish(const MISOSystem& sys,
                const std::vector<std::vector<double>>& per_rule,
                InferenceReport& rep) {
    FuzzySet out;
    out.universe = sys.output_universe;
    out.memberships = per_rule[0];
    for (std::size_t r = 1; r < per_rule.size(); ++r)
        for (std::size_t y = 0; y < out.memberships.size(); ++y)
            out.memberships[y] =
                std::min(out.memberships[y], per_rule[r][y]);
    if (per_rule.size() > 1)
        rep.counts.stages.emplace_back(
            "rule combine",
            static_cast<long long>((per_rule.size() - 1) *
                                   sys.output_universe.size()));
    return out;
}

std::string joint_label(std::size_t flat) { return "#" + std::to_string(flat); }

FuzzySet as_joint_set(const std::vector<double>& values) {
    FuzzySet s;
    s.memberships = values;
    s.universe.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        s.universe.push_back(joint_label(i));
    return s;
}

}  // namespace

std::vector<double> combine_antecedents(const Aggregation& a,
                                        const std::vector<FuzzySet>& sets) {
    if (sets.empty()) throw DomainError("no sets to combine");
    std::vector<double> acc = sets[0].memberships;
    for (std::size_t k = 1; k < sets.size(); ++k) {
        const auto& next = sets[k].memberships;
        std::vector<double> grown;
        grown.reserve(acc.size() * next.size());
        for (double u : acc)
            for (double v : next) grown.push_back(a.fn(u, v));
        acc = std::move(grown);
    }
    return acc;
}

InferenceResult bks_classical(const MISOSystem& sys,
                              const std::vector<FuzzySet>& inputs) {
    check_inputs(sys, inputs);
    if (sys.arity() > 2 && !combiner_grid_associative(sys))
        throw AdmissionError(
            "m > 2 needs a grid-associative combiner for a well-defined "
            "joint tensor");
    InferenceResult res;
    InferenceReport& rep = res.report;
    const auto& I = sys.implication.fn;
    const auto& A = sys.combiner.fn;
    std::vector<std::vector<double>> per_rule;
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
        const Rule& rule = sys.rules[r];
        std::vector<double> joint = combine_antecedents(sys.combiner,
                                                        rule.antecedents);
        std::vector<double> joint_in = combine_antecedents(sys.combiner,
                                                           inputs);
        double s = 0.0;
        for (std::size_t c = 0; c < joint.size(); ++c)
            s = std::max(s, A(joint_in[c], joint[c]));
        std::vector<double> out(sys.output_universe.size());
        for (std::size_t y = 0; y < out.size(); ++y)
            out[y] = I(s, rule.consequent.memberships[y]);
        if (r == 0) rep.intermediates["s"] = {s};
        per_rule.push_back(std::move(out));
        append_counts(rep.counts,
                      predict_counts("bks", "classical", sizes_of(sys),
                                     sys.output_universe.size()),
                      r, sys.rules.size());
    }
    res.output = finish(sys, per_rule, rep);
    return res;
}

InferenceResult bks_hierarchical(const MISOSystem& sys,
                                 const std::vector<FuzzySet>& inputs) {
    check_inputs(sys, inputs);
    InferenceResult res;
    res.report.admission = gate_bks_hierarchical(sys);
    const auto& I = sys.implication.fn;
    const auto& A = sys.combiner.fn;
    std::vector<std::vector<double>> per_rule;
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
        const Rule& rule = sys.rules[r];
        std::vector<double> cur = rule.consequent.memberships;
        for (std::size_t i = sys.arity(); i-- > 0;) {
            const auto& d = rule.antecedents[i].memberships;
            const auto& dp = inputs[i].memberships;
            double s = 0.0;
            for (std::size_t x = 0; x < d.size(); ++x)
                s = std::max(s, A(dp[x], d[x]));
            for (double& v : cur) v = I(s, v);
            if (r == 0)
                res.report.intermediates["s" + std::to_string(i + 1)] = {s};
        }
        per_rule.push_back(std::move(cur));
        append_counts(res.report.counts,
                      predict_counts("bks", "hierarchical", sizes_of(sys),
                                     sys.output_universe.size()),
                      r, sys.rules.size());
    }
    res.output = finish(sys, per_rule, res.report);
    return res;
}

InferenceResult sbr_classical(const MISOSystem& sys,
                              const std::vector<FuzzySet>& inputs) {
    check_inputs(sys, inputs);
    if (sys.arity() > 2 && !combiner_grid_associative(sys))
        throw AdmissionError(
            "m > 2 needs a grid-associative combiner for a well-defined "
            "joint tensor");
    InferenceResult res;
    const auto& I = sys.implication.fn;
    const auto& A = sys.combiner.fn;
    std::vector<std::vector<double>> per_rule;
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
        const Rule& rule = sys.rules[r];
        std::vector<double> joint = combine_antecedents(sys.combiner,
                                                        rule.antecedents);
        std::vector<double> joint_in = combine_antecedents(sys.combiner,
                                                           inputs);
        double s = similarity(sys.similarity, as_joint_set(joint_in),
                              as_joint_set(joint));
        std::vector<double> modified(joint.size());
        for (std::size_t c = 0; c < joint.size(); ++c)
            modified[c] = A(s, joint[c]);
        std::vector<double> out(sys.output_universe.size(), 0.0);
        for (std::size_t y = 0; y < out.size(); ++y)
            for (std::size_t c = 0; c < joint.size(); ++c)
                out[y] = std::max(out[y],
                                  I(modified[c],
                                    rule.consequent.memberships[y]));
        if (r == 0) res.report.intermediates["S"] = {s};
        per_rule.push_back(std::move(out));
        append_counts(
            res.report.counts,
            predict_counts("sbr", "classical", sizes_of(sys),
                           sys.output_universe.size(), {},
                           support_cells(joint_in)),
            r, sys.rules.size());
    }
    res.output = finish(sys, per_rule, res.report);
    return res;
}

InferenceResult sbr_hierarchical(const MISOSystem& sys,
                                 const std::vector<FuzzySet>& inputs) {
    check_inputs(sys, inputs);
    InferenceResult res;
    res.report.admission = gate_sbr_hierarchical_ops(sys);
    const auto& I = sys.implication.fn;
    const auto& A = sys.combiner.fn;

    // The per-axis cascade is only sound when the similarity of the joint
    // sets factors through the combiner; verified on the actual sets.
    for (const Rule& rule : sys.rules) {
        std::vector<double> joint = combine_antecedents(sys.combiner,
                                                        rule.antecedents);
        std::vector<double> joint_in = combine_antecedents(sys.combiner,
                                                           inputs);
        double lhs = similarity(sys.similarity, as_joint_set(joint_in),
                                as_joint_set(joint));
        double rhs = similarity(sys.similarity, inputs[0],
                                rule.antecedents[0]);
        for (std::size_t i = 1; i < sys.arity(); ++i)
            rhs = A(rhs, similarity(sys.similarity, inputs[i],
                                    rule.antecedents[i]));
        bool ok = std::abs(lhs - rhs) <= kDefaultTol;
        res.report.admission.emplace_back(
            "similarity distributes over the combiner on the system's sets",
            ok ? "holds" : "FAILS");
        if (!ok) {
            std::ostringstream os;
            os << "hierarchical SBR admission failed: S(joint', joint) = "
               << lhs << " but the combined per-axis similarity is " << rhs;
            throw AdmissionError(os.str());
        }
    }

    std::vector<std::vector<double>> per_rule;
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
        const Rule& rule = sys.rules[r];
        std::vector<double> cur = rule.consequent.memberships;
        std::vector<std::size_t> supp;
        for (const FuzzySet& in : inputs)
            supp.push_back(support_cells(in.memberships));
        for (std::size_t i = sys.arity(); i-- > 0;) {
            const auto& d = rule.antecedents[i].memberships;
            double s = similarity(sys.similarity, inputs[i],
                                  rule.antecedents[i]);
            std::vector<double> modified(d.size());
            for (std::size_t x = 0; x < d.size(); ++x)
                modified[x] = A(s, d[x]);
            std::vector<double> next(cur.size(), 0.0);
            for (std::size_t y = 0; y < cur.size(); ++y)
                for (std::size_t x = 0; x < d.size(); ++x)
                    next[y] = std::max(next[y], I(modified[x], cur[y]));
            cur = std::move(next);
            if (r == 0)
                res.report.intermediates["S" + std::to_string(i + 1)] = {s};
        }
        per_rule.push_back(std::move(cur));
        append_counts(res.report.counts,
                      predict_counts("sbr", "hierarchical", sizes_of(sys),
                                     sys.output_universe.size(), supp),
                      r, sys.rules.size());
    }
    res.output = finish(sys, per_rule, res.report);
    return res;
}

InferenceResult tip_classical(const MISOSystem& sys,
                              const std::vector<FuzzySet>& inputs) {
    check_inputs(sys, inputs);
    if (sys.arity() > 2 && !combiner_grid_associative(sys))
        throw AdmissionError(
            "m > 2 needs a grid-associative combiner for a well-defined "
            "joint tensor");
    InferenceResult res;
    res.report.admission = gate_tip(sys, /*hierarchical=*/false);
    const auto& I = sys.implication.fn;
    const auto& A = sys.combiner.fn;
    std::vector<std::vector<double>> per_rule;
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
        const Rule& rule = sys.rules[r];
        std::vector<double> joint = combine_antecedents(sys.combiner,
                                                        rule.antecedents);
        std::vector<double> joint_in = combine_antecedents(sys.combiner,
                                                           inputs);
        std::vector<double> out(sys.output_universe.size(), 0.0);
        for (std::size_t y = 0; y < out.size(); ++y)
            for (std::size_t c = 0; c < joint.size(); ++c)
                out[y] = std::max(
                    out[y],
                    A(I(joint[c], rule.consequent.memberships[y]),
                      joint_in[c]));
        per_rule.push_back(std::move(out));
        append_counts(res.report.counts,
                      predict_counts("tip", "classical", sizes_of(sys),
                                     sys.output_universe.size()),
                      r, sys.rules.size());
    }
    res.output = finish(sys, per_rule, res.report);
    return res;
}

InferenceResult tip_hierarchical(const MISOSystem& sys,
                                 const std::vector<FuzzySet>& inputs) {
    check_inputs(sys, inputs);
    InferenceResult res;
    res.report.admission = gate_tip(sys, /*hierarchical=*/true);
    const auto& I = sys.implication.fn;
    const auto& A = sys.combiner.fn;
    std::vector<std::vector<double>> per_rule;
    for (std::size_t r = 0; r < sys.rules.size(); ++r) {
        const Rule& rule = sys.rules[r];
        std::vector<double> cur = rule.consequent.memberships;
        for (std::size_t i = sys.arity(); i-- > 0;) {
            const auto& d = rule.antecedents[i].memberships;
            const auto& dp = inputs[i].memberships;
            std::vector<double> next(cur.size(), 0.0);
            for (std::size_t y = 0; y < cur.size(); ++y)
                for (std::size_t x = 0; x < d.size(); ++x)
                    next[y] = std::max(next[y], A(I(d[x], cur[y]), dp[x]));
            cur = std::move(next);
            if (r == 0)
                res.report.intermediates["stage" + std::to_string(i + 1)] =
                    cur;
        }
        per_rule.push_back(std::move(cur));
        append_counts(res.report.counts,
                      predict_counts("tip", "hierarchical", sizes_of(sys),
                                     sys.output_universe.size()),
                      r, sys.rules.size());
    }
    res.output = finish(sys, per_rule, res.report);
    return res;
}

InferenceResult bks_classical(const MISOSystem& sys,
                              const SingletonInput& in) {
    return bks_classical(sys, expand(sys, in));
}
InferenceResult bks_hierarchical(const MISOSystem& sys,
                                 const SingletonInput& in) {
    return bks_hierarchical(sys, expand(sys, in));
}
InferenceResult sbr_classical(const MISOSystem& sys,
                              const SingletonInput& in) {
    return sbr_classical(sys, expand(sys, in));
}
InferenceResult sbr_hierarchical(const MISOSystem& sys,
                                 const SingletonInput& in) {
    return sbr_hierarchical(sys, expand(sys, in));
}
InferenceResult tip_classical(const MISOSystem& sys,
                              const SingletonInput& in) {
    return tip_classical(sys, expand(sys, in));
}
InferenceResult tip_hierarchical(const MISOSystem& sys,
                                 const SingletonInput& in) {
    return tip_hierarchical(sys, expand(sys, in));
}

InferenceResult run_engine(const std::string& engine, const std::string& mode,
                           const MISOSystem& sys,
                           const std::vector<FuzzySet>& inputs) {
    bool hier = mode == "hierarchical";
    if (!hier && mode != "classical")
        throw ParamError("mode must be classical or hierarchical");
    if (engine == "bks")
        return hier ? bks_hierarchical(sys, inputs)
                    : bks_classical(sys, inputs);
    if (engine == "sbr")
        return hier ? sbr_hierarchical(sys, inputs)
                    : sbr_classical(sys, inputs);
    if (engine == "tip")
        return hier ? tip_hierarchical(sys, inputs)
                    : tip_classical(sys, inputs);
    throw ParamError("unknown engine '" + engine + "'");
}

}  // namespace lia
