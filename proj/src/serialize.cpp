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
#include "lia/serialize.hpp"

#include <fstream>

#include "lia/error.hpp"

namespace lia {

namespace {

using nlohmann::json;

json params_of(const json& d) {
    if (!d.contains("params")) return json::object();
    if (!d["params"].is_object()) throw ParamError("params must be an object");
    return d["params"];
}

// Nested operator fields: a bare string names a parameterless catalog
// member, an object is a full descriptor.
json nested(const json& v, const char* field_name) {
    if (v.is_string()) return json{{"kind", v.get<std::string>()}};
    if (v.is_object()) return v;
    throw ParamError(std::string("field '") + field_name +
                     "' must be a kind string or a descriptor object");
}

Generator generator_of(const json& p) {
    return make_generator(p.value("generator", ""));
}

}  // namespace

Negation make_negation(const json& d) {
    if (!d.is_object() || !d.contains("kind"))
        throw ParamError("negation descriptor needs a 'kind'");
    std::string kind = d["kind"].get<std::string>();
    json p = params_of(d);
    if (kind == "standard") return neg_standard();
    if (kind == "smallest") return neg_smallest();
    if (kind == "greatest") return neg_greatest();
    if (kind == "custom-closed-form")
        return neg_closed_form(p.value("name", ""));
    if (kind == "generator-based") return neg_generator_based(generator_of(p));
    if (kind == "tabulated")
        return neg_tabulated(p.value("grid", std::vector<double>{}),
                             p.value("values", std::vector<double>{}));
    if (kind == "pseudo-inverse")
        return pseudo_inverse(make_negation(nested(p.at("of"), "of")));
    // Convenience aliases for catalog closed forms.
    if (kind == "one-minus-square" || kind == "one-minus-sqrt")
        return neg_closed_form(kind);
    throw ParamError("unknown negation kind '" + kind + "'");
}

Aggregation make_aggregation(const json& d) {
    if (!d.is_object() || !d.contains("kind"))
        throw ParamError("aggregation descriptor needs a 'kind'");
    std::string kind = d["kind"].get<std::string>();
    json p = params_of(d);
    if (kind == "min") return agg_min();
    if (kind == "product") return agg_product();
    if (kind == "lukasiewicz-tnorm") return agg_lukasiewicz();
    if (kind == "drastic") return agg_drastic();
    if (kind == "max") return agg_max();
    if (kind == "probabilistic-sum") return agg_probabilistic_sum();
    if (kind == "bounded-sum") return agg_bounded_sum();
    if (kind == "smallest-conjunctor") return agg_smallest_conjunctor();
    if (kind == "greatest-averaging-conjunctor")
        return agg_greatest_averaging_conjunctor();
    if (kind == "gated-mean") return agg_gated_mean();
    if (kind == "representable") return agg_representable(generator_of(p));
    if (kind == "wqam")
        return agg_wqam(generator_of(p), p.value("lambda", 0.5));
    if (kind == "ts-function")
        return agg_ts_function(
            make_aggregation(nested(p.at("tnorm"), "tnorm")),
            make_aggregation(nested(p.at("tconorm"), "tconorm")),
            generator_of(p), p.value("lambda", 0.5));
    if (kind == "uninorm") return agg_uninorm_3pi();
    if (kind == "copula") return agg_copula(p.value("name", ""));
    if (kind == "tabulated")
        return agg_tabulated(p.value("grid", std::vector<double>{}),
                             p.value("values",
                                     std::vector<std::vector<double>>{}));
    if (kind == "n-dual-of") {
        json inner = nested(p.at("of"), "of");
        if (p.contains("of_params")) inner["params"] = p["of_params"];
        return n_dual(make_aggregation(inner),
                      make_negation(nested(p.at("negation"), "negation")));
    }
    if (kind == "conjugate-of") {
        json inner = nested(p.at("of"), "of");
        if (p.contains("of_params")) inner["params"] = p["of_params"];
        return conjugate(make_aggregation(inner),
                         make_automorphism(p.value("phi", "identity"),
                                           p.value("power", 1.0)));
    }
    throw ParamError("unknown aggregation kind '" + kind + "'");
}

Implication make_implication(const json& d) {
    if (!d.is_object() || !d.contains("family"))
        throw ParamError("implication descriptor needs a 'family'");
    std::string family = d["family"].get<std::string>();
    json p = params_of(d);
    auto agg = [&](const char* field) {
        return make_aggregation(nested(p.at(field), field));
    };
    auto neg = [&](const char* field) {
        return make_negation(nested(p.at(field), field));
    };
    if (family == "named") return imp_named(p.value("name", ""));
    if (family == "an-implication")
        return imp_an(agg("aggregation"), neg("negation"));
    if (family == "a-implication") return imp_a(agg("aggregation"));
    if (family == "r-implication")
        return residual_implication(agg("aggregation"),
                                    p.value("validate", true));
    if (family == "ql-operation")
        return imp_ql(agg("a1"), agg("a2"), neg("negation"));
    if (family == "f-generated") return imp_f_generated(generator_of(p));
    if (family == "g-generated") return imp_g_generated(generator_of(p));
    if (family == "probabilistic")
        return imp_probabilistic(agg_copula(p.value("copula", "")));
    if (family == "probabilistic-s")
        return imp_probabilistic_s(agg_copula(p.value("copula", "")));
    if (family == "t-power") return power_implication(agg("tnorm"));
    if (family == "from-conjunctor")
        return imp_from_conjunctor(agg("aggregation"), neg("negation"));
    if (family == "representable-generated")
        return imp_representable_generated(generator_of(p), neg("negation"));
    if (family == "closed-form") return imp_closed_form(p.value("name", ""));
    throw ParamError("unknown implication family '" + family + "'");
}

json descriptor(const Negation& n) {
    return json{{"kind", n.kind}, {"params", n.params}};
}

json descriptor(const Aggregation& a) {
    return json{{"kind", a.kind}, {"params", a.params}};
}

json descriptor(const Implication& i) {
    return json{{"family", i.family}, {"params", i.params}};
}

MISOSystem load_system(const json& doc) {
    MISOSystem sys;
    if (!doc.is_object()) throw ParamError("system document must be an object");
    try {
        for (const auto& in : doc.at("inputs"))
            sys.input_universes.push_back(
                in.at("labels").get<std::vector<std::string>>());
        sys.output_universe =
            doc.at("output").at("labels").get<std::vector<std::string>>();
        for (const auto& r : doc.at("rules")) {
            Rule rule;
            auto ants = r.at("antecedents");
            for (std::size_t i = 0; i < ants.size(); ++i) {
                FuzzySet s;
                s.universe = i < sys.input_universes.size()
                                 ? sys.input_universes[i]
                                 : std::vector<std::string>{};
                s.memberships = ants[i].get<std::vector<double>>();
                rule.antecedents.push_back(std::move(s));
            }
            rule.consequent.universe = sys.output_universe;
            rule.consequent.memberships =
                r.at("consequent").get<std::vector<double>>();
            sys.rules.push_back(std::move(rule));
        }
        sys.combiner = make_aggregation(doc.at("combiner"));
        sys.implication = make_implication(doc.at("implication"));
        if (doc.contains("similarity")) {
            const json& s = doc["similarity"];
            sys.similarity.kind =
                s.is_string() ? s.get<std::string>()
                              : s.value("kind",
                                        "support-restricted-sup-difference");
            if (s.is_object() && s.contains("params"))
                sys.similarity.value = s["params"].value("value", 1.0);
        }
    } catch (const json::exception& e) {
        throw ParamError(std::string("malformed system document: ") +
                         e.what());
    }
    sys.validate();
    return sys;
}

MISOSystem load_system_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParamError("cannot open system file '" + path + "'");
    json doc;
    try {
        f >> doc;
    } catch (const json::exception& e) {
        throw ParamError(std::string("invalid JSON in '") + path +
                         "': " + e.what());
    }
    return load_system(doc);
}

std::vector<FuzzySet> load_input(const MISOSystem& sys, const json& doc) {
    try {
        if (doc.contains("singleton")) {
            SingletonInput in;
            in.labels = doc["singleton"].get<std::vector<std::string>>();
            return expand(sys, in);
        }
        if (doc.contains("sets")) {
            std::vector<FuzzySet> sets;
            const auto& vecs = doc["sets"];
            for (std::size_t i = 0; i < vecs.size(); ++i) {
                FuzzySet s;
                s.universe = i < sys.input_universes.size()
                                 ? sys.input_universes[i]
                                 : std::vector<std::string>{};
                s.memberships = vecs[i].get<std::vector<double>>();
                sets.push_back(std::move(s));
            }
            return sets;
        }
    } catch (const json::exception& e) {
        throw ParamError(std::string("malformed input document: ") +
                         e.what());
    }
    throw ParamError("input document needs 'singleton' or 'sets'");
}

json to_json(const OpCount& c) {
    json stages = json::array();
    for (const auto& s : c.stages)
        stages.push_back(json{{"stage", s.first}, {"count", s.second}});
    return json{{"stages", stages}, {"total", c.total()}};
}

json to_json(const InferenceResult& r) {
    json out{{"output",
              {{"labels", r.output.universe},
               {"memberships", r.output.memberships}}},
             {"counts", to_json(r.report.counts)}};
    json inter = json::object();
    for (const auto& kv : r.report.intermediates) inter[kv.first] = kv.second;
    out["intermediates"] = inter;
    json adm = json::array();
    for (const auto& kv : r.report.admission)
        adm.push_back(json{{"hypothesis", kv.first}, {"verdict", kv.second}});
    out["admission"] = adm;
    return out;
}

json to_json(const CompanionResult& r) {
    json out{{"uniqueness", to_string(r.uniqueness)},
             {"source", r.source},
             {"note", r.note},
             {"certification",
              {{"points", r.certification.points},
               {"tol", r.certification.tol},
               {"note", r.certification.note}}}};
    if (r.aggregation) out["aggregation"] = descriptor(*r.aggregation);
    if (r.implication) out["implication"] = descriptor(*r.implication);
    json hyp = json::array();
    for (const auto& kv : r.hypotheses_checked)
        hyp.push_back(json{{"hypothesis", kv.first}, {"verdict", kv.second}});
    out["hypotheses_checked"] = hyp;
    return out;
}

}  // namespace lia
