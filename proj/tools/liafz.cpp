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
#include <clocale>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lia/engine.hpp"
#include "lia/serialize.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 property-check failure, 2 input error,
// 3 admission error.
constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kAdmissionError = 3;

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fmt6(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += fmt6(v[i]);
    }
    return out;
}

json parse_inline(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw lia::ParamError(std::string("invalid ") + what +
                              " descriptor: " + e.what());
    }
}

std::vector<std::string> parse_input_labels(const std::string& text) {
    std::vector<std::string> labels;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        std::string label = eq == std::string::npos ? tok : tok.substr(eq + 1);
        label.erase(0, label.find_first_not_of(" \t"));
        label.erase(label.find_last_not_of(" \t") + 1);
        if (!label.empty()) labels.push_back(label);
    }
    if (labels.empty())
        throw lia::ParamError("empty --input; expected \"x1=LABEL,x2=LABEL\"");
    return labels;
}

int cmd_infer(const std::string& system_file, const std::string& input,
              const std::string& engine, const std::string& mode, bool count,
              bool as_json) {
    lia::MISOSystem sys = lia::load_system_file(system_file);
    lia::SingletonInput in{parse_input_labels(input)};
    lia::InferenceResult res =
        lia::run_engine(engine, mode, sys, lia::expand(sys, in));
    if (as_json) {
        json out = lia::to_json(res);
        if (!count) out.erase("counts");
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::cout << fmt6(res.output.memberships) << "\n";
    if (count) std::cout << lia::to_table(res.report.counts);
    return kOk;
}

int cmd_check_lia(const std::string& imp_text, const std::string& agg_text,
                  std::size_t grid, double tol, bool as_json) {
    lia::Implication i =
        lia::make_implication(parse_inline(imp_text, "implication"));
    lia::Aggregation a =
        lia::make_aggregation(parse_inline(agg_text, "aggregation"));
    lia::PropertyResult r = lia::check_lia(i, a, grid, tol);
    if (as_json) {
        json out{{"holds", r.holds},
                 {"grid", grid},
                 {"tol", tol}};
        if (r.witness)
            out["witness"] = {(*r.witness)[0], (*r.witness)[1],
                              (*r.witness)[2]};
        std::cout << out.dump(2) << "\n";
        return r.holds ? kOk : kPropertyFailure;
    }
    if (r.holds) {
        std::cout << "HOLDS (grid " << grid << ", tol " << tol << ")\n";
        return kOk;
    }
    const auto& w = *r.witness;
    double lhs = i.fn(a.fn(w[0], w[1]), w[2]);
    double rhs = i.fn(w[0], i.fn(w[1], w[2]));
    std::cout << "FAILS at (" << fmt6(w[0]) << ", " << fmt6(w[1]) << ", "
              << fmt6(w[2]) << "): " << fmt6(lhs) << " vs " << fmt6(rhs)
              << "\n";
    return kPropertyFailure;
}

int cmd_companion(const std::string& op, const std::string& agg_text,
                  const std::string& neg_text, const std::string& a1_text,
                  const std::string& a2_text, const std::string& generator,
                  const std::string& copula, const std::string& variant,
                  const std::string& which) {
    auto agg = [&](const std::string& t, const char* what) {
        return lia::make_aggregation(parse_inline(t, what));
    };
    auto neg = [&]() {
        return lia::make_negation(parse_inline(neg_text, "negation"));
    };
    lia::CompanionResult r;
    if (op == "an")
        r = lia::companion_for_an_implication(agg(agg_text, "aggregation"),
                                              neg());
    else if (op == "extreme")
        r = lia::companion_for_extreme_negations(agg(agg_text, "aggregation"),
                                                 which);
    else if (op == "r")
        r = lia::companion_for_r_implication(agg(agg_text, "aggregation"));
    else if (op == "ql")
        r = lia::companion_for_ql(agg(a1_text, "a1"), agg(a2_text, "a2"),
                                  neg());
    else if (op == "f")
        r = lia::companion_for_f_implication(lia::make_generator(generator));
    else if (op == "g")
        r = lia::companion_for_g_implication(lia::make_generator(generator));
    else if (op == "probabilistic")
        r = lia::companion_for_probabilistic(lia::agg_copula(copula), variant);
    else if (op == "power")
        r = lia::power_implication_lia_verdict(agg(agg_text, "aggregation"));
    else if (op == "from-aggregation")
        r = lia::implication_from_aggregation(agg(agg_text, "aggregation"),
                                              neg());
    else if (op == "representable")
        r = lia::implication_for_representable(lia::make_generator(generator),
                                               neg());
    else
        throw lia::ParamError("unknown companion op '" + op + "'");
    std::cout << lia::to_json(r).dump(2) << "\n";
    return kOk;
}

int cmd_classify(const std::string& agg_text, std::size_t grid, double tol,
                 bool as_json) {
    lia::Aggregation a =
        lia::make_aggregation(parse_inline(agg_text, "aggregation"));
    lia::ClassificationRecord c = lia::classify(a, grid, tol);
    json out{{"kind", a.kind},
             {"conjunctor", c.is_conjunctor},
             {"disjunctor", c.is_disjunctor},
             {"commutative", c.is_commutative},
             {"associative", c.is_associative},
             {"zero_divisors", c.has_zero_divisors},
             {"one_divisors", c.has_one_divisors},
             {"declared_copula", c.declared_copula},
             {"copula_2increasing", c.copula_2increasing}};
    if (c.neutral) out["neutral"] = *c.neutral;
    if (c.left_neutral) out["left_neutral"] = *c.left_neutral;
    if (c.right_neutral) out["right_neutral"] = *c.right_neutral;
    if (c.satisfies_lem_with) out["lem_with"] = *c.satisfies_lem_with;
    if (as_json) {
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    for (auto it = out.begin(); it != out.end(); ++it)
        std::cout << it.key() << ": " << it.value().dump() << "\n";
    return kOk;
}

lia::SizeSpec parse_size(const std::string& text) {
    auto arrow = text.find("->");
    if (arrow == std::string::npos)
        throw lia::ParamError("size must look like \"5x4->3\"");
    lia::SizeSpec s;
    std::stringstream ss(text.substr(0, arrow));
    std::string tok;
    while (std::getline(ss, tok, 'x'))
        s.inputs.push_back(static_cast<std::size_t>(std::stoul(tok)));
    s.output = static_cast<std::size_t>(std::stoul(text.substr(arrow + 2)));
    if (s.inputs.empty()) throw lia::ParamError("size needs input dimensions");
    return s;
}

int cmd_bench(std::vector<std::string> engines, std::vector<std::string> modes,
              const std::vector<std::string>& size_texts, bool csv) {
    if (engines.empty()) engines = {"bks", "sbr", "tip"};
    if (modes.empty()) modes = {"classical", "hierarchical"};
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : engines)
        for (const auto& m : modes) pairs.emplace_back(e, m);
    std::vector<lia::SizeSpec> sizes;
    for (const auto& t : size_texts) sizes.push_back(parse_size(t));
    if (sizes.empty()) sizes.push_back({{5, 4}, 3});
    std::cout << lia::complexity_report(pairs, sizes, csv);
    return kOk;
}

// The three reference systems ship embedded so verify-examples needs no
// filesystem access.
const char* kBksFixture = R"({
  "inputs": [{"labels": ["x11","x12","x13","x14","x15"]},
             {"labels": ["x21","x22","x23","x24"]}],
  "output": {"labels": ["y1","y2","y3"]},
  "rules": [{"antecedents": [[0.9,0.7,0.9,0.6,0.8],[1.0,0.7,0.8,0.9]],
             "consequent": [0.2,0.1,0.3]}],
  "combiner": {"kind": "min"},
  "implication": {"family": "named", "params": {"name": "kleene-dienes"}}
})";

const char* kSbrFixture = R"({
  "inputs": [{"labels": ["x11","x12","x13","x14","x15"]},
             {"labels": ["x21","x22","x23","x24"]}],
  "output": {"labels": ["y1","y2","y3"]},
  "rules": [{"antecedents": [[0.9,0.7,0.9,0.6,0.8],[1.0,0.7,0.8,0.9]],
             "consequent": [0.2,0.1,0.3]}],
  "combiner": {"kind": "greatest-averaging-conjunctor"},
  "implication": {"family": "from-conjunctor",
                  "params": {"aggregation": "greatest-averaging-conjunctor",
                             "negation": "standard"}},
  "similarity": {"kind": "support-restricted-sup-difference"}
})";

const char* kTipFixture = R"({
  "inputs": [{"labels": ["x11","x12","x13","x14","x15"]},
             {"labels": ["x21","x22","x23","x24"]}],
  "output": {"labels": ["y1","y2","y3"]},
  "rules": [{"antecedents": [[0.9,0.7,0.9,0.6,0.8],[1.0,0.7,0.8,0.9]],
             "consequent": [0.2,0.1,0.3]}],
  "combiner": {"kind": "lukasiewicz-tnorm"},
  "implication": {"family": "named", "params": {"name": "lukasiewicz"}}
})";

int cmd_verify_examples(bool as_json) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    auto near = [](const std::vector<double>& got,
                   const std::vector<double>& want) {
        if (got.size() != want.size()) return false;
        for (std::size_t i = 0; i < got.size(); ++i)
            if (std::abs(got[i] - want[i]) > 1e-9) return false;
        return true;
    };
    lia::SingletonInput in{{"x12", "x23"}};

    lia::MISOSystem bks = lia::load_system(json::parse(kBksFixture));
    lia::InferenceResult bc = lia::bks_classical(bks, in);
    lia::InferenceResult bh = lia::bks_hierarchical(bks, in);
    checks.push_back({"bks classical output",
                      near(bc.output.memberships, {0.3, 0.3, 0.3}),
                      "got " + fmt6(bc.output.memberships)});
    checks.push_back({"bks hierarchical output",
                      near(bh.output.memberships, {0.3, 0.3, 0.3}),
                      "got " + fmt6(bh.output.memberships)});
    checks.push_back(
        {"bks classical count", bc.report.counts.total() == 82,
         "expected 82, got " + std::to_string(bc.report.counts.total())});
    checks.push_back(
        {"bks hierarchical count", bh.report.counts.total() == 20,
         "expected 20, got " + std::to_string(bh.report.counts.total())});

    lia::MISOSystem sbr = lia::load_system(json::parse(kSbrFixture));
    lia::InferenceResult sc = lia::sbr_classical(sbr, in);
    lia::InferenceResult sh = lia::sbr_hierarchical(sbr, in);
    checks.push_back({"sbr classical output",
                      near(sc.output.memberships, {0.2, 0.1, 0.2}),
                      "got " + fmt6(sc.output.memberships)});
    checks.push_back({"sbr hierarchical output",
                      near(sh.output.memberships, {0.2, 0.1, 0.2}),
                      "got " + fmt6(sh.output.memberships)});

    lia::MISOSystem tip = lia::load_system(json::parse(kTipFixture));
    lia::InferenceResult tc = lia::tip_classical(tip, in);
    lia::InferenceResult th = lia::tip_hierarchical(tip, in);
    checks.push_back({"tip classical output",
                      near(tc.output.memberships, {0.7, 0.6, 0.8}),
                      "got " + fmt6(tc.output.memberships)});
    checks.push_back({"tip hierarchical output",
                      near(th.output.memberships, {0.7, 0.6, 0.8}),
                      "got " + fmt6(th.output.memberships)});

    bool all = true;
    if (as_json) {
        json out = json::array();
        for (const auto& c : checks) {
            out.push_back(json{{"name", c.name},
                               {"pass", c.pass},
                               {"detail", c.detail}});
            all = all && c.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL")
                      << (c.pass ? "" : " (" + c.detail + ")") << "\n";
            all = all && c.pass;
        }
    }
    return all ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");
    CLI::App app{"liafz: fuzzy inference engines with LIA-certified operator "
                 "pairs"};
    app.require_subcommand(1);

    std::string system_file, input, engine = "bks", mode = "classical";
    bool count = false, as_json = false, csv = false;
    std::string imp_text, agg_text, neg_text, a1_text, a2_text;
    std::string generator, copula, variant = "plain", which = "smallest", op;
    std::size_t grid = lia::kDefaultGrid3d;
    double tol = lia::kDefaultTol;
    std::vector<std::string> engines, modes, size_texts;

    auto* infer = app.add_subcommand("infer", "Run an inference engine");
    infer->add_option("--system", system_file, "System JSON file")->required();
    infer->add_option("--input", input, "Singleton input, e.g. "
                                        "\"x1=x12,x2=x23\"")->required();
    infer->add_option("--engine", engine, "bks | sbr | tip");
    infer->add_option("--mode", mode, "classical | hierarchical");
    infer->add_flag("--count", count, "Append the operation-count table");
    infer->add_flag("--json", as_json, "Machine-readable output");

    auto* chk = app.add_subcommand("check-lia",
                                   "Check the law of importation for a pair");
    chk->add_option("--implication", imp_text, "Implication descriptor JSON")
        ->required();
    chk->add_option("--aggregation", agg_text, "Aggregation descriptor JSON")
        ->required();
    chk->add_option("--grid", grid, "Grid points per axis");
    chk->add_option("--tol", tol, "Comparison tolerance");
    chk->add_flag("--json", as_json, "Machine-readable output");

    auto* comp = app.add_subcommand("companion",
                                    "Construct a certified LIA partner");
    comp->add_option("--op", op,
                     "an | extreme | r | ql | f | g | probabilistic | power "
                     "| from-aggregation | representable")
        ->required();
    comp->add_option("--aggregation", agg_text, "Aggregation descriptor");
    comp->add_option("--negation", neg_text, "Negation descriptor");
    comp->add_option("--a1", a1_text, "Disjunctor descriptor (ql)");
    comp->add_option("--a2", a2_text, "Conjunctor descriptor (ql)");
    comp->add_option("--generator", generator, "Generator name (f/g forms)");
    comp->add_option("--copula", copula, "Copula name (probabilistic)");
    comp->add_option("--variant", variant, "plain | s (probabilistic)");
    comp->add_option("--which", which, "smallest | greatest (extreme)");

    auto* cls = app.add_subcommand("classify", "Classify an aggregation");
    cls->add_option("--aggregation", agg_text, "Aggregation descriptor JSON")
        ->required();
    cls->add_option("--grid", grid, "Grid points per axis");
    cls->add_option("--tol", tol, "Comparison tolerance");
    cls->add_flag("--json", as_json, "Machine-readable output");

    auto* bench = app.add_subcommand("bench",
                                     "Predicted operation counts and storage");
    bench->add_option("--engine", engines, "Engine (repeatable)");
    bench->add_option("--mode", modes, "Mode (repeatable)");
    bench->add_option("--sizes", size_texts, "Shape, e.g. \"5x4->3\"");
    bench->add_flag("--csv", csv, "CSV output");

    auto* verify = app.add_subcommand("verify-examples",
                                      "Run the embedded reference systems");
    verify->add_flag("--json", as_json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*infer)
            return cmd_infer(system_file, input, engine, mode, count, as_json);
        if (*chk) return cmd_check_lia(imp_text, agg_text, grid, tol, as_json);
        if (*comp)
            return cmd_companion(op, agg_text, neg_text, a1_text, a2_text,
                                 generator, copula, variant, which);
        if (*cls) return cmd_classify(agg_text, grid, tol, as_json);
        if (*bench) return cmd_bench(engines, modes, size_texts, csv);
        if (*verify) return cmd_verify_examples(as_json);
    } catch (const lia::AdmissionError& e) {
        std::cerr << "admission error: " << e.what() << "\n";
        return kAdmissionError;
    } catch (const lia::ConstructionError& e) {
        std::cerr << "construction rejected: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const lia::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
