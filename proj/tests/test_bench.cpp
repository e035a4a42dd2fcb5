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
#include <random>

#include "doctest.h"
#include "lia/engine.hpp"
#include "lia/error.hpp"

using namespace lia;

namespace {

std::vector<long long> stage_values(const OpCount& c) {
    std::vector<long long> v;
    for (const auto& s : c.stages) v.push_back(s.second);
    return v;
}

long long joint_cost(const std::vector<std::size_t>& v) {
    long long cost = 0, acc = static_cast<long long>(v[0]);
    for (std::size_t k = 1; k < v.size(); ++k) {
        acc *= static_cast<long long>(v[k]);
        cost += acc;
    }
    return cost;
}

// Split a predicted count into combiner applications vs implication
// applications (sup/inf fold comparisons are neither).
long long agg_stage_sum(const OpCount& c) {
    long long t = 0;
    for (const auto& s : c.stages)
        if (s.first.rfind("joint", 0) == 0 || s.first.rfind("A", 0) == 0)
            t += s.second;
    return t;
}
long long imp_stage_sum(const OpCount& c) {
    long long t = 0;
    for (const auto& s : c.stages)
        if (s.first.find("implication") != std::string::npos ||
            s.first.rfind("I(", 0) == 0)
            t += s.second;
    return t;
}

std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

MISOSystem shaped_system(const std::vector<std::size_t>& sizes, std::size_t n,
                         const Aggregation& comb, const Implication& imp,
                         std::mt19937_64& rng) {
    std::uniform_int_distribution<int> tenth(1, 10);  // keep supports full
    MISOSystem sys;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        sys.input_universes.push_back(
            labels("x" + std::to_string(i + 1) + "_", sizes[i]));
    sys.output_universe = labels("y", n);
    Rule r;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        FuzzySet s;
        s.universe = sys.input_universes[i];
        for (std::size_t k = 0; k < sizes[i]; ++k)
            s.memberships.push_back(tenth(rng) / 10.0);
        r.antecedents.push_back(std::move(s));
    }
    r.consequent.universe = sys.output_universe;
    for (std::size_t k = 0; k < n; ++k)
        r.consequent.memberships.push_back(tenth(rng) / 10.0);
    sys.rules.push_back(std::move(r));
    sys.combiner = comb;
    sys.implication = imp;
    return sys;
}

SingletonInput first_labels(const MISOSystem& sys) {
    SingletonInput in;
    for (const auto& u : sys.input_universes) in.labels.push_back(u[0]);
    return in;
}

}  // namespace

TEST_SUITE_BEGIN("bench");

TEST_CASE("reference stage decompositions, (5,4) -> 3, singleton input") {
    auto bc = predict_counts("bks", "classical", {5, 4}, 3);
    CHECK(stage_values(bc) == std::vector<long long>{20, 20, 20, 19, 3});
    CHECK(bc.total() == 82);

    auto bh = predict_counts("bks", "hierarchical", {5, 4}, 3);
    CHECK(stage_values(bh) == std::vector<long long>{4, 3, 3, 5, 4, 3});
    CHECK(bh.total() == 22);

    auto sc = predict_counts("sbr", "classical", {5, 4}, 3, {}, 1);
    CHECK(stage_values(sc) == std::vector<long long>{20, 20, 1, 20, 60, 57});
    CHECK(sc.total() == 178);

    auto sh = predict_counts("sbr", "hierarchical", {5, 4}, 3, {1, 1});
    CHECK(stage_values(sh) ==
          std::vector<long long>{1, 4, 12, 9, 1, 5, 15, 12});
    CHECK(sh.total() == 59);

    auto tc = predict_counts("tip", "classical", {5, 4}, 3);
    CHECK(stage_values(tc) == std::vector<long long>{20, 20, 60, 60, 57});
    CHECK(tc.total() == 217);

    auto th = predict_counts("tip", "hierarchical", {5, 4}, 3);
    CHECK(stage_values(th) == std::vector<long long>{12, 12, 9, 15, 15, 12});
    CHECK(th.total() == 75);
}

TEST_CASE("hierarchical is strictly cheaper whenever m >= 2") {
    std::vector<std::vector<std::size_t>> shapes = {
        {2, 2}, {5, 4}, {3, 6}, {2, 2, 2}, {5, 4, 3}, {6, 6, 5}, {2, 3, 4, 5}};
    for (const auto& in : shapes)
        for (std::size_t n : {1u, 3u, 8u})
            for (const char* e : {"bks", "sbr", "tip"}) {
                long long c = predict_counts(e, "classical", in, n).total();
                long long h = predict_counts(e, "hierarchical", in, n).total();
                CHECK_MESSAGE(h < c, e << " " << in.size() << " inputs, n="
                                      << n << ": " << h << " !< " << c);
            }
}

TEST_CASE("single input collapses the two modes") {
    for (const char* e : {"bks", "sbr", "tip"}) {
        auto c = predict_counts(e, "classical", {7}, 4);
        auto h = predict_counts(e, "hierarchical", {7}, 4);
        CHECK(stage_values(c) == stage_values(h));
    }
}

TEST_CASE("support cells drive the SBR similarity stages") {
    auto full = predict_counts("sbr", "hierarchical", {5, 4}, 3, {5, 4});
    CHECK(full.stages[0].second == 7);   // 2*4 - 1 (innermost axis first)
    CHECK(full.stages[4].second == 9);   // 2*5 - 1
    auto wide = predict_counts("sbr", "classical", {5, 4}, 3, {}, 20);
    CHECK(wide.stages[2].second == 39);  // 2*20 - 1
}

TEST_CASE("engine-reported counts equal instrumented operator applications") {
    std::mt19937_64 rng(2024);
    struct OpPair {
        const char* engine;
        Aggregation comb;
        Implication imp;
    };
    std::vector<OpPair> ops = {
        {"bks", agg_min(), imp_named("kleene-dienes")},
        {"sbr", agg_greatest_averaging_conjunctor(),
         imp_from_conjunctor(agg_greatest_averaging_conjunctor(),
                             neg_standard())},
        {"tip", agg_lukasiewicz(), imp_named("lukasiewicz")},
    };
    std::vector<std::vector<std::size_t>> shapes = {
        {4}, {5, 4}, {2, 6}, {3, 3, 3}, {2, 5, 3}};
    std::uniform_int_distribution<std::size_t> usize(2, 6), vsize(2, 5);
    for (int t = 0; t < 30; ++t)
        shapes.push_back({usize(rng), usize(rng)});

    for (const auto& op : ops)
        for (const auto& shape : shapes)
            for (const char* mode : {"classical", "hierarchical"}) {
                std::size_t n = vsize(rng);
                MISOSystem sys =
                    shaped_system(shape, n, op.comb, op.imp, rng);
                auto inputs = expand(sys, first_labels(sys));
                // Warm the operator-level admission cache so the
                // instrumented run only exercises the inference itself.
                run_engine(op.engine, mode, sys, inputs);

                long long agg_calls = 0, imp_calls = 0;
                MISOSystem counted = sys;
                auto base_a = sys.combiner.fn;
                auto base_i = sys.implication.fn;
                counted.combiner.fn = [&agg_calls, base_a](double a,
                                                           double b) {
                    ++agg_calls;
                    return base_a(a, b);
                };
                counted.implication.fn = [&imp_calls, base_i](double a,
                                                              double b) {
                    ++imp_calls;
                    return base_i(a, b);
                };
                auto res = run_engine(op.engine, mode, counted, inputs);

                long long want_a = agg_stage_sum(res.report.counts);
                long long want_i = imp_stage_sum(res.report.counts);
                // The hierarchical SBR admission identity is evaluated on
                // the actual sets each run: two joint folds plus the m-1
                // applications that combine the per-axis similarities.
                if (std::string(op.engine) == "sbr" &&
                    std::string(mode) == "hierarchical" && shape.size() >= 2)
                    want_a += 2 * joint_cost(shape) +
                              static_cast<long long>(shape.size()) - 1;
                CHECK_MESSAGE(agg_calls == want_a,
                              op.engine << " " << mode << ": combiner "
                                        << agg_calls << " != " << want_a);
                CHECK_MESSAGE(imp_calls == want_i,
                              op.engine << " " << mode << ": implication "
                                        << imp_calls << " != " << want_i);
            }
}

TEST_CASE("complexity report") {
    std::vector<std::pair<std::string, std::string>> engines = {
        {"bks", "classical"}, {"bks", "hierarchical"}};
    std::vector<SizeSpec> sizes = {{{5, 4}, 3}};
    std::string table = complexity_report(engines, sizes);
    CHECK(table.find("5x4 tensor") != std::string::npos);
    CHECK(table.find("stage matrix") != std::string::npos);
    CHECK(table.find("82") != std::string::npos);
    CHECK(table.find("22") != std::string::npos);
    std::string csv = complexity_report(engines, sizes, true);
    CHECK(csv.rfind("engine,mode,shape,total,peak_storage\n", 0) == 0);
    CHECK(csv.find("bks,classical,5x4->3,82,5x4 tensor") != std::string::npos);
}

TEST_CASE("count renderers") {
    auto c = predict_counts("bks", "classical", {5, 4}, 3);
    std::string csv = to_csv(c);
    CHECK(csv.rfind("stage,count\n", 0) == 0);
    CHECK(csv.find("total,82\n") != std::string::npos);
    std::string table = to_table(c);
    CHECK(table.find("total") != std::string::npos);
    CHECK(table.find("82") != std::string::npos);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(predict_counts("bks", "classical", {}, 3), ParamError);
    CHECK_THROWS_AS(predict_counts("bks", "classical", {0, 4}, 3), ParamError);
    CHECK_THROWS_AS(predict_counts("bks", "classical", {5, 4}, 0), ParamError);
    CHECK_THROWS_AS(predict_counts("bks", "sideways", {5, 4}, 3), ParamError);
    CHECK_THROWS_AS(predict_counts("cri", "classical", {5, 4}, 3), ParamError);
    CHECK_THROWS_AS(predict_counts("sbr", "hierarchical", {5, 4}, 3, {1}),
                    ParamError);
}

TEST_SUITE_END();
