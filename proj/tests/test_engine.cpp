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
#include <cmath>
#include <random>

#include "doctest.h"
#include "lia/engine.hpp"

using namespace lia;

namespace {

std::vector<std::string> labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

MISOSystem reference_system(const Aggregation& comb, const Implication& imp) {
    MISOSystem sys;
    sys.input_universes = {labels("x1", 5), labels("x2", 4)};
    sys.output_universe = labels("y", 3);
    Rule r;
    r.antecedents.push_back({sys.input_universes[0],
                             {0.9, 0.7, 0.9, 0.6, 0.8}});
    r.antecedents.push_back({sys.input_universes[1], {1.0, 0.7, 0.8, 0.9}});
    r.consequent = {sys.output_universe, {0.2, 0.1, 0.3}};
    sys.rules.push_back(std::move(r));
    sys.combiner = comb;
    sys.implication = imp;
    return sys;
}

MISOSystem bks_system() {
    return reference_system(agg_min(), imp_named("kleene-dienes"));
}
MISOSystem sbr_system() {
    return reference_system(
        agg_greatest_averaging_conjunctor(),
        imp_from_conjunctor(agg_greatest_averaging_conjunctor(),
                            neg_standard()));
}
MISOSystem tip_system() {
    return reference_system(agg_lukasiewicz(), imp_named("lukasiewicz"));
}

void check_near(const std::vector<double>& got,
                const std::vector<double>& want, double tol = 1e-9) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i)
        CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol));
}

// Random system with memberships on the 0.1 lattice, m inputs.
MISOSystem random_system(std::mt19937_64& rng, std::size_t m,
                         const Aggregation& comb, const Implication& imp) {
    std::uniform_int_distribution<std::size_t> usize(2, 6), vsize(2, 5);
    std::uniform_int_distribution<int> tenth(0, 10);
    MISOSystem sys;
    for (std::size_t i = 0; i < m; ++i)
        sys.input_universes.push_back(
            labels("x" + std::to_string(i + 1) + "_", usize(rng)));
    sys.output_universe = labels("y", vsize(rng));
    Rule r;
    for (std::size_t i = 0; i < m; ++i) {
        FuzzySet s;
        s.universe = sys.input_universes[i];
        for (std::size_t k = 0; k < s.universe.size(); ++k)
            s.memberships.push_back(tenth(rng) / 10.0);
        r.antecedents.push_back(std::move(s));
    }
    r.consequent.universe = sys.output_universe;
    for (std::size_t k = 0; k < sys.output_universe.size(); ++k)
        r.consequent.memberships.push_back(tenth(rng) / 10.0);
    sys.rules.push_back(std::move(r));
    sys.combiner = comb;
    sys.implication = imp;
    return sys;
}

SingletonInput random_input(std::mt19937_64& rng, const MISOSystem& sys) {
    SingletonInput in;
    for (const auto& u : sys.input_universes) {
        std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
        in.labels.push_back(u[pick(rng)]);
    }
    return in;
}

}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("joint antecedent tensors") {
    MISOSystem sys = bks_system();
    std::vector<double> joint =
        combine_antecedents(agg_min(), sys.rules[0].antecedents);
    REQUIRE(joint.size() == 20);
    check_near({joint[0], joint[1], joint[2], joint[3]},
               {0.9, 0.7, 0.8, 0.9}, 1e-12);
    std::vector<double> tl =
        combine_antecedents(agg_lukasiewicz(), sys.rules[0].antecedents);
    // row 4 (x14, membership 0.6)
    check_near({tl[12], tl[13], tl[14], tl[15]}, {0.6, 0.3, 0.4, 0.5},
               1e-12);
}

TEST_CASE("singleton pair gives a one-hot joint tensor for t-norms") {
    MISOSystem sys = bks_system();
    auto inputs = expand(sys, SingletonInput{{"x12", "x23"}});
    std::vector<double> joint = combine_antecedents(agg_min(), inputs);
    std::size_t ones = 0;
    for (double v : joint) {
        CHECK((v == 0.0 || v == 1.0));
        if (v == 1.0) ++ones;
    }
    CHECK(ones == 1);
    CHECK(joint[1 * 4 + 2] == 1.0);
}

TEST_CASE("similarity measures") {
    SimilarityMeasure restricted;  // default kind
    SimilarityMeasure plain{"sup-difference", 1.0};
    FuzzySet d{labels("x2", 4), {1.0, 0.7, 0.8, 0.9}};
    FuzzySet dp{labels("x2", 4), {0.0, 0.0, 1.0, 0.0}};
    CHECK(similarity(restricted, dp, d) == doctest::Approx(0.8));
    CHECK(similarity(plain, dp, d) == doctest::Approx(0.0));
    CHECK(similarity(restricted, d, d) == 1.0);
    CHECK(similarity(plain, d, d) == 1.0);
    FuzzySet empty{labels("x2", 4), {0.0, 0.0, 0.0, 0.0}};
    CHECK_THROWS_AS(similarity(restricted, empty, d), DomainError);
    SimilarityMeasure fixed{"custom-tabulated", 0.65};
    CHECK(similarity(fixed, dp, d) == 0.65);
}

TEST_CASE("reference BKS system, classical and hierarchical") {
    MISOSystem sys = bks_system();
    SingletonInput in{{"x12", "x23"}};
    InferenceResult c = bks_classical(sys, in);
    check_near(c.output.memberships, {0.3, 0.3, 0.3});
    CHECK(c.report.counts.total() == 82);
    check_near(c.report.intermediates.at("s"), {0.7}, 1e-12);

    InferenceResult h = bks_hierarchical(sys, in);
    check_near(h.output.memberships, {0.3, 0.3, 0.3});
    // honest per-axis count: 4+3+3 for the size-4 axis, 5+4+3 for size 5
    CHECK(h.report.counts.total() == 22);
    check_near(h.report.intermediates.at("s2"), {0.8}, 1e-12);
    check_near(h.report.intermediates.at("s1"), {0.7}, 1e-12);

    InferenceResult c2 = bks_classical(sys, SingletonInput{{"x11", "x21"}});
    check_near(c2.output.memberships, {0.2, 0.1, 0.3});
}

TEST_CASE("reference SBR system, classical and hierarchical") {
    MISOSystem sys = sbr_system();
    SingletonInput in{{"x12", "x23"}};
    InferenceResult c = sbr_classical(sys, in);
    check_near(c.output.memberships, {0.2, 0.1, 0.2});
    check_near(c.report.intermediates.at("S"), {0.8});

    InferenceResult h = sbr_hierarchical(sys, in);
    check_near(h.output.memberships, {0.2, 0.1, 0.2});
    check_near(h.report.intermediates.at("S2"), {0.8});
    check_near(h.report.intermediates.at("S1"), {0.7});
}

TEST_CASE("SBR with an exact match modifies by A(1, .)") {
    MISOSystem sys = sbr_system();
    // feed the antecedents themselves as inputs
    InferenceResult c = sbr_classical(sys, sys.rules[0].antecedents);
    check_near(c.report.intermediates.at("S"), {1.0}, 1e-12);
}

TEST_CASE("reference TIP system, classical and hierarchical") {
    MISOSystem sys = tip_system();
    SingletonInput in{{"x12", "x23"}};
    InferenceResult c = tip_classical(sys, in);
    check_near(c.output.memberships, {0.7, 0.6, 0.8});

    InferenceResult h = tip_hierarchical(sys, in);
    check_near(h.output.memberships, {0.7, 0.6, 0.8});
    check_near(h.report.intermediates.at("stage2"), {0.4, 0.3, 0.5});
}

TEST_CASE("TIP intermediate matrix values") {
    MISOSystem sys = tip_system();
    std::vector<double> tl =
        combine_antecedents(agg_lukasiewicz(), sys.rules[0].antecedents);
    const auto& I = sys.implication.fn;
    // I(T_L(D1,D2), B(y3)) along row 4 (B(y3) = 0.3)
    check_near({I(tl[12], 0.3), I(tl[13], 0.3), I(tl[14], 0.3),
                I(tl[15], 0.3)},
               {0.7, 1.0, 0.9, 0.8}, 1e-12);
}

TEST_CASE("TIP output dominates the consequent at a normal exact match") {
    MISOSystem sys = tip_system();
    // D' = D with a joint-normal antecedent: use crisp antecedents
    sys.rules[0].antecedents[0].memberships = {1.0, 0.6, 0.0, 0.0, 0.0};
    sys.rules[0].antecedents[1].memberships = {1.0, 0.5, 0.0, 0.0};
    InferenceResult c = tip_classical(sys, sys.rules[0].antecedents);
    for (std::size_t y = 0; y < 3; ++y)
        CHECK(c.output.memberships[y] >=
              sys.rules[0].consequent.memberships[y] - 1e-12);
}

TEST_CASE("inf-composition double loop agrees with the engine (SISO)") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> tenth(0, 10);
    const Implication I = imp_named("kleene-dienes");
    const Aggregation A = agg_min();
    for (int t = 0; t < 50; ++t) {
        MISOSystem sys;
        sys.input_universes = {labels("x", 5)};
        sys.output_universe = labels("y", 4);
        Rule r;
        FuzzySet d{sys.input_universes[0], {}};
        for (int k = 0; k < 5; ++k) d.memberships.push_back(tenth(rng) / 10.0);
        r.antecedents.push_back(d);
        r.consequent.universe = sys.output_universe;
        for (int k = 0; k < 4; ++k)
            r.consequent.memberships.push_back(tenth(rng) / 10.0);
        sys.rules.push_back(r);
        sys.combiner = A;
        sys.implication = I;
        std::uniform_int_distribution<std::size_t> pick(0, 4);
        SingletonInput in{{sys.input_universes[0][pick(rng)]}};
        auto dp = expand(sys, in)[0];

        InferenceResult res = bks_classical(sys, in);
        for (std::size_t y = 0; y < 4; ++y) {
            double inf = 1.0;
            for (std::size_t x = 0; x < 5; ++x)
                inf = std::min(
                    inf, I.fn(dp.memberships[x],
                              I.fn(d.memberships[x],
                                   sys.rules[0].consequent.memberships[y])));
            CHECK(res.output.memberships[y] == doctest::Approx(inf)
                                                   .epsilon(1e-12));
        }
    }
}

TEST_CASE("hierarchical equals classical on randomized systems") {
    std::mt19937_64 rng(12345);
    struct Case {
        const char* engine;
        MISOSystem (*make)(std::mt19937_64&, std::size_t);
    };
    auto run = [&](const char* engine, const Aggregation& comb,
                   const Implication& imp) {
        for (int t = 0; t < 200; ++t) {
            std::size_t m = 2 + (t % 2);
            MISOSystem sys = random_system(rng, m, comb, imp);
            SingletonInput in = random_input(rng, sys);
            auto inputs = expand(sys, in);
            InferenceResult c = run_engine(engine, "classical", sys, inputs);
            InferenceResult h = run_engine(engine, "hierarchical", sys,
                                           inputs);
            for (std::size_t y = 0; y < c.output.memberships.size(); ++y)
                CHECK(std::abs(c.output.memberships[y] -
                               h.output.memberships[y]) <= 1e-12);
        }
    };
    run("bks", agg_min(), imp_named("kleene-dienes"));
    run("sbr", agg_greatest_averaging_conjunctor(),
        imp_from_conjunctor(agg_greatest_averaging_conjunctor(),
                            neg_standard()));
    run("tip", agg_lukasiewicz(), imp_named("lukasiewicz"));
}

TEST_CASE("admission errors name the violated hypothesis") {
    // from-conjunctor implication fails NP (I(1, y) = 0), so hierarchical
    // BKS must reject the SBR operator pairing.
    MISOSystem bad = sbr_system();
    CHECK_THROWS_AS(bks_hierarchical(bad, SingletonInput{{"x12", "x23"}}),
                    AdmissionError);
    // kleene-dienes fails OP, so TIP rejects the BKS pairing.
    MISOSystem kd = bks_system();
    CHECK_THROWS_AS(tip_classical(kd, SingletonInput{{"x12", "x23"}}),
                    AdmissionError);
    try {
        tip_classical(kd, SingletonInput{{"x12", "x23"}});
    } catch (const AdmissionError& e) {
        CHECK(std::string(e.what()).find("OP") != std::string::npos);
    }
}

TEST_CASE("admission verdicts are deterministic") {
    MISOSystem sys = tip_system();
    SingletonInput in{{"x12", "x23"}};
    auto a = tip_hierarchical(sys, in).report.admission;
    auto b = tip_hierarchical(sys, in).report.admission;
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].first == b[i].first);
        CHECK(a[i].second == b[i].second);
    }
}

TEST_CASE("multi-rule systems combine by pointwise min") {
    MISOSystem sys = bks_system();
    Rule second = sys.rules[0];
    second.antecedents[0].memberships = {0.2, 0.9, 0.4, 0.5, 0.6};
    second.consequent.memberships = {0.9, 0.05, 0.5};
    sys.rules.push_back(second);
    SingletonInput in{{"x12", "x23"}};

    MISOSystem only1 = sys, only2 = sys;
    only1.rules.pop_back();
    only2.rules.erase(only2.rules.begin());
    auto full = bks_classical(sys, in);
    auto r1 = bks_classical(only1, in);
    auto r2 = bks_classical(only2, in);
    for (std::size_t y = 0; y < 3; ++y)
        CHECK(full.output.memberships[y] ==
              doctest::Approx(std::min(r1.output.memberships[y],
                                       r2.output.memberships[y]))
                  .epsilon(1e-12));
    CHECK(full.report.counts.total() ==
          r1.report.counts.total() + r2.report.counts.total() + 3);
}

TEST_CASE("input validation") {
    MISOSystem sys = bks_system();
    CHECK_THROWS_AS(bks_classical(sys, SingletonInput{{"x12"}}), DomainError);
    CHECK_THROWS_AS(bks_classical(sys, SingletonInput{{"x12", "nope"}}),
                    DomainError);
    sys.rules[0].consequent.memberships = {0.2, 1.1, 0.3};
    CHECK_THROWS_AS(bks_classical(sys, SingletonInput{{"x12", "x23"}}),
                    DomainError);
}

TEST_CASE("outputs stay in the unit interval") {
    std::mt19937_64 rng(777);
    for (int t = 0; t < 20; ++t) {
        MISOSystem sys = random_system(rng, 2, agg_min(),
                                       imp_named("kleene-dienes"));
        auto res = bks_classical(sys, expand(sys, random_input(rng, sys)));
        CHECK(res.output.universe == sys.output_universe);
        for (double v : res.output.memberships) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_SUITE_END();
