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

#include "doctest.h"
#include "lia/aggregation.hpp"

using namespace lia;

namespace {

void check_equal_on_grid(const Aggregation& a, const Aggregation& b,
                         double tol = 1e-12) {
    for (int i = 0; i <= 50; ++i)
        for (int j = 0; j <= 50; ++j) {
            double x = i / 50.0, y = j / 50.0;
            CHECK(a.fn(x, y) == doctest::Approx(b.fn(x, y)).epsilon(tol));
        }
}

}  // namespace

TEST_SUITE_BEGIN("aggregation");

TEST_CASE("t-norm catalog values") {
    CHECK(agg_min().fn(0.7, 0.8) == 0.7);
    CHECK(agg_product().fn(0.5, 0.4) == doctest::Approx(0.2));
    CHECK(agg_lukasiewicz().fn(0.7, 0.8) == doctest::Approx(0.5));
    CHECK(agg_lukasiewicz().fn(0.3, 0.4) == 0.0);
    CHECK(agg_drastic().fn(0.3, 0.5) == 0.0);
    CHECK(agg_drastic().fn(0.3, 1.0) == 0.3);
    CHECK(agg_drastic().fn(1.0, 0.5) == 0.5);
}

TEST_CASE("t-conorm catalog values") {
    CHECK(agg_max().fn(0.3, 0.8) == 0.8);
    CHECK(agg_probabilistic_sum().fn(0.5, 0.5) == doctest::Approx(0.75));
    CHECK(agg_bounded_sum().fn(0.7, 0.8) == 1.0);
    CHECK(agg_bounded_sum().fn(0.2, 0.3) == doctest::Approx(0.5));
}

TEST_CASE("non-associative and extreme conjunctors") {
    Aggregation lo = agg_smallest_conjunctor();
    CHECK(lo.fn(1.0, 1.0) == 1.0);
    CHECK(lo.fn(1.0, 0.999) == 0.0);
    Aggregation hi = agg_greatest_averaging_conjunctor();
    CHECK(hi.fn(0.3, 0.0) == 0.0);
    CHECK(hi.fn(0.0, 0.7) == 0.0);
    CHECK(hi.fn(0.3, 0.5) == 0.5);
    Aggregation gm = agg_gated_mean();
    CHECK(gm.fn(0.9, 0.4) == 0.0);  // 0.36 < 0.5
    CHECK(gm.fn(0.8, 0.7) == doctest::Approx(0.75));
    CHECK(gm.fn(1.0, 1.0) == 1.0);
}

TEST_CASE("representable aggregation with the identity generator") {
    // g(x) + g(y) - g(1), clamped below at 0: the nilpotent catalog t-norm.
    check_equal_on_grid(agg_representable(make_generator("identity")),
                        agg_lukasiewicz());
}

TEST_CASE("weighted quasi-arithmetic mean") {
    Aggregation m = agg_wqam(make_generator("log"), 0.5);
    // f = ln with f(0) = -inf gives the geometric mean.
    CHECK(m.fn(0.25, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.fn(0.0, 0.9) == 0.0);
    CHECK(m.fn(1.0, 1.0) == 1.0);
    CHECK(m.fn(0.4, 0.4) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("uninorm with conjunctive corners") {
    Aggregation u = agg_uninorm_3pi();
    CHECK(u.fn(0.5, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(u.fn(0.0, 1.0) == 0.0);
    CHECK(u.fn(1.0, 0.0) == 0.0);
    CHECK(u.fn(0.8, 0.8) ==
          doctest::Approx(0.64 / (0.64 + 0.04)).epsilon(1e-12));
    // neutral element 1/2
    for (double x : {0.0, 0.3, 0.7, 1.0})
        CHECK(u.fn(x, 0.5) == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("copula catalog") {
    Aggregation c = agg_copula("product");
    CHECK(c.declared_copula);
    CHECK(c.fn(0.5, 0.4) == doctest::Approx(0.2));
    CHECK(agg_copula("min").fn(0.5, 0.4) == 0.4);
    CHECK(agg_copula("lukasiewicz").fn(0.7, 0.8) == doctest::Approx(0.5));
    CHECK_THROWS_AS(agg_copula("frank"), ParamError);
    CHECK_FALSE(agg_product().declared_copula);
}

TEST_CASE("tabulated aggregation interpolates bilinearly") {
    Aggregation t = agg_tabulated(
        {0.0, 0.5, 1.0},
        {{0.0, 0.0, 0.0}, {0.0, 0.25, 0.5}, {0.0, 0.5, 1.0}});
    CHECK(t.fn(0.5, 0.5) == doctest::Approx(0.25));
    CHECK(t.fn(0.25, 0.25) == doctest::Approx(0.0625));
    CHECK(t.fn(1.0, 1.0) == 1.0);
    CHECK_THROWS_AS(agg_tabulated({0.0, 1.0}, {{0.0, 0.0}}), ParamError);
}

TEST_CASE("n-dual of max under the standard negation is min") {
    check_equal_on_grid(n_dual(agg_max(), neg_standard()), agg_min());
}

TEST_CASE("n-dual of bounded-sum under the standard negation") {
    check_equal_on_grid(n_dual(agg_bounded_sum(), neg_standard()),
                        agg_lukasiewicz(), 1e-9);
}

TEST_CASE("n-dual requires a strict negation") {
    CHECK_THROWS_AS(n_dual(agg_max(), neg_greatest()), ConstructionError);
}

TEST_CASE("conjugation by a power automorphism") {
    // phi(x) = x^2: the product is self-conjugate.
    check_equal_on_grid(conjugate(agg_product(),
                                  make_automorphism("power", 2.0)),
                        agg_product(), 1e-9);
    Aggregation c = conjugate(agg_lukasiewicz(),
                              make_automorphism("power", 2.0));
    // phi^{-1}(max(x^2 + y^2 - 1, 0))
    CHECK(c.fn(0.9, 0.8) ==
          doctest::Approx(std::sqrt(0.81 + 0.64 - 1.0)).epsilon(1e-12));
    CHECK(c.fn(0.5, 0.5) == 0.0);
}

TEST_CASE("classification of the catalog t-norms") {
    ClassificationRecord c = classify(agg_min(), 21);
    CHECK(c.is_conjunctor);
    CHECK_FALSE(c.is_disjunctor);
    CHECK(c.is_commutative);
    CHECK(c.is_associative);
    REQUIRE(c.neutral.has_value());
    CHECK(*c.neutral == doctest::Approx(1.0));
    CHECK_FALSE(c.has_zero_divisors);

    ClassificationRecord l = classify(agg_lukasiewicz(), 21);
    CHECK(l.is_conjunctor);
    CHECK(l.has_zero_divisors);

    ClassificationRecord m = classify(agg_max(), 21);
    CHECK(m.is_disjunctor);
    REQUIRE(m.neutral.has_value());
    CHECK(*m.neutral == doctest::Approx(0.0));
    CHECK_FALSE(m.has_one_divisors);
    REQUIRE(m.satisfies_lem_with.has_value());
    CHECK(*m.satisfies_lem_with == "greatest");

    ClassificationRecord b = classify(agg_bounded_sum(), 21);
    CHECK(b.is_disjunctor);
    CHECK(b.has_one_divisors);
}

TEST_CASE("classification flags non-associative members") {
    CHECK_FALSE(classify(agg_gated_mean(), 21).is_associative);
    CHECK_FALSE(classify(agg_wqam(make_generator("log"), 0.5), 21)
                    .is_associative);
}

TEST_CASE("declared copulas pass the 2-increasing sweep") {
    for (const char* name : {"product", "min", "lukasiewicz"}) {
        ClassificationRecord c = classify(agg_copula(name), 21);
        CHECK(c.declared_copula);
        CHECK(c.copula_2increasing);
    }
}

TEST_SUITE_END();
