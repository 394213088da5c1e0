/*
   Copyright 2026 The brieskorn-knots Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <set>

#include "brieskorn/exponents.hpp"
#include "brieskorn/groupring.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace brieskorn;

using Set = std::vector<unsigned long>;

TEST_CASE("parsing exponent lists") {
    CHECK(ExponentMultiset::parse("3,4,4,6,9").to_string() == "3,4,4,6,9");
    CHECK(ExponentMultiset::parse(" 9, 3 ,4").to_string() == "3,4,9");
    CHECK_THROWS_WITH_AS(ExponentMultiset::parse("3,x,4"), doctest::Contains("'x'"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(ExponentMultiset::parse("3,1"), doctest::Contains("'1'"), std::invalid_argument);
    CHECK_THROWS_AS(ExponentMultiset::parse("3,,4"), std::invalid_argument);
    CHECK_THROWS_AS(ExponentMultiset::parse(""), std::invalid_argument);
    CHECK(parse_family("2,3,5;2,3,7").size() == 2);
}

TEST_CASE("essential exponent sets") {
    CHECK(essential_exponent_set({3, 4, 4, 6, 9}) == Set{3});
    CHECK(essential_exponent_set({2, 2, 3, 3, 12}) == Set{3});
    CHECK(essential_exponent_set({3, 4, 4, 6, 8}) == Set{3, 8});
    CHECK(essential_exponent_set({4, 4}).empty());
    CHECK(essential_exponent_set({3, 9, 27}) == Set{3});
    CHECK(essential_exponent_set({5, 15, 2}) == Set{2, 5});
    CHECK(essential_exponent_set({6, 6, 6}) == Set{6});
    CHECK(essential_exponent_set({9, 6, 27}) == Set{6, 9});
}

TEST_CASE("essential set is a subset of the deduplicated input") {
    for (const auto& e : oracle::all_multisets(5, 2, 9)) {
        const auto s = essential_exponent_set(e);
        REQUIRE(std::is_sorted(s.begin(), s.end()));
        for (unsigned long a : s) REQUIRE(std::find(e.begin(), e.end(), a) != e.end());
        REQUIRE(std::adjacent_find(s.begin(), s.end()) == s.end());
    }
}

TEST_CASE("Fox-Milnor verdicts") {
    CHECK(fox_milnor({3, 4, 4, 6, 9}, {2, 2, 3, 3, 12}));
    CHECK_FALSE(fox_milnor({3, 4, 4, 6, 9}, {3, 4, 4, 6, 8}));
    CHECK(fox_milnor({2, 3, 5}, {2, 3, 5}));
}

TEST_CASE("essential-set equality matches mod 2 divisor congruence") {
    // the empty multiset stands for the unit divisor
    auto pool = oracle::all_multisets(4, 2, 9);
    std::vector<LambdaCombo> divisors;
    std::vector<Set> ess;
    for (const auto& e : pool) {
        divisors.push_back(alexander_divisor(e));
        ess.push_back(essential_exponent_set(e));
    }
    long agree = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i; j < pool.size(); ++j) {
            REQUIRE((ess[i] == ess[j]) == congruent_mod2(divisors[i], divisors[j]));
            ++agree;
        }
    CHECK(agree > 10000);

    // the empty product is 1 and the essential set of an all-paired-even multiset is empty
    for (std::size_t i = 0; i < pool.size(); ++i) {
        LambdaCombo reduced = LambdaCombo::unit();
        for (unsigned long a : ess[i]) reduced = reduced * (LambdaCombo::lambda(a) - LambdaCombo::unit());
        REQUIRE(congruent_mod2(divisors[i], reduced));
    }
}

TEST_CASE("distinct non-dividing exponents are determined by the verdict") {
    auto pool = oracle::all_multisets(4, 2, 9);
    for (const auto& f : pool) {
        bool special = std::adjacent_find(f.begin(), f.end()) == f.end();
        for (unsigned long a : f)
            for (unsigned long b : f)
                if (a != b && b % 2 == 1 && a % b == 0) special = false;
        if (!special) continue;
        for (const auto& g : pool) {
            if (g.size() == f.size() && fox_milnor(f, g)) REQUIRE(f == g);
        }
    }
}

TEST_CASE("graph construction") {
    const auto g = brieskorn_graph({3, 4, 4, 5});
    CHECK(g.vertices == Set{3, 4, 4, 5});
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0] == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(g.isolated_count() == 2);

    const auto h = brieskorn_graph({2, 2, 2});
    REQUIRE(h.components.size() == 1);
    CHECK(h.components[0].odd_two_component);
    CHECK_FALSE(h.components[0].isolated);

    const auto k = brieskorn_graph({2, 3, 5});
    CHECK(k.edges.empty());
    CHECK(k.isolated_count() == 3);

    CHECK(brieskorn_graph({2, 2, 4}).components[0].odd_two_component);
    CHECK_FALSE(brieskorn_graph({2, 4, 4}).components[0].odd_two_component);
    CHECK_FALSE(brieskorn_graph({2, 2}).components[0].odd_two_component);
    CHECK(brieskorn_graph({2, 6, 10}).components[0].odd_two_component);
}

TEST_CASE("sphericity") {
    CHECK(is_spherical({3, 4, 4, 5}, 3).spherical);
    const auto v = is_spherical({2, 2, 2}, 2);
    CHECK(v.n2_caveat);
    CHECK_FALSE(v.spherical);
    CHECK(is_spherical({2, 2, 2, 3}, 3).spherical);
    CHECK_FALSE(is_spherical({2, 3, 3}, 2).spherical);
    CHECK_THROWS_AS(is_spherical({2, 3}, 3), std::invalid_argument);
}

TEST_CASE("sphericity agrees with the value of the Alexander polynomial at 1") {
    long checked = 0;
    for (const auto& e : oracle::all_multisets(5, 2, 9)) {
        if (e.n() == 2) continue;
        const auto d = alexander_divisor(e);
        const bool unit = to_cyclotomic(d).multiplicity(1) == 0 && abs(evaluate_at_one(d)) == 1;
        INFO(e.to_string());
        REQUIRE(is_spherical(e, e.n()).spherical == unit);
        ++checked;
    }
    CHECK(checked > 1000);
}

TEST_CASE("good families") {
    CHECK(is_good_family({{2, 3, 5}, {2, 3, 7}}));
    CHECK_FALSE(is_good_family({{2, 6, 7}}));
    CHECK_FALSE(is_good_family({{2, 15, 7}, {3, 10, 7}}));
    CHECK(is_good_family({}));
    CHECK_THROWS_AS(is_good_family({{2, 3}, {2, 3, 5}}), std::invalid_argument);
}
