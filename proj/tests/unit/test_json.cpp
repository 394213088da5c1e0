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

#include "brieskorn/json_io.hpp"
#include "brieskorn/report.hpp"
#include "doctest.h"

using namespace brieskorn;

TEST_CASE("Lambda combinations") {
    const LambdaCombo d = alexander_divisor({3, 4, 4});
    const Json j = to_json(d);
    CHECK(j.dump() == "[[12,2],[4,-2],[3,1],[1,-1]]");
    CHECK(lambda_from_json(j) == d);
    CHECK(to_json(LambdaCombo::zero()).dump() == "[]");
    CHECK_THROWS_AS(lambda_from_json(Json::parse("[[0,1]]")), std::invalid_argument);
    CHECK_THROWS_AS(lambda_from_json(Json::parse("[[2]]")), std::invalid_argument);
}

TEST_CASE("cyclotomic factorizations") {
    const CycloFactorization f = to_cyclotomic(alexander_divisor({3, 4, 4}));
    CHECK(to_json(f).dump() == "[[12,2],[6,2],[3,3]]");
    CHECK(cyclo_from_json(to_json(f)) == f);
}

TEST_CASE("matrices") {
    RatMatrix a{{1, -1}, {0, 2}};
    a(1, 0) = mpq_class(3, 4);
    const Json j = to_json(a);
    CHECK(j.dump() == R"({"rows":2,"cols":2,"data":[[1,-1],["3/4",2]]})");
    CHECK(matrix_from_json(j) == a);
    CHECK(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"data":[["6/8","-2"]]})")) ==
          RatMatrix::from_rows({{mpq_class(3, 4), mpq_class(-2)}}));
    CHECK(matrix_from_json(Json::parse(R"({"rows":0,"cols":0,"data":[]})")).rows() == 0);

    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"data":[[1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[["1/0"]]})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[["x"]]})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"data":[[1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[[1.5]]})")), std::invalid_argument);

    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 30);
    RatMatrix b(1, 1);
    b(0, 0) = mpq_class(big);
    CHECK(to_json(b)["data"][0][0] == "1000000000000000000000000000000");
    CHECK(matrix_from_json(to_json(b)) == b);
}

TEST_CASE("presentations") {
    const SeifertPresentation p = brieskorn_presentation({2, 4});
    const Json j = to_json(p);
    CHECK(j["parity"] == -1);
    const SeifertPresentation q = presentation_from_json(j);
    CHECK(q.L == p.L);
    CHECK(q.parity == p.parity);
    CHECK(presentation_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[[1]]})")).parity == 1);
    CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[[1]],"parity":0})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"rows":1,"cols":2,"data":[[1,2]]})")),
                    std::invalid_argument);
}

TEST_CASE("jump reports and certificates") {
    CHECK(to_json(jump_report({2, 3})).dump() == "[[1,-1],[2,0],[3,0],[4,0],[5,1]]");
    const Json c = to_json(independence_certificate({{2, 3, 5}, {2, 3, 7}}));
    CHECK(c["M"] == 42);
    CHECK(c["valid"] == true);
    CHECK(c["chain"][0]["exponents"].dump() == "[2,3,7]");
    CHECK(c["chain"][0]["at"] == "1/42");
    CHECK(c["chain"][0]["others"][0]["jump"] == 0);
}

TEST_CASE("exponent lists") {
    CHECK(exponents_from_json(Json::parse("[4,3,4]")) == ExponentMultiset{3, 4, 4});
    CHECK_THROWS_AS(exponents_from_json(Json::parse("[1,3]")), std::invalid_argument);
    CHECK_THROWS_AS(exponents_from_json(Json::parse("[]")), std::invalid_argument);
}

TEST_CASE("analysis reports") {
    const AnalysisReport r = analyze({3, 4, 4});
    long sum = 0;
    for (const auto& [m, s] : r.equivariant) sum += s;
    CHECK(sum == r.signature);
    CHECK(r.signature == 14);
    CHECK(r.cyclotomic.to_string() == "phi12^2 phi6^2 phi3^3");
    CHECK(r.sphericity.n2_caveat);
    CHECK(r.alexander_at_one == 27);
    const Json j = to_json(r);
    CHECK(j["equivariant"].dump() == "[[12,8],[6,0],[3,6]]");
    CHECK(to_text(r).find("equivariant: 12:8 6:0 3:6") != std::string::npos);

    const AnalysisReport one = analyze({2});
    CHECK(one.milnor_number == 1);
    CHECK(one.divisor.to_string() == "L2 - 1");
    CHECK(analyze({4, 4}).alexander_at_one == 0);
    CHECK_THROWS_AS(analyze({2, 3}, 3), std::invalid_argument);

    const CompareReport c = compare({3, 4, 4, 6, 9}, {2, 2, 3, 3, 12});
    CHECK(c.fox_milnor);
    CHECK(c.mod2_congruent);
    CHECK(c.excluded_by_signature);
    CHECK_FALSE(c.excluded_by_fox_milnor);
    CHECK(to_json(c)["second"]["signature"] == 30);
    const CompareReport same = compare({2, 3}, {2, 3});
    CHECK(same.identical);
    CHECK_FALSE(same.excluded_by_signature);
    CHECK(to_text(same).find("all obstructions pass") != std::string::npos);
}
