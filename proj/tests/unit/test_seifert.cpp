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

#include <random>

#include "brieskorn/seifert.hpp"
#include "doctest.h"
#include "linalg_oracles.hpp"
#include "oracles.hpp"

using namespace brieskorn;

namespace {

const RatMatrix J{{0, 1}, {-1, 0}};

bool is_rational_square(const mpq_class& q) {
    if (q <= 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

RatMatrix four_block(const RatMatrix& b, const RatMatrix& c) {
    RatMatrix a(4, 4);
    set_block(a, 0, 0, b);
    set_block(a, 0, 2, c);
    set_block(a, 2, 0, -c.transpose());
    return a;
}

LambdaCombo divisor_of(const IntPoly& p) {
    const auto f = factor_cyclotomic(p);
    REQUIRE(f.has_value());
    return from_cyclotomic(*f);
}

}  // namespace

TEST_CASE("blocks") {
    CHECK(brieskorn_block(4) == RatMatrix{{1, -1, 0}, {0, 1, -1}, {0, 0, 1}});
    CHECK(brieskorn_block(2) == RatMatrix{{1}});
    CHECK(inverse(brieskorn_block(4)) == RatMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
    CHECK_THROWS_AS(brieskorn_block(1), std::invalid_argument);
}

TEST_CASE("Seifert matrices") {
    const RatMatrix l = seifert_matrix({3, 4, 4});
    CHECK(l.rows() == 18);
    CHECK(seifert_matrix({2, 2, 2}) == RatMatrix{{1}});
    CHECK(seifert_matrix({4, 3}) == tensor(brieskorn_block(3), brieskorn_block(4)));
    for (const auto& e : oracle::all_multisets(3, 2, 7)) REQUIRE(abs(determinant(seifert_matrix(e))) == 1);
}

TEST_CASE("intersection forms") {
    CHECK(intersection_form({brieskorn_block(4), 1}) == RatMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(intersection_form({brieskorn_block(3), -1}) == RatMatrix{{0, -1}, {1, 0}});
    CHECK(intersection_form({J, 1}).is_zero());
}

TEST_CASE("monodromy of M4") {
    const Monodromy m = monodromy({brieskorn_block(4), 1});
    const RatMatrix h4{{0, 0, -1}, {1, 0, -1}, {0, 1, -1}};
    const RatMatrix t4{{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    CHECK(m.H == h4);
    CHECK(m.T == t4);
    CHECK(m.H == m.T.transpose());
    const RatMatrix m4 = brieskorn_block(4);
    CHECK(m.T == -(m4 * inverse(m4).transpose()));
    CHECK(m.H.transpose() * m4 * m.H == m4);
    CHECK(monodromy({brieskorn_block(3), 1}).H == RatMatrix{{0, -1}, {1, -1}});
    CHECK_THROWS_AS(monodromy({RatMatrix{{1, 1}, {1, 1}}, 1}), std::domain_error);
}

TEST_CASE("monodromy preserves the Seifert form") {
    for (const auto& e : oracle::all_multisets(3, 2, 6)) {
        const auto p = brieskorn_presentation(e);
        const Monodromy m = monodromy(p);
        REQUIRE(m.H.transpose() * p.L * m.H == p.L);
        REQUIRE(m.T == m.H.transpose());
    }
}

TEST_CASE("characteristic polynomial of the monodromy is the Alexander polynomial") {
    for (const auto& e : oracle::all_multisets(5, 2, 9)) {
        if (e.milnor_number() > 60) continue;
        const auto p = brieskorn_presentation(e);
        IntPoly expect = IntPoly::constant(1);
        for (const auto& [m, k] : oracle::cyclotomic_multiplicities(oracle::brieskorn_roots(e)))
            expect *= cyclotomic_polynomial(static_cast<unsigned long>(m)).pow(static_cast<unsigned>(k));
        INFO(e.to_string());
        REQUIRE(char_poly(monodromy(p).H) == expect);
    }
}

TEST_CASE("det(tL + parity L^T) is the Alexander polynomial up to sign") {
    for (const auto& e : oracle::all_multisets(3, 2, 7)) {
        const auto p = brieskorn_presentation(e);
        const IntPoly delta = to_polynomial(to_cyclotomic(alexander_divisor(e)));
        for (long t : {2, 3, 5}) {
            RatMatrix m = p.L * mpq_class(t);
            m += p.parity > 0 ? p.L.transpose() : RatMatrix(-p.L.transpose());
            REQUIRE(abs(determinant(m)) == abs(delta.evaluate(mpz_class(t))));
        }
    }
}

TEST_CASE("suspension") {
    const SeifertPresentation a2{J, -1};
    CHECK(suspend(a2, 2).L == J);
    CHECK(suspend(a2, 2).parity == 1);
    CHECK(intersection_form(suspend(a2, 2)).is_zero());
    CHECK_THROWS_AS(suspend(a2, 1), std::invalid_argument);

    const RatMatrix m3 = brieskorn_block(3);
    const auto s32 = suspend(suspend(a2, 3), 2);
    CHECK(s32.parity == -1);
    RatMatrix expect(4, 4);
    set_block(expect, 0, 2, m3 + m3.transpose());
    set_block(expect, 2, 0, -(m3 + m3.transpose()));
    CHECK(intersection_form(s32) == expect);
    CHECK(abs(determinant(intersection_form(s32))) == 9);

    // any B with det(B + B^T) = +-1 gives the same determinant
    for (const RatMatrix& b : {RatMatrix{{0, 1}, {0, 0}}, J, RatMatrix{{1, 3}, {-2, 5}}}) {
        const SeifertPresentation a1{four_block(b, J), -1};
        CHECK(abs(determinant(intersection_form(suspend(suspend(a1, 3), 2)))) == 81);
        RatMatrix s2(4, 4);
        set_block(s2, 0, 0, b + b.transpose());
        CHECK(intersection_form(suspend(a1, 2)) == s2);
    }
    CHECK(determinant(m3 - m3.transpose()) == 1);
}

TEST_CASE("suspension multiplies the divisor by (L_d - 1)") {
    for (const auto& e : oracle::all_multisets(2, 2, 6)) {
        for (unsigned long d = 2; d <= 5; ++d) {
            const auto p = brieskorn_presentation(e);
            const LambdaCombo before = divisor_of(char_poly(monodromy(p).H));
            const LambdaCombo after = divisor_of(char_poly(monodromy(suspend(p, d)).H));
            REQUIRE(after == before * (LambdaCombo::lambda(d) - LambdaCombo::unit()));
            REQUIRE(after == alexander_divisor(e.with(d)));
        }
    }
}

TEST_CASE("primary decomposition of M4") {
    const auto comps = primary_decomposition({brieskorn_block(4), 1});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].m == 2);
    CHECK(comps[0].form.rows() == 1);
    CHECK(comps[0].form(0, 0) > 0);
    CHECK(primitive_integer(comps[0].basis.column(0)) == RatVector{1, 0, 1});
    CHECK(comps[1].m == 4);
    CHECK(comps[1].form.rows() == 2);
    const RatMatrix r{{1, -1}, {1, 1}};
    CHECK(is_rational_square(determinant(comps[1].form) / determinant(r)));
    CHECK(signature_symmetric(comps[1].form + comps[1].form.transpose()) == signature_symmetric(r + r.transpose()));

    // the explicit change of basis
    const RatMatrix pm{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    CHECK(pm.transpose() * brieskorn_block(4) * pm == RatMatrix{{2, 0, 0}, {0, 1, -1}, {0, 1, 1}});
    CHECK(inverse(pm) * monodromy({brieskorn_block(4), 1}).H * pm == RatMatrix{{-1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
}

TEST_CASE("primary components are orthogonal and add up") {
    for (const auto& e : std::vector<ExponentMultiset>{{3, 4, 4}, {2, 3, 5}, {3, 3}, {4, 6}, {2, 4, 6}}) {
        const auto p = brieskorn_presentation(e);
        const auto comps = primary_decomposition(p);
        std::size_t dim = 0;
        long sig = 0;
        std::vector<RatVector> all;
        for (const auto& c : comps) {
            REQUIRE(c.form.rows() == totient(c.m) * c.multiplicity);
            REQUIRE(char_poly(c.monodromy) == cyclotomic_polynomial(c.m).pow(static_cast<unsigned>(c.multiplicity)));
            dim += c.form.rows();
            sig += signature_symmetric(c.form + c.form.transpose());
            for (std::size_t j = 0; j < c.basis.cols(); ++j) all.push_back(c.basis.column(j));
        }
        REQUIRE(dim == p.L.rows());
        REQUIRE(sig == signature_symmetric(p.L + p.L.transpose()));
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (std::size_t j = 0; j < comps.size(); ++j)
                if (i != j) REQUIRE((comps[i].basis.transpose() * p.L * comps[j].basis).is_zero());
        REQUIRE(rank(RatMatrix::from_columns(all)) == dim);
    }
}

TEST_CASE("tensor blocks of 3,4,4") {
    const auto blocks = tensor_block_decomposition({3, 4, 4});
    REQUIRE(blocks.size() == 4);
    const IntPoly& p3 = cyclotomic_polynomial(3);
    const IntPoly& p6 = cyclotomic_polynomial(6);
    const IntPoly& p12 = cyclotomic_polynomial(12);
    CHECK(blocks[0].char_poly == p3);
    CHECK(blocks[1].char_poly == p12);
    CHECK(blocks[2].char_poly == p12);
    CHECK(blocks[3].char_poly == p3 * p3 * p6 * p6);
    std::size_t dim = 0;
    for (const auto& b : blocks) dim += b.form.rows();
    CHECK(dim == 18);

    // phi6 part of the last block
    const auto comps = primary_decomposition({blocks[3].form, 1});
    const PrimaryComponent* c6 = nullptr;
    for (const auto& c : comps)
        if (c.m == 6) c6 = &c;
    REQUIRE(c6 != nullptr);
    const RatMatrix& a = c6->form;
    CHECK(a.rows() == 4);
    CHECK(rank(a) == 4);
    CHECK(signature_symmetric(a + a.transpose()) == 0);
    const RatMatrix shown{{0, 0, -1, -3}, {0, 0, -1, 1}, {-1, 1, 0, 0}, {3, 1, 0, 0}};
    CHECK(is_rational_square(determinant(a) / determinant(shown)));
    const auto w = search_metabolizer(a, 3);
    REQUIRE(w.has_value());
    CHECK(verify_metabolizer(a, *w));
}

TEST_CASE("metabolizers") {
    const RatMatrix shown{{0, 0, -1, -3}, {0, 0, -1, 1}, {-1, 1, 0, 0}, {3, 1, 0, 0}};
    CHECK(verify_metabolizer(shown, {{RatVector{1, 0, 0, 0}, RatVector{0, 1, 0, 0}}}));
    CHECK(verify_metabolizer(J, {{RatVector{1, 0}}}));
    CHECK_FALSE(verify_metabolizer(RatMatrix::identity(2), {{RatVector{1, 0}}}));
    CHECK_FALSE(verify_metabolizer(RatMatrix::identity(2), {{RatVector{1, 1}}}));
    CHECK_FALSE(verify_metabolizer(shown, {{RatVector{1, 0, 0, 0}, RatVector{2, 0, 0, 0}}}));
    CHECK_THROWS_AS(verify_metabolizer(RatMatrix::identity(3), {}), std::invalid_argument);

    const auto wj = search_metabolizer(J, 2);
    REQUIRE(wj.has_value());
    CHECK(verify_metabolizer(J, *wj));
    CHECK(search_metabolizer(shown, 2).has_value());
    CHECK_FALSE(search_metabolizer(RatMatrix::identity(2), 4).has_value());

    std::mt19937 rng(9);
    const MetabolizerWitness w{{RatVector{1, 0, 0, 0}, RatVector{0, 1, 0, 0}}};
    for (int t = 0; t < 30; ++t) {
        const RatMatrix u = oracle::random_unimodular(rng, 4);
        const RatMatrix uinv = inverse(u);
        MetabolizerWitness moved;
        for (const auto& v : w.basis) moved.basis.push_back(uinv.apply(v));
        REQUIRE(verify_metabolizer(u.transpose() * shown * u, moved));
    }
}
