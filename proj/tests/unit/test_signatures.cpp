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

#include <cmath>
#include <complex>

#include "brieskorn/exponents.hpp"
#include "brieskorn/seifert.hpp"
#include "brieskorn/signatures.hpp"
#include "doctest.h"
#include "linalg_oracles.hpp"
#include "oracles.hpp"

using namespace brieskorn;

namespace {

RatMatrix symmetrized(const RatMatrix& l) { return l + l.transpose(); }

// s = sum k_i / a_i reduced into [0, 2), by plain rational enumeration
std::vector<mpq_class> lattice_points(const ExponentMultiset& e) {
    std::vector<mpq_class> out;
    std::vector<unsigned long> k(e.size(), 1);
    while (true) {
        mpq_class s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s += mpq_class(static_cast<long>(k[i]), static_cast<long>(e[i]));
        s.canonicalize();
        while (s >= 2) s -= 2;
        out.push_back(s);
        std::size_t i = 0;
        while (i < e.size() && ++k[i] == e[i]) k[i++] = 1;
        if (i == e.size()) break;
    }
    return out;
}

std::vector<unsigned long> primes_below(unsigned long n) {
    std::vector<unsigned long> p;
    for (unsigned long q = 2; q < n; ++q) {
        bool prime = true;
        for (unsigned long d : p) prime = prime && q % d != 0;
        if (prime) p.push_back(q);
    }
    return p;
}

std::complex<double> twisted_root(long n, double x) {
    const std::complex<double> w = std::polar(1.0, 2 * M_PI * x);
    return n % 2 == 0 ? -w : w;
}

}  // namespace

TEST_CASE("lattice counts") {
    const ExponentMultiset e{2, 3, 5};
    const LatticeCounts c = lattice_counts(e);
    CHECK(c.lower + c.upper + c.boundary == 8);
    CHECK(c.difference() == -8);

    for (const ExponentMultiset& f : {ExponentMultiset{3, 4, 4}, ExponentMultiset{2, 2, 3, 3, 12}, ExponentMultiset{4, 6}}) {
        long lower = 0, upper = 0, boundary = 0;
        for (const mpq_class& s : lattice_points(f)) {
            if (s.get_den() == 1)
                ++boundary;
            else if (s < 1)
                ++lower;
            else
                ++upper;
        }
        const LatticeCounts got = lattice_counts(f);
        CHECK(got.lower == lower);
        CHECK(got.upper == upper);
        CHECK(got.boundary == boundary);
    }
}

TEST_CASE("lattice counts split over index ranges") {
    const ExponentMultiset e{3, 4, 4, 6, 9};
    const LatticeCounts whole = lattice_counts(e);
    LatticeCounts parts;
    for (std::uint64_t lo = 0; lo < 720; lo += 97) parts += lattice_counts(e, lo, lo + 97);
    CHECK(parts.lower == whole.lower);
    CHECK(parts.upper == whole.upper);
    CHECK(parts.boundary == whole.boundary);
    CHECK(lattice_counts(e, 700, 10000).lower + lattice_counts(e, 700, 10000).upper +
              lattice_counts(e, 700, 10000).boundary ==
          20);
}

TEST_CASE("lattice signatures of known examples") {
    CHECK(lattice_signature({2, 3, 5}) == 8);
    CHECK(lattice_signature({3, 4, 4}) == 14);
    CHECK(lattice_signature({2, 2, 3, 3, 12}) == 30);
    CHECK(lattice_signature({3, 4, 4, 6, 9}) == 274);
    CHECK(lattice_signature({2, 3}) == signature_symmetric(symmetrized(seifert_matrix({2, 3}))));
}

TEST_CASE("calibration against the exact pivot") {
    CHECK(signature_symmetric(symmetrized(seifert_matrix({2, 3, 5}))) == 8 * kSignatureCalibration);
    CHECK(signature_symmetric(symmetrized(seifert_matrix({3, 4, 4}))) == 14);
}

TEST_CASE("lattice signature matches the exact pivot on small multisets") {
    int checked = 0;
    for (const ExponentMultiset& e : oracle::all_multisets(4, 2, 7)) {
        if (e.milnor_number() > 60) continue;
        const long exact = signature_symmetric(symmetrized(seifert_matrix(e)));
        INFO(e.to_string());
        CHECK(lattice_signature(e) == exact);
        ++checked;
    }
    CHECK(checked > 50);
}

TEST_CASE("lattice signature matches floating eigenvalues") {
    for (const ExponentMultiset& e : {ExponentMultiset{2, 3, 7}, ExponentMultiset{3, 4, 4}, ExponentMultiset{2, 2, 3, 3, 12}}) {
        INFO(e.to_string());
        CHECK(lattice_signature(e) == oracle::eigen_signature(symmetrized(seifert_matrix(e))));
    }
}

TEST_CASE("equivariant signatures") {
    const ExponentMultiset e{3, 4, 4};
    CHECK(equivariant_signature(e, 12) == 8);
    CHECK(equivariant_signature(e, 6) == 0);
    CHECK(equivariant_signature(e, 3) == 6);
    CHECK(equivariant_signature(e, 5) == 0);

    for (const ExponentMultiset& f : {ExponentMultiset{3, 4, 4}, ExponentMultiset{2, 3, 5}, ExponentMultiset{3, 4, 4, 6, 9}, ExponentMultiset{2, 2, 3, 3, 12}}) {
        long sum = 0;
        for (const auto& [m, s] : equivariant_signatures(f)) sum += s;
        CHECK(sum == lattice_signature(f));
    }
}

TEST_CASE("equivariant signatures match primary components") {
    for (const ExponentMultiset& e : {ExponentMultiset{3, 4, 4}, ExponentMultiset{2, 3, 7}, ExponentMultiset{4, 6}}) {
        const auto expected = equivariant_signatures(e);
        for (const PrimaryComponent& c : primary_decomposition(brieskorn_presentation(e))) {
            INFO(e.to_string() << " m=" << c.m);
            const auto it = expected.find(c.m);
            CHECK(it != expected.end());
            CHECK(signature_symmetric(symmetrized(c.form)) == it->second);
        }
    }
}

TEST_CASE("signature is additive under direct sums") {
    const RatMatrix a = symmetrized(seifert_matrix({2, 3, 5}));
    const RatMatrix b = symmetrized(seifert_matrix({2, 3, 7}));
    CHECK(signature_symmetric(direct_sum(a, b)) == lattice_signature({2, 3, 5}) + lattice_signature({2, 3, 7}));
}

TEST_CASE("jump values") {
    CHECK(jump({2, 3}, 5) == 1);
    CHECK(jump({2, 3}, 1) == -1);
    CHECK(jump({2, 3}, 2) == 0);
    CHECK(jump({2, 3}, 3) == 0);
    const LSets s = l_sets({2, 3}, 5);
    REQUIRE(s.plus.size() == 1);
    CHECK(s.plus[0] == std::vector<unsigned long>{1, 1});
    CHECK(s.minus.empty());
    CHECK(l_sets({2, 3}, 3).plus.empty());
    CHECK(l_sets({2, 3}, 3).minus.empty());

    CHECK_THROWS_AS(jump({2, 4}, 1), std::invalid_argument);
    CHECK_THROWS_AS(jump({2, 3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(jump({2, 3}, 6), std::invalid_argument);

    CHECK(jump_at({2, 3}, mpq_class(5, 6)) == 1);
    CHECK(jump_at({2, 3, 5}, mpq_class(1, 42)) == 0);
}

TEST_CASE("jump agrees with brute-force L sets on prime triples") {
    const auto primes = primes_below(12);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            for (std::size_t k = j + 1; k < primes.size(); ++k) {
                const ExponentMultiset e{primes[i], primes[j], primes[k]};
                const long P = static_cast<long>(primes[i] * primes[j] * primes[k]);
                std::map<long, int> brute;  // +1 per point in L_+, -1 per point in L_-
                std::map<long, int> sizes;
                for (const mpq_class& s : lattice_points(e)) {
                    const mpq_class rp = s * P;  // in [0, 2P)
                    const long v = rp.get_num().get_si();
                    const long r = v % P;
                    brute[r] += v < P ? 1 : -1;
                    ++sizes[r];
                }
                for (long r = 1; r < P; ++r) {
                    INFO(e.to_string() << " r=" << r);
                    const bool multiple = r % static_cast<long>(primes[i]) == 0 ||
                                          r % static_cast<long>(primes[j]) == 0 ||
                                          r % static_cast<long>(primes[k]) == 0;
                    CHECK(sizes[r] <= 1);
                    CHECK(jump(e, static_cast<std::uint64_t>(r)) == brute[r]);
                    CHECK((jump(e, static_cast<std::uint64_t>(r)) == 0) == multiple);
                }
            }
}

TEST_CASE("jump report") {
    const JumpReport rep = jump_report({2, 3});
    CHECK(rep.P == 6);
    REQUIRE(rep.values.size() == 5);
    CHECK(rep.values[0] == std::pair<std::uint64_t, int>{1, -1});
    CHECK(rep.values[4] == std::pair<std::uint64_t, int>{5, 1});
    CHECK(jump_report({2, 3, 5}, {1, 7}).values.size() == 2);
}

TEST_CASE("Hermitian signature steps by a fixed multiple of the jump") {
    const RatMatrix trefoil = tensor(brieskorn_block(2), brieskorn_block(3));
    const double d = 1e-5;
    const long after = hermitian_signature_oracle(trefoil, std::polar(1.0, 2 * M_PI * (5.0 / 6 + d)));
    const long before = hermitian_signature_oracle(trefoil, std::polar(1.0, 2 * M_PI * (5.0 / 6 - d)));
    CHECK(after - before == hermitian_step_scale(1, 5, 6) * jump({2, 3}, 5));
    CHECK(std::abs(after - before) == 2);

    CHECK(hermitian_signature_oracle(seifert_matrix({2, 3, 5}), std::polar(1.0, 2 * M_PI * 0.01)) == 0);
    CHECK_THROWS_AS(hermitian_signature_oracle(trefoil, std::polar(1.0, 2 * M_PI / 6)), std::domain_error);

    for (const ExponentMultiset& e : {ExponentMultiset{2, 5}, ExponentMultiset{2, 3, 7}, ExponentMultiset{2, 3, 5, 7}}) {
        const RatMatrix l = seifert_matrix(e);
        const std::uint64_t P = exponent_product(e);
        for (std::uint64_t r = 1; r < P; ++r) {
            const int j = jump(e, r);
            if (j == 0) continue;
            const double x = static_cast<double>(r) / static_cast<double>(P);
            const long step = hermitian_signature_oracle(l, twisted_root(e.n(), x + d)) -
                              hermitian_signature_oracle(l, twisted_root(e.n(), x - d));
            INFO(e.to_string() << " r=" << r);
            CHECK(step == hermitian_step_scale(e.n(), r, P) * j);
        }
    }
}

TEST_CASE("independence certificates") {
    const auto cert = independence_certificate({{2, 3, 5}, {2, 3, 7}, {2, 3, 11}});
    CHECK(cert.valid);
    CHECK(cert.M() == 66);
    REQUIRE(cert.chain.size() == 3);
    CHECK(cert.chain[0].member == 2);
    CHECK(cert.chain[1].member == 1);
    CHECK(cert.chain[1].M == 42);
    CHECK(cert.chain[2].M == 30);
    for (const auto& step : cert.chain) {
        CHECK(std::abs(step.value) == 1);
        for (const auto& [idx, v] : step.others) CHECK(v == 0);
    }
    CHECK(cert.chain[0].others.size() == 2);

    const auto pair = independence_certificate({{2, 3, 5}, {2, 3, 7}});
    CHECK(pair.M() == 42);
    CHECK(pair.chain[0].value == jump({2, 3, 7}, 1));
    CHECK(pair.chain[0].others[0].second == 0);

    const auto small = independence_certificate({{2, 3}, {2, 5}, {3, 5}});
    CHECK(small.valid);
    CHECK(small.M() == 15);

    CHECK(independence_certificate({{2, 3, 5}}).valid);
    CHECK_THROWS_AS(independence_certificate({{2, 3, 5}, {2, 3, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(independence_certificate({{2, 4, 5}}), std::invalid_argument);
}
