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

#include "brieskorn/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "brieskorn/exponents.hpp"
#include "brieskorn/groupring.hpp"
#include "brieskorn/ratmatrix.hpp"
#include "brieskorn/report.hpp"
#include "brieskorn/seifert.hpp"
#include "brieskorn/signatures.hpp"

namespace brieskorn {

namespace {

struct Group {
    std::string tag;
    int criterion;
    std::function<void(std::vector<ReproRow>&)> run;
};

void row(std::vector<ReproRow>& out, const std::string& name, const std::string& expected,
         const std::string& computed, const std::string& note = "") {
    ReproRow r;
    r.name = name;
    r.expected = expected;
    r.computed = computed;
    r.pass = expected == computed;
    r.note = note;
    out.push_back(std::move(r));
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string one_line(const RatMatrix& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) s += ' ';
            s += a(i, j).get_str();
        }
    }
    return s + "]";
}

std::vector<ExponentMultiset> pool(std::size_t max_len, unsigned long lo, unsigned long hi) {
    std::vector<ExponentMultiset> out;
    std::vector<unsigned long> cur;
    std::function<void(unsigned long)> rec = [&](unsigned long from) {
        if (!cur.empty()) out.emplace_back(cur);
        if (cur.size() == max_len) return;
        for (unsigned long a = from; a <= hi; ++a) {
            cur.push_back(a);
            rec(a);
            cur.pop_back();
        }
    };
    rec(lo);
    return out;
}

std::string exceptions(long bad, long total) {
    return std::to_string(bad) + " exceptions in " + std::to_string(total);
}

std::string zero_exceptions(long total) { return exceptions(0, total); }

const RatMatrix kJ{{0, 1}, {-1, 0}};

RatMatrix four_block(const RatMatrix& b, const RatMatrix& c) {
    RatMatrix a(4, 4);
    set_block(a, 0, 0, b);
    set_block(a, 0, 2, c);
    set_block(a, 2, 0, -c.transpose());
    return a;
}

std::string cyclo_of(const IntPoly& p) {
    const auto f = factor_cyclotomic(p);
    return f ? f->to_string() : "not cyclotomic";
}

// ---------------------------------------------------------------------------

void divisors(std::vector<ReproRow>& out) {
    row(out, "divisor of 2,2,3,3,12", "4*L12 - L3 - 1", alexander_divisor({2, 2, 3, 3, 12}).to_string(),
        "printed against 3,4,4,6,9; root count 44 = milnor number of 2,2,3,3,12");
    row(out, "divisor of 3,4,4,6,9", "20*L36 + 6*L18 - 6*L12 - 2*L9 - 2*L6 - 2*L4 + L3 - 1",
        alexander_divisor({3, 4, 4, 6, 9}).to_string(),
        "printed with 24*L36 against 2,2,3,3,12; that form has 864 roots, the milnor number is 720");
    row(out, "divisor of 3,4,4,6,8", "27*L24 - 6*L12 + 9*L8 - 2*L6 - 2*L4 + L3 - 1",
        alexander_divisor({3, 4, 4, 6, 8}).to_string());
}

void divisor_344(std::vector<ReproRow>& out) {
    row(out, "divisor of 3,4,4", "2*L12 - 2*L4 + L3 - 1", alexander_divisor({3, 4, 4}).to_string(),
        "printed as 2*L12 + L3 - 2*L4 - 1; same element, canonical order");
    row(out, "cyclotomic form of 3,4,4", "phi12^2 phi6^2 phi3^3",
        to_cyclotomic(alexander_divisor({3, 4, 4})).to_string());
}

void essential_sets(std::vector<ReproRow>& out) {
    row(out, "essential set of 3,4,4,6,9", "{3}", set_string(essential_exponent_set({3, 4, 4, 6, 9})));
    row(out, "essential set of 2,2,3,3,12", "{3}", set_string(essential_exponent_set({2, 2, 3, 3, 12})));
    row(out, "essential set of 3,4,4,6,8", "{3,8}", set_string(essential_exponent_set({3, 4, 4, 6, 8})));
    row(out, "fox-milnor 3,4,4,6,9 vs 2,2,3,3,12", "true", yes_no(fox_milnor({3, 4, 4, 6, 9}, {2, 2, 3, 3, 12})));
    row(out, "fox-milnor 3,4,4,6,9 vs 3,4,4,6,8", "false", yes_no(fox_milnor({3, 4, 4, 6, 9}, {3, 4, 4, 6, 8})));
    const CompareReport c = compare({3, 4, 4, 6, 9}, {2, 2, 3, 3, 12});
    row(out, "cobordism 3,4,4,6,9 vs 2,2,3,3,12 excluded by signature", "true", yes_no(c.excluded_by_signature));
}

void fox_milnor_brute_force(std::vector<ReproRow>& out) {
    const auto p = pool(4, 2, 9);
    std::vector<LambdaCombo> div;
    std::vector<std::vector<unsigned long>> ess;
    for (const auto& e : p) {
        div.push_back(alexander_divisor(e));
        ess.push_back(essential_exponent_set(e));
    }
    long bad = 0, total = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i; j < p.size(); ++j) {
            ++total;
            if ((ess[i] == ess[j]) != congruent_mod2(div[i], div[j])) ++bad;
        }
    row(out, "essential-set equality vs mod 2 congruence, <= 4 entries from 2..9", zero_exceptions(total),
        exceptions(bad, total));
}

void signatures(std::vector<ReproRow>& out) {
    row(out, "calibration: lattice signature of 2,3,5", "8", std::to_string(lattice_signature({2, 3, 5})));
    const RatMatrix e8 = seifert_matrix({2, 3, 5});
    row(out, "calibration: exact signature of 2,3,5", "8", std::to_string(signature_symmetric(e8 + e8.transpose())));
    row(out, "lattice signature of 3,4,4,6,9", "274", std::to_string(lattice_signature({3, 4, 4, 6, 9})));
    row(out, "lattice signature of 2,2,3,3,12", "30", std::to_string(lattice_signature({2, 2, 3, 3, 12})));
    const RatMatrix a = seifert_matrix({3, 4, 4, 6, 9});
    row(out, "exact pivot signature, 720 x 720", "274", std::to_string(signature_symmetric(a + a.transpose())));
    const RatMatrix b = seifert_matrix({2, 2, 3, 3, 12});
    row(out, "exact pivot signature, 44 x 44", "30", std::to_string(signature_symmetric(b + b.transpose())),
        "the form of 2,2,3,3,12 has rank 44, not 288");
}

void equivariant(std::vector<ReproRow>& out) {
    const auto eq = equivariant_signatures({3, 4, 4});
    row(out, "equivariant signatures of 3,4,4", "12:8 6:0 3:6", equivariant_string(eq));
    long sum = 0;
    for (const auto& [m, s] : eq) sum += s;
    row(out, "sum of equivariant signatures of 3,4,4", std::to_string(lattice_signature({3, 4, 4})),
        std::to_string(sum));
}

void matrix_identities(std::vector<ReproRow>& out) {
    const RatMatrix m4 = brieskorn_block(4);
    const Monodromy mono = monodromy({m4, 1});
    row(out, "inverse of M4", "[1 1 1; 0 1 1; 0 0 1]", one_line(inverse(m4)));
    row(out, "S4", "[2 -1 0; -1 2 -1; 0 -1 2]", one_line(intersection_form({m4, 1})));
    row(out, "T4", "[0 1 0; 0 0 1; -1 -1 -1]", one_line(mono.T));
    row(out, "H4", "[0 0 -1; 1 0 -1; 0 1 -1]", one_line(mono.H));
    row(out, "H4 = T4^T", "true", yes_no(mono.H == mono.T.transpose()));
    row(out, "H4^T M4 H4 = M4", "true", yes_no(mono.H.transpose() * m4 * mono.H == m4));
    row(out, "char(H4)", "phi4 phi2", cyclo_of(char_poly(mono.H)));
    const auto ker = kernel_basis(mono.H + RatMatrix::identity(3));
    row(out, "kernel of H4 + I", "[1 0 1]",
        ker.size() == 1 ? one_line(RatMatrix::from_rows({primitive_integer(ker[0])})) : "dimension " + std::to_string(ker.size()));
    const RatMatrix p{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    row(out, "P^T M4 P", "[2 0 0; 0 1 -1; 0 1 1]", one_line(p.transpose() * m4 * p));

    const auto blocks = tensor_block_decomposition({3, 4, 4});
    std::string polys;
    for (const auto& b : blocks) polys += (polys.empty() ? "" : ", ") + cyclo_of(b.char_poly);
    row(out, "tensor blocks of 3,4,4", "phi3, phi12, phi12, phi6^2 phi3^2", polys);

    const PrimaryComponent* c6 = nullptr;
    std::vector<PrimaryComponent> comps;
    if (!blocks.empty()) {
        comps = primary_decomposition({blocks.back().form, 1});
        for (const auto& c : comps)
            if (c.m == 6) c6 = &c;
    }
    row(out, "phi6 component rank", "4", c6 ? std::to_string(rank(c6->form)) : "missing");
    row(out, "phi6 component symmetrized signature", "0",
        c6 ? std::to_string(signature_symmetric(c6->form + c6->form.transpose())) : "missing");
    bool found = false;
    if (c6) {
        const auto w = search_metabolizer(c6->form, 3);
        found = w && verify_metabolizer(c6->form, *w);
    }
    row(out, "phi6 component metabolizer found and verified", "true", yes_no(found));
}

void determinants(std::vector<ReproRow>& out) {
    const RatMatrix m3 = brieskorn_block(3);
    row(out, "det(M3 - M3^T)", "1", determinant(m3 - m3.transpose()).get_str());
    const SeifertPresentation a1{four_block(kJ, kJ), -1};
    const SeifertPresentation a2{kJ, -1};
    row(out, "|det (S1)_{3,2}|", "81",
        mpq_class(abs(determinant(intersection_form(suspend(suspend(a1, 3), 2))))).get_str(),
        "B = C = J as given; det(B + B^T) = 0 for this B, B = [0 1; 0 0] below satisfies the hypothesis");
    const SeifertPresentation a1h{four_block(RatMatrix{{0, 1}, {0, 0}}, kJ), -1};
    row(out, "|det (S1)_{3,2}| with B = [0 1; 0 0]", "81",
        mpq_class(abs(determinant(intersection_form(suspend(suspend(a1h, 3), 2))))).get_str());
    row(out, "|det (S2)_{3,2}|", "9",
        mpq_class(abs(determinant(intersection_form(suspend(suspend(a2, 3), 2))))).get_str());
    row(out, "(S2)_2 = 0", "true", yes_no(intersection_form(suspend(a2, 2)).is_zero()));
    RatMatrix expect(4, 4);
    set_block(expect, 0, 0, RatMatrix{{0, 1}, {1, 0}});
    row(out, "(S1)_2 = [B + B^T, 0; 0, 0] with B = [0 1; 0 0]", one_line(expect),
        one_line(intersection_form(suspend(a1h, 2))));
}

void alexander_monodromy(std::vector<ReproRow>& out) {
    long bad = 0, total = 0;
    for (const auto& e : pool(5, 2, 9)) {
        if (e.milnor_number() > 200) continue;
        ++total;
        const IntPoly h = char_poly(monodromy(brieskorn_presentation(e)).H);
        if (h != to_polynomial(to_cyclotomic(alexander_divisor(e)))) ++bad;
    }
    row(out, "char(H) = cyclotomic form of the divisor, <= 5 entries from 2..9, milnor number <= 200",
        zero_exceptions(total), exceptions(bad, total));
}

void sphericity(std::vector<ReproRow>& out) {
    long bad = 0, total = 0;
    for (const auto& e : pool(5, 2, 9)) {
        if (e.n() == 2) continue;
        ++total;
        const LambdaCombo d = alexander_divisor(e);
        const bool unit = to_cyclotomic(d).multiplicity(1) == 0 && abs(evaluate_at_one(d)) == 1;
        if (is_spherical(e, e.n()).spherical != unit) ++bad;
    }
    row(out, "graph criterion vs |Delta(1)| = 1, <= 5 entries from 2..9, n != 2", zero_exceptions(total),
        exceptions(bad, total));
}

void jumps(std::vector<ReproRow>& out) {
    const std::vector<unsigned long> primes{2, 3, 5, 7, 11, 13, 17, 19};
    long bad = 0, total = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            for (std::size_t k = j + 1; k < primes.size(); ++k) {
                const ExponentMultiset e{primes[i], primes[j], primes[k]};
                const std::uint64_t P = exponent_product(e);
                // direct enumeration: N = sum k_i P/p_i lies in (0, 2P) up to multiples of 2P
                std::vector<int> plus(P, 0), minus(P, 0);
                for (unsigned long x = 1; x < e[0]; ++x)
                    for (unsigned long y = 1; y < e[1]; ++y)
                        for (unsigned long z = 1; z < e[2]; ++z) {
                            const std::uint64_t n =
                                (x * (P / e[0]) + y * (P / e[1]) + z * (P / e[2])) % (2 * P);
                            (n < P ? plus : minus)[n % P]++;
                        }
                for (std::uint64_t r = 1; r < P; ++r) {
                    ++total;
                    const int v = jump(e, r);
                    const bool multiple = r % e[0] == 0 || r % e[1] == 0 || r % e[2] == 0;
                    const int brute = plus[r] - minus[r];
                    if (v < -1 || v > 1 || (v == 0) != multiple || plus[r] + minus[r] > 1 || v != brute) ++bad;
                }
            }
    row(out, "jump properties on pairwise-coprime prime triples below 20, all 0 < r < P", zero_exceptions(total),
        exceptions(bad, total));
    const auto cert = independence_certificate({{2, 3, 5}, {2, 3, 7}, {2, 3, 11}});
    row(out, "independence certificate for 2,3,5; 2,3,7; 2,3,11", "valid, M = 66",
        std::string(cert.valid ? "valid" : "invalid") + ", M = " + cert.M().get_str());
}

void squares(std::vector<ReproRow>& out) {
    long bad = 0, total = 0;
    for (const auto& e : pool(5, 2, 9)) {
        ++total;
        if (is_square(alexander_divisor(e))) ++bad;
    }
    row(out, "no Brieskorn divisor is a square, <= 5 entries from 2..9", zero_exceptions(total),
        exceptions(bad, total));
    row(out, "divisor of the product for 3,4,4,6,9 and 2,2,3,3,12 is a square", "true",
        yes_no(is_square(alexander_divisor({3, 4, 4, 6, 9}) + alexander_divisor({2, 2, 3, 3, 12}))),
        "the divisor of a product of polynomials is the sum of the divisors");
}

const std::vector<Group>& groups() {
    static const std::vector<Group> g{
        {"section3", 1, divisors},           {"section4", 1, divisor_344},
        {"section3", 2, essential_sets},     {"section3", 3, fox_milnor_brute_force},
        {"section3", 4, signatures},         {"section4", 5, equivariant},
        {"section4", 6, matrix_identities},  {"section5", 7, determinants},
        {"section4", 8, alexander_monodromy}, {"section3", 9, sphericity},
        {"section3", 10, jumps},             {"section3", 11, squares},
    };
    return g;
}

}  // namespace

std::vector<std::string> reproduction_tags() {
    std::vector<std::string> t{"section3", "section4", "section5"};
    for (int k = 1; k <= 11; ++k) t.push_back("criterion" + std::to_string(k));
    return t;
}

std::vector<ReproRow> reproduce(const std::string& only) {
    if (!only.empty()) {
        const auto tags = reproduction_tags();
        if (std::find(tags.begin(), tags.end(), only) == tags.end())
            throw std::invalid_argument("unknown tag '" + only + "'");
    }
    std::vector<ReproRow> rows;
    for (const Group& g : groups()) {
        if (!only.empty() && only != g.tag && only != "criterion" + std::to_string(g.criterion)) continue;
        std::vector<ReproRow> part;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            g.run(part);
        } catch (const std::exception& e) {
            ReproRow r;
            r.name = "error";
            r.expected = "no exception";
            r.computed = e.what();
            part.push_back(std::move(r));
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        for (auto& r : part) {
            r.tag = g.tag;
            r.criterion = g.criterion;
            r.seconds = secs / static_cast<double>(part.size());
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string to_text(const std::vector<ReproRow>& rows) {
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& r : rows) {
        passed += r.pass;
        os << (r.pass ? "PASS" : "FAIL") << "  " << r.tag << "  c" << r.criterion << "  " << r.name << '\n'
           << "      expected: " << r.expected << '\n';
        if (!r.pass) os << "      computed: " << r.computed << '\n';
        if (!r.note.empty()) os << "      correction: " << r.note << '\n';
    }
    os << passed << "/" << rows.size() << " rows pass\n";
    return os.str();
}

Json to_json(const std::vector<ReproRow>& rows) {
    Json a = Json::array();
    for (const auto& r : rows) {
        Json j{{"tag", r.tag},     {"criterion", r.criterion}, {"name", r.name},
               {"expected", r.expected}, {"computed", r.computed}, {"pass", r.pass}};
        if (!r.note.empty()) j["correction"] = r.note;
        a.push_back(std::move(j));
    }
    return a;
}

}  // namespace brieskorn
