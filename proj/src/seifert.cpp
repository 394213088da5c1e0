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

#include "brieskorn/seifert.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace brieskorn {

RatMatrix brieskorn_block(unsigned long a) {
    if (a < 2) throw std::invalid_argument("brieskorn_block: exponent must be >= 2");
    RatMatrix m = RatMatrix::identity(a - 1);
    for (std::size_t i = 0; i + 2 < a; ++i) m(i, i + 1) = -1;
    return m;
}

RatMatrix seifert_matrix(const ExponentMultiset& e) {
    RatMatrix l = RatMatrix::identity(1);
    for (unsigned long a : e) l = tensor(l, brieskorn_block(a));
    return l;
}

SeifertPresentation brieskorn_presentation(const ExponentMultiset& e) {
    return {seifert_matrix(e), e.size() % 2 == 1 ? 1 : -1};
}

RatMatrix intersection_form(const SeifertPresentation& p) {
    RatMatrix s = p.L.transpose();
    if (p.parity < 0) s = -s;
    return s + p.L;
}

Monodromy monodromy(const SeifertPresentation& p) {
    if (!p.L.is_square()) throw std::invalid_argument("monodromy: Seifert matrix is not square");
    const RatMatrix lt = p.L.transpose();
    const mpq_class sign(-p.parity);
    Monodromy m;
    m.H = solve(p.L, lt) * sign;
    // T = -parity L (L^{-1})^T = -parity L (L^T)^{-1}, i.e. the transpose of -parity L^{-1} L^T
    m.T = m.H.transpose();
    return m;
}

SeifertPresentation suspend(const SeifertPresentation& p, unsigned long d) {
    if (d < 2) throw std::invalid_argument("suspend: degree must be >= 2");
    return {tensor(p.L, brieskorn_block(d)), -p.parity};
}

std::vector<PrimaryComponent> primary_decomposition(const SeifertPresentation& p) {
    const Monodromy mono = monodromy(p);
    const RatMatrix& h = mono.H;
    const auto fac = factor_cyclotomic(char_poly(h));
    if (!fac) throw std::domain_error("primary_decomposition: characteristic polynomial is not a product of cyclotomics");

    std::vector<PrimaryComponent> out;
    for (auto it = fac->factors().rbegin(); it != fac->factors().rend(); ++it) {
        const unsigned long m = it->first;
        const unsigned long k = it->second.get_ui();
        const IntPoly q = cyclotomic_polynomial(m).pow(static_cast<unsigned>(k));
        std::vector<RatVector> cols;
        for (const auto& v : kernel_basis(evaluate_polynomial(q, h))) cols.push_back(primitive_integer(v));
        PrimaryComponent c;
        c.m = m;
        c.multiplicity = k;
        c.basis = RatMatrix::from_columns(cols);
        c.form = c.basis.transpose() * p.L * c.basis;
        // basis * X = H * basis has an exact solution on an invariant subspace
        const RatMatrix hb = h * c.basis;
        const RatMatrix gram = c.basis.transpose() * c.basis;
        c.monodromy = solve(gram, c.basis.transpose() * hb);
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<TensorBlock> tensor_block_decomposition(const ExponentMultiset& e) {
    std::vector<std::vector<PrimaryComponent>> pieces;
    for (unsigned long a : e) pieces.push_back(primary_decomposition({brieskorn_block(a), 1}));
    const int parity = e.size() % 2 == 1 ? 1 : -1;

    std::vector<TensorBlock> out;
    std::vector<std::size_t> pick(pieces.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == pieces.size()) {
            TensorBlock b;
            b.basis = RatMatrix::identity(1);
            b.form = RatMatrix::identity(1);
            for (std::size_t j = 0; j < pieces.size(); ++j) {
                const PrimaryComponent& c = pieces[j][pick[j]];
                b.orders.push_back(c.m);
                b.basis = tensor(b.basis, c.basis);
                b.form = tensor(b.form, c.form);
            }
            b.char_poly = char_poly(monodromy({b.form, parity}).H);
            out.push_back(std::move(b));
            return;
        }
        for (pick[i] = 0; pick[i] < pieces[i].size(); ++pick[i]) rec(i + 1);
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------
// metabolizers

bool verify_metabolizer(const RatMatrix& a, const MetabolizerWitness& w) {
    if (!a.is_square()) throw std::invalid_argument("verify_metabolizer: matrix is not square");
    if (a.rows() % 2) throw std::invalid_argument("verify_metabolizer: odd dimension");
    for (const auto& v : w.basis)
        if (v.size() != a.rows()) throw std::invalid_argument("verify_metabolizer: vector has wrong length");
    if (w.basis.size() != a.rows() / 2) return false;
    if (!w.basis.empty() && rank(RatMatrix::from_rows(w.basis)) != w.basis.size()) return false;
    for (const auto& v : w.basis)
        for (const auto& u : w.basis)
            if (bilinear(a, v, u) != 0) return false;
    return true;
}

namespace {

struct MetabolizerSearch {
    const RatMatrix& a;
    long height;
    long budget;
    std::size_t half;
    std::vector<RatVector> chosen;

    // integral basis of {w : u^T A w = w^T A u = 0 for every chosen u}
    std::vector<RatVector> orthogonal() const {
        const std::size_t n = a.rows();
        if (chosen.empty()) {
            std::vector<RatVector> e;
            for (std::size_t i = 0; i < n; ++i) {
                RatVector v(n, 0);
                v[i] = 1;
                e.push_back(v);
            }
            return e;
        }
        RatMatrix c(2 * chosen.size(), n);
        const RatMatrix at = a.transpose();
        for (std::size_t r = 0; r < chosen.size(); ++r) {
            const RatVector left = at.apply(chosen[r]);  // (u^T A)^T
            const RatVector right = a.apply(chosen[r]);  // A u
            for (std::size_t j = 0; j < n; ++j) {
                c(2 * r, j) = left[j];
                c(2 * r + 1, j) = right[j];
            }
        }
        std::vector<RatVector> basis;
        for (const auto& v : kernel_basis(c)) basis.push_back(primitive_integer(v));
        return basis;
    }

    bool independent(const RatVector& w) const {
        std::vector<RatVector> rows = chosen;
        rows.push_back(w);
        return rank(RatMatrix::from_rows(rows)) == rows.size();
    }

    std::vector<RatVector> candidates(const std::vector<RatVector>& basis) const {
        const std::size_t n = a.rows();
        std::vector<RatVector> out;
        // isotropic for the symmetrization, hence for A
        RatMatrix sym = a + a.transpose();
        for (const auto& v : kernel_basis(sym)) out.push_back(primitive_integer(v));

        const std::size_t d = basis.size();
        std::vector<long> coeff(d, 0);
        for (long h = 1; h <= height; ++h) {
            // all coefficient vectors of max-norm exactly h, first nonzero positive
            std::fill(coeff.begin(), coeff.end(), -h);
            while (true) {
                long mx = 0;
                std::size_t first = d;
                for (std::size_t i = 0; i < d; ++i) {
                    mx = std::max(mx, std::labs(coeff[i]));
                    if (first == d && coeff[i] != 0) first = i;
                }
                if (mx == h && coeff[first] > 0) {
                    RatVector w(n, 0);
                    for (std::size_t i = 0; i < d; ++i)
                        if (coeff[i])
                            for (std::size_t j = 0; j < n; ++j) w[j] += coeff[i] * basis[i][j];
                    if (bilinear(a, w, w) == 0) out.push_back(primitive_integer(w));
                }
                std::size_t i = 0;
                while (i < d && coeff[i] == h) coeff[i++] = -h;
                if (i == d) break;
                ++coeff[i];
            }
        }
        return out;
    }

    bool run() {
        if (chosen.size() == half) return true;
        if (--budget < 0) return false;
        const auto basis = orthogonal();
        for (const auto& w : candidates(basis)) {
            bool inside = true;  // the symmetric-kernel seeds must also lie in the orthogonal
            for (const auto& u : chosen)
                if (bilinear(a, u, w) != 0 || bilinear(a, w, u) != 0) inside = false;
            if (!inside || !independent(w)) continue;
            chosen.push_back(w);
            if (run()) return true;
            chosen.pop_back();
            if (budget < 0) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<MetabolizerWitness> search_metabolizer(const RatMatrix& a, long height_bound, long node_budget) {
    if (!a.is_square()) throw std::invalid_argument("search_metabolizer: matrix is not square");
    if (a.rows() % 2) return std::nullopt;
    MetabolizerSearch s{a, height_bound, node_budget, a.rows() / 2, {}};
    if (!s.run()) return std::nullopt;
    MetabolizerWitness w{s.chosen};
    return w;
}

}  // namespace brieskorn
