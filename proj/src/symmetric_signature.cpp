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

#include <stdexcept>
#include <utility>
#include <vector>

#include "brieskorn/ratmatrix.hpp"

namespace brieskorn {

// Fraction-free symmetric elimination. After step k the live entries are the
// bordered minors det A[K+i, K+j] of the congruent integer matrix, so the
// pivots are successive leading principal minors D_1, D_2, ... and the
// diagonal of the congruent diagonal form is D_k / D_{k-1}.
long signature_symmetric(const RatMatrix& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("signature_symmetric: matrix is not symmetric");
    const std::size_t n = a.rows();
    const mpz_class scale = a.denominator_lcm();

    // upper triangle in physical index order; logical order through perm
    std::vector<mpz_class> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const mpq_class& x = a(i, j);
            m[i * n + j] = x.get_num() * (scale / x.get_den());
        }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& {
        std::size_t p = perm[i], q = perm[j];
        if (p > q) std::swap(p, q);
        return m[p * n + q];
    };

    long sig = 0;
    int prev_sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (at(i, i) != 0) {
                piv = i;
                break;
            }
        }
        if (piv == n) {
            // zero diagonal: shear j += i on a nonzero off-diagonal pair
            std::size_t si = n, sj = n;
            for (std::size_t i = k; i < n && si == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (at(i, j) != 0) {
                        si = i;
                        sj = j;
                        break;
                    }
            if (si == n) break;  // remaining block vanishes
            const mpz_class djj = at(sj, sj) + 2 * at(si, sj) + at(si, si);
            for (std::size_t l = k; l < n; ++l) {
                if (l == sj) continue;
                at(sj, l) += at(si, l);
            }
            at(sj, sj) = djj;
            piv = sj;
        }
        if (piv != k) std::swap(perm[piv], perm[k]);

        const mpz_class& p = at(k, k);
        const int s = sgn(p);
        sig += s * prev_sign;
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_class& aki = at(k, i);
            for (std::size_t j = i; j < n; ++j) {
                mpz_class& x = at(i, j);
                mpz_mul(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
                mpz_submul(x.get_mpz_t(), aki.get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = p;
        prev_sign = s;
    }
    return sig;
}

}  // namespace brieskorn
