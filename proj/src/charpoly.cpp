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
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brieskorn/ratmatrix.hpp"

namespace brieskorn {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

struct Modulus {
    u32 p;

    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        return s >= p ? s - p : s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
    u32 mul(u32 a, u32 b) const { return static_cast<u32>(static_cast<u64>(a) * b % p); }
    u32 pow(u32 a, u64 e) const {
        u32 r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    u32 inv(u32 a) const { return pow(a, p - 2); }
};

// Multiplication by a fixed w with the precomputed quotient floor(w 2^32 / p).
struct Shoup {
    u32 w, wq, p;
    Shoup(u32 w_, u32 p_) : w(w_), wq(static_cast<u32>((static_cast<u64>(w_) << 32) / p_)), p(p_) {}
    u32 operator()(u32 x) const {
        const u64 q = (static_cast<u64>(x) * wq) >> 32;
        u64 r = static_cast<u64>(x) * w - q * p;
        return static_cast<u32>(r >= p ? r - p : r);
    }
};

// Hessenberg reduction followed by the standard recurrence; returns the
// coefficients of det(tI - A) mod p, low to high.
std::vector<u32> char_poly_mod(std::vector<u32> h, std::size_t n, const Modulus& md) {
    const u32 p = md.p;
    auto at = [&](std::size_t i, std::size_t j) -> u32& { return h[i * n + j]; };
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && at(piv, m - 1) == 0) ++piv;
        if (piv == n) continue;
        if (piv != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(at(j, piv), at(j, m));
        }
        const u32 tinv = md.inv(at(m, m - 1));
        for (std::size_t i = m + 1; i < n; ++i) {
            if (at(i, m - 1) == 0) continue;
            const u32 u = md.mul(at(i, m - 1), tinv);
            const Shoup mu(u, p);
            u32* ri = &h[i * n];
            const u32* rm = &h[m * n];
            for (std::size_t j = m - 1; j < n; ++j) ri[j] = md.sub(ri[j], mu(rm[j]));
            for (std::size_t j = 0; j < n; ++j) at(j, m) = md.add(at(j, m), mu(at(j, i)));
        }
    }

    std::vector<std::vector<u32>> polys(n + 1);
    polys[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        // (t - h_mm) p_{m-1}
        const std::vector<u32>& prev = polys[m - 1];
        std::vector<u32> cur(m + 1, 0);
        const u32 hmm = at(m - 1, m - 1);
        for (std::size_t k = 0; k < prev.size(); ++k) {
            cur[k + 1] = md.add(cur[k + 1], prev[k]);
            cur[k] = md.sub(cur[k], md.mul(hmm, prev[k]));
        }
        u32 t = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = md.mul(t, at(i, i - 1));
            if (t == 0) break;
            const u32 c = md.mul(at(i - 1, m - 1), t);
            if (c == 0) continue;
            const Shoup mc(c, p);
            const std::vector<u32>& q = polys[i - 1];
            for (std::size_t k = 0; k < q.size(); ++k) cur[k] = md.sub(cur[k], mc(q[k]));
        }
        polys[m] = std::move(cur);
    }
    return polys[n];
}

// log2 of a Hadamard-type bound on every coefficient: a coefficient is a sum
// of principal minors, each bounded by the product of its row norms, so all of
// them are at most prod (1 + |row_i|). Same with columns; take the smaller.
double coefficient_bound_bits(const std::vector<mpz_class>& b, std::size_t n) {
    auto log2_abs = [](const mpz_class& x) {
        long e = 0;
        const double d = mpz_get_d_2exp(&e, x.get_mpz_t());
        return std::log2(std::fabs(d)) + static_cast<double>(e);
    };
    auto total = [&](bool by_rows) {
        double bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class sq = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const mpz_class& x = by_rows ? b[i * n + j] : b[j * n + i];
                mpz_addmul(sq.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
            }
            mpz_class root;
            mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
            root += 2;  // ceil(sqrt) + 1
            bits += log2_abs(root);
        }
        return bits;
    };
    return std::min(total(true), total(false));
}

}  // namespace

IntPoly char_poly(const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return IntPoly::constant(1);

    // B = d A is integral; char_A(t) = d^{-n} char_B(d t)
    const mpz_class d = a.denominator_lcm();
    std::vector<mpz_class> b(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b[i * n + j] = a(i, j).get_num() * (d / a(i, j).get_den());

    const double need_bits = coefficient_bound_bits(b, n) + 2.0;

    std::vector<mpz_class> coeff(n + 1, 0);
    mpz_class modulus = 1;
    mpz_class candidate = (mpz_class(1) << 31) - 1;
    std::vector<u32> h(n * n);
    while (true) {
        while (mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0) --candidate;
        const Modulus md{static_cast<u32>(candidate.get_ui())};
        --candidate;
        const mpz_class pz(md.p);
        for (std::size_t k = 0; k < n * n; ++k) {
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), b[k].get_mpz_t(), pz.get_mpz_t());
            h[k] = static_cast<u32>(r.get_ui());
        }
        const std::vector<u32> res = char_poly_mod(h, n, md);

        // incremental CRT: x += M ((r - x) M^{-1} mod p)
        mpz_class minv;
        mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
        for (std::size_t k = 0; k <= n; ++k) {
            mpz_class diff = mpz_class(res[k]) - coeff[k];
            diff *= minv;
            mpz_fdiv_r(diff.get_mpz_t(), diff.get_mpz_t(), pz.get_mpz_t());
            coeff[k] += modulus * diff;
        }
        modulus *= pz;
        if (static_cast<double>(mpz_sizeinbase(modulus.get_mpz_t(), 2)) > need_bits + 1.0) break;
    }
    const mpz_class half = modulus / 2;
    for (auto& c : coeff)
        if (c > half) c -= modulus;

    if (d != 1) {
        mpz_class dk = 1;  // d^{n-k}
        for (std::size_t k = n + 1; k-- > 0;) {
            if (!mpz_divisible_p(coeff[k].get_mpz_t(), dk.get_mpz_t()))
                throw std::domain_error("char_poly: characteristic polynomial is not integral");
            mpz_divexact(coeff[k].get_mpz_t(), coeff[k].get_mpz_t(), dk.get_mpz_t());
            dk *= d;
        }
    }
    return IntPoly(std::move(coeff));
}

}  // namespace brieskorn
