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

#include "brieskorn/signatures.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "brieskorn/exponents.hpp"

namespace brieskorn {

namespace {

std::uint64_t lcm_of(const ExponentMultiset& e) {
    std::uint64_t l = 1;
    for (unsigned long a : e) l = std::lcm(l, static_cast<std::uint64_t>(a));
    return l;
}

std::uint64_t tuple_count(const ExponentMultiset& e) {
    std::uint64_t c = 1;
    for (unsigned long a : e) {
        if (c > std::numeric_limits<std::uint64_t>::max() / (a - 1)) throw std::overflow_error("tuple count overflow");
        c *= a - 1;
    }
    return c;
}

ExponentMultiset padded(const ExponentMultiset& e) { return e.size() % 2 == 1 ? e : e.with(2); }

int orientation(const ExponentMultiset& padded_set) {
    const long half = (static_cast<long>(padded_set.size()) - 1) / 2;
    return kSignatureCalibration * (half % 2 == 0 ? 1 : -1);
}

// Visit tuples in [first, last); f(N, L, Nr, Lr) gets N = sum k_i L/a_i over
// the padded set (lcm L) when pad is set, and the same sum over the raw set.
template <class F>
void for_each_tuple(const ExponentMultiset& raw, bool pad_even, std::uint64_t first, std::uint64_t last, F&& f) {
    const ExponentMultiset pad = pad_even ? padded(raw) : raw;
    const bool extra = pad.size() != raw.size();
    const std::uint64_t lp = lcm_of(pad);
    const std::uint64_t lr = lcm_of(raw);
    const std::size_t n = raw.size();
    std::vector<std::uint64_t> wp(n), wr(n);
    for (std::size_t i = 0; i < n; ++i) {
        wp[i] = lp / raw[i];
        wr[i] = lr / raw[i];
    }
    const std::uint64_t half_shift = extra ? lp / 2 : 0;

    std::vector<std::uint64_t> k(n, 1);
    std::uint64_t idx = first;
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = 1 + idx % (raw[i] - 1);
        idx /= raw[i] - 1;
    }
    std::uint64_t np = half_shift, nr = 0;
    for (std::size_t i = 0; i < n; ++i) {
        np += k[i] * wp[i];
        nr += k[i] * wr[i];
    }
    for (std::uint64_t t = first; t < last; ++t) {
        f(np, lp, nr, lr);
        // odometer with incremental sums
        for (std::size_t i = 0; i < n; ++i) {
            if (k[i] + 1 < raw[i]) {
                ++k[i];
                np += wp[i];
                nr += wr[i];
                break;
            }
            np -= (k[i] - 1) * wp[i];
            nr -= (k[i] - 1) * wr[i];
            k[i] = 1;
        }
    }
}

void classify(LatticeCounts& c, std::uint64_t np, std::uint64_t lp) {
    const std::uint64_t x = np % (2 * lp);
    if (x % lp == 0)
        ++c.boundary;
    else if (x < lp)
        ++c.lower;
    else
        ++c.upper;
}

}  // namespace

LatticeCounts lattice_counts(const ExponentMultiset& e, std::uint64_t first, std::uint64_t last) {
    const std::uint64_t total = e.empty() ? 0 : tuple_count(e);
    last = std::min(last, total);
    LatticeCounts c;
    if (first >= last) return c;
    for_each_tuple(e, false, first, last,
                   [&](std::uint64_t np, std::uint64_t lp, std::uint64_t, std::uint64_t) { classify(c, np, lp); });
    return c;
}

LatticeCounts lattice_counts(const ExponentMultiset& e) {
    return lattice_counts(e, 0, std::numeric_limits<std::uint64_t>::max());
}

long lattice_signature(const ExponentMultiset& e) {
    const ExponentMultiset pad = padded(e);
    return orientation(pad) * static_cast<long>(lattice_counts(pad).difference());
}

long equivariant_signature(const ExponentMultiset& e, unsigned long m) {
    const auto all = equivariant_signatures(e);
    auto it = all.find(m);
    return it == all.end() ? 0 : it->second;
}

std::map<unsigned long, long> equivariant_signatures(const ExponentMultiset& e) {
    std::map<unsigned long, LatticeCounts> per;
    if (!e.empty()) {
        for_each_tuple(e, true, 0, tuple_count(e), [&](std::uint64_t np, std::uint64_t lp, std::uint64_t nr, std::uint64_t lr) {
            const std::uint64_t order = lr / std::gcd(nr % lr, lr);
            classify(per[static_cast<unsigned long>(order)], np, lp);
        });
    }
    const int o = orientation(padded(e));
    std::map<unsigned long, long> out;
    for (const auto& [m, c] : per) out[m] = o * static_cast<long>(c.difference());
    return out;
}

// ---------------------------------------------------------------------------
// jumps

std::uint64_t exponent_product(const ExponentMultiset& e) {
    std::uint64_t p = 1;
    for (unsigned long a : e) {
        if (p > (std::uint64_t{1} << 62) / a) throw std::overflow_error("exponent product exceeds 2^62");
        p *= a;
    }
    return p;
}

namespace {

void require_coprime(const ExponentMultiset& e) {
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (std::gcd(e[i], e[j]) != 1)
                throw std::invalid_argument("exponents " + std::to_string(e[i]) + " and " + std::to_string(e[j]) +
                                            " are not coprime");
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    mpz_class r;
    if (!mpz_invert(r.get_mpz_t(), mpz_class(std::to_string(a)).get_mpz_t(), mpz_class(std::to_string(m)).get_mpz_t()))
        throw std::logic_error("inverse_mod: not invertible");
    return std::stoull(r.get_str());
}

}  // namespace

LSets l_sets(const ExponentMultiset& e, std::uint64_t r) {
    require_coprime(e);
    const std::uint64_t P = exponent_product(e);
    if (r == 0 || r >= P) throw std::invalid_argument("l_sets: r must satisfy 0 < r < P");
    LSets out;
    std::vector<unsigned long> k(e.size());
    mpz_class total = 0;  // sum k_i P/p_i
    for (std::size_t i = 0; i < e.size(); ++i) {
        const std::uint64_t p = e[i];
        if (r % p == 0) return out;
        const std::uint64_t cof = P / p;
        k[i] = static_cast<unsigned long>((r % p) * inverse_mod(cof % p, p) % p);
        total += mpz_class(std::to_string(cof)) * k[i];
    }
    // total - r = P t; s = r/P + t
    mpz_class t = total - mpz_class(std::to_string(r));
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), mpz_class(std::to_string(P)).get_mpz_t());
    (mpz_even_p(t.get_mpz_t()) ? out.plus : out.minus).push_back(k);
    return out;
}

int jump(const ExponentMultiset& e, std::uint64_t r) {
    const LSets s = l_sets(e, r);
    if (!s.plus.empty()) return 1;
    if (!s.minus.empty()) return -1;
    return 0;
}

int jump_at(const ExponentMultiset& e, const mpq_class& x) {
    const mpq_class rp = x * mpq_class(mpz_class(std::to_string(exponent_product(e))));
    if (rp.get_den() != 1) return 0;
    const mpz_class& r = rp.get_num();
    if (r <= 0 || r >= mpz_class(std::to_string(exponent_product(e)))) return 0;
    return jump(e, std::stoull(r.get_str()));
}

JumpReport jump_report(const ExponentMultiset& e, const std::vector<std::uint64_t>& only) {
    require_coprime(e);
    JumpReport rep;
    rep.exponents = e;
    rep.P = exponent_product(e);
    if (only.empty()) {
        for (std::uint64_t r = 1; r < rep.P; ++r) rep.values.emplace_back(r, jump(e, r));
    } else {
        for (std::uint64_t r : only) rep.values.emplace_back(r, jump(e, r));
    }
    return rep;
}

int hermitian_step_scale(long n, std::uint64_t r, std::uint64_t P) {
    const long t = (n + 1) * (n + 2) / 2;
    int c = t % 2 == 0 ? 2 : -2;
    if (2 * r > P && n % 2 == 0) c = -c;
    return c;
}

long hermitian_signature_oracle(const RatMatrix& l, std::complex<double> z, double tol) {
    if (!l.is_square()) throw std::invalid_argument("hermitian_signature_oracle: matrix is not square");
    const auto n = static_cast<Eigen::Index>(l.rows());
    const std::complex<double> a = 1.0 - z;
    const std::complex<double> b = 1.0 - std::conj(z);
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            m(i, j) = a * l(ui, uj).get_d() + b * l(uj, ui).get_d();
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    long sig = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double ev = es.eigenvalues()(i);
        if (std::abs(ev) < tol) throw std::domain_error("hermitian_signature_oracle: eigenvalue near zero");
        sig += ev > 0 ? 1 : -1;
    }
    return sig;
}

IndependenceCertificate independence_certificate(const std::vector<ExponentMultiset>& family) {
    if (family.empty() || !is_good_family(family))
        throw std::invalid_argument("independence_certificate: not a good family");
    IndependenceCertificate cert;
    cert.family = family;
    std::vector<std::size_t> order(family.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return family[x].product() > family[y].product(); });

    cert.valid = true;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        CertificateStep step;
        step.member = order[pos];
        step.M = family[step.member].product();
        const mpq_class x(mpz_class(1), step.M);
        step.value = jump_at(family[step.member], x);
        if (step.value == 0) cert.valid = false;
        for (std::size_t rest = pos + 1; rest < order.size(); ++rest) {
            const int v = jump_at(family[order[rest]], x);
            step.others.emplace_back(order[rest], v);
            if (v != 0) cert.valid = false;
        }
        cert.chain.push_back(std::move(step));
    }
    return cert;
}

}  // namespace brieskorn
