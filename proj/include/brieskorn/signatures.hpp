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

#ifndef BRIESKORN_SIGNATURES_HPP
#define BRIESKORN_SIGNATURES_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "brieskorn/exponent_multiset.hpp"
#include "brieskorn/ratmatrix.hpp"

namespace brieskorn {

/// Tuples 0 < k_i < a_i sorted by s = sum k_i / a_i (mod 2).
struct LatticeCounts {
    std::int64_t lower = 0;     // s in (0, 1)
    std::int64_t upper = 0;     // s in (1, 2)
    std::int64_t boundary = 0;  // s an integer

    LatticeCounts& operator+=(const LatticeCounts& o) {
        lower += o.lower;
        upper += o.upper;
        boundary += o.boundary;
        return *this;
    }
    std::int64_t difference() const { return lower - upper; }
};

/// Counts over the tuples with mixed-radix index in [first, last), the first
/// exponent varying fastest. Disjoint ranges add up to the full count.
LatticeCounts lattice_counts(const ExponentMultiset& e, std::uint64_t first, std::uint64_t last);
LatticeCounts lattice_counts(const ExponentMultiset& e);

/// Global orientation sign, fixed by matching signature_symmetric(L + L^T)
/// on {2,3,5}.
inline constexpr int kSignatureCalibration = 1;

/// Signature of L + L^T from the lattice count. An even-sized multiset is
/// first padded with a 2, which leaves L unchanged; with n' + 1 entries the
/// count is weighted by kSignatureCalibration * (-1)^{n'/2}.
long lattice_signature(const ExponentMultiset& e);

/// Same signed count restricted to tuples with exp(2 pi i s) of exact order m,
/// with s taken over the unpadded multiset.
long equivariant_signature(const ExponentMultiset& e, unsigned long m);

/// m -> equivariant signature for every order m that occurs.
std::map<unsigned long, long> equivariant_signatures(const ExponentMultiset& e);

struct LSets {
    std::vector<std::vector<unsigned long>> plus;
    std::vector<std::vector<unsigned long>> minus;
};

/// Solves k_i (P / p_i) = r mod p_i for each i. Throws std::invalid_argument
/// unless the entries are pairwise coprime and 0 < r < P.
LSets l_sets(const ExponentMultiset& e, std::uint64_t r);

/// +1, -1 or 0 as the solution lies in L_+, in L_- or does not exist.
int jump(const ExponentMultiset& e, std::uint64_t r);

/// Jump at the rational point x = num / den of the circle R / 2Z: zero
/// unless x P is an integer strictly between 0 and P.
int jump_at(const ExponentMultiset& e, const mpq_class& x);

/// P = product of the entries; throws std::overflow_error when it exceeds 2^62.
std::uint64_t exponent_product(const ExponentMultiset& e);

struct JumpReport {
    ExponentMultiset exponents;
    std::uint64_t P = 0;
    std::vector<std::pair<std::uint64_t, int>> values;
};

/// Every 0 < r < P, or only the listed r.
JumpReport jump_report(const ExponentMultiset& e, const std::vector<std::uint64_t>& only = {});

/// Step of the Hermitian signature across the jump point
/// z = (-1)^{n+1} exp(2 pi i r / P), counterclockwise, per unit of jump:
/// 2 (-1)^{(n+1)(n+2)/2} for 2r < P; for 2r > P the sign flips when n is even.
int hermitian_step_scale(long n, std::uint64_t r, std::uint64_t P);

/// Signature of (1 - z) L + (1 - conj z) L^T from floating-point eigenvalues.
/// Throws std::domain_error when some eigenvalue is within tol of zero.
long hermitian_signature_oracle(const RatMatrix& l, std::complex<double> z, double tol = 1e-9);

struct CertificateStep {
    std::size_t member = 0;  // index into the family
    mpz_class M;             // its product, maximal among the members still in play
    int value = 0;           // jump of that member at 1/M
    std::vector<std::pair<std::size_t, int>> others;  // remaining members at 1/M
};

struct IndependenceCertificate {
    std::vector<ExponentMultiset> family;
    std::vector<CertificateStep> chain;  // descending products
    bool valid = false;

    const mpz_class& M() const { return chain.front().M; }
};

/// Throws std::invalid_argument unless the family is good.
IndependenceCertificate independence_certificate(const std::vector<ExponentMultiset>& family);

}  // namespace brieskorn

#endif
