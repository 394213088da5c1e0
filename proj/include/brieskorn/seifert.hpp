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

#ifndef BRIESKORN_SEIFERT_HPP
#define BRIESKORN_SEIFERT_HPP

#include <optional>
#include <vector>

#include "brieskorn/exponent_multiset.hpp"
#include "brieskorn/groupring.hpp"
#include "brieskorn/intpoly.hpp"
#include "brieskorn/ratmatrix.hpp"

namespace brieskorn {

/// Seifert matrix together with the sign (-1)^n; S = L + parity L^T.
struct SeifertPresentation {
    RatMatrix L;
    int parity = 1;
};

/// (a-1) x (a-1), 1 on the diagonal, -1 on the superdiagonal.
RatMatrix brieskorn_block(unsigned long a);

/// Kronecker product of the blocks over the sorted exponents.
RatMatrix seifert_matrix(const ExponentMultiset& e);

/// seifert_matrix(e) with parity (-1)^n, n = e.size() - 1.
SeifertPresentation brieskorn_presentation(const ExponentMultiset& e);

RatMatrix intersection_form(const SeifertPresentation& p);

struct Monodromy {
    RatMatrix H;  // -parity L^{-1} L^T
    RatMatrix T;  // -parity L (L^{-1})^T
};

/// Throws std::domain_error when L is singular.
Monodromy monodromy(const SeifertPresentation& p);

/// L (x) M_d with the parity flipped. Throws std::invalid_argument if d < 2.
SeifertPresentation suspend(const SeifertPresentation& p, unsigned long d);

struct PrimaryComponent {
    unsigned long m = 0;             // cyclotomic index
    unsigned long multiplicity = 0;  // exponent of phi_m in char(H)
    RatMatrix basis;                 // columns: primitive integer vectors
    RatMatrix form;                  // basis^T L basis
    RatMatrix monodromy;             // H restricted to the span of basis
};

/// Generalized eigenspaces ker phi_m(H)^k with the form restricted to each.
/// Throws std::domain_error if char(H) is not a product of cyclotomics.
std::vector<PrimaryComponent> primary_decomposition(const SeifertPresentation& p);

struct TensorBlock {
    std::vector<unsigned long> orders;  // one cyclotomic index per exponent
    RatMatrix basis;
    RatMatrix form;
    IntPoly char_poly;  // of the block monodromy
};

/// Splits every block M_a into its primary pieces and tensors the pieces.
std::vector<TensorBlock> tensor_block_decomposition(const ExponentMultiset& e);

struct MetabolizerWitness {
    std::vector<RatVector> basis;
};

/// Half-dimensional span on which x^T A y vanishes. Throws
/// std::invalid_argument on odd or non-square A.
bool verify_metabolizer(const RatMatrix& a, const MetabolizerWitness& w);

/// Depth-first extension of isotropic flags through integer combinations,
/// coefficients bounded by height_bound, of an integral basis of the current
/// orthogonal. Kernel vectors of A + A^T are tried first. Incomplete: an empty
/// result is not a proof that no metabolizer exists.
std::optional<MetabolizerWitness> search_metabolizer(const RatMatrix& a, long height_bound,
                                                     long node_budget = 2000000);

}  // namespace brieskorn

#endif
