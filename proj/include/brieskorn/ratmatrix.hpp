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

#ifndef BRIESKORN_RATMATRIX_HPP
#define BRIESKORN_RATMATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "brieskorn/intpoly.hpp"

namespace brieskorn {

using RatVector = std::vector<mpq_class>;

/// Dense row-major matrix of canonical rationals.
class RatMatrix {
   public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    /// Integer literal rows, e.g. {{1, -1}, {0, 1}}.
    RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows);
    static RatMatrix from_columns(const std::vector<RatVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVector row(std::size_t i) const;
    RatVector column(std::size_t j) const;

    RatMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;
    bool is_integral() const;
    /// Positive lcm of all denominators.
    mpz_class denominator_lcm() const;

    RatMatrix& operator+=(const RatMatrix& o);
    RatMatrix& operator-=(const RatMatrix& o);
    RatMatrix& operator*=(const mpq_class& k);

    friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
    friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
    friend RatMatrix operator*(RatMatrix a, const mpq_class& k) { return a *= k; }
    friend RatMatrix operator*(const mpq_class& k, RatMatrix a) { return a *= k; }
    friend RatMatrix operator-(RatMatrix a) { return a *= mpq_class(-1); }
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    RatVector apply(const RatVector& v) const;

    /// Rows separated by newlines, entries by single spaces.
    std::string to_string() const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<mpq_class> data_;
};

/// Kronecker product.
RatMatrix tensor(const RatMatrix& a, const RatMatrix& b);
/// Block diagonal a (+) b.
RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);
/// Rows/cols [r0, r0+nr) x [c0, c0+nc).
RatMatrix submatrix(const RatMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
/// Place b at (r0, c0) inside a.
void set_block(RatMatrix& a, std::size_t r0, std::size_t c0, const RatMatrix& b);

/// x^T A y
mpq_class bilinear(const RatMatrix& a, const RatVector& x, const RatVector& y);

/// Throws std::invalid_argument when not square.
mpq_class determinant(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
/// Throws std::domain_error when singular.
RatMatrix inverse(const RatMatrix& a);
/// X with A X = B. Throws std::domain_error when A is singular.
RatMatrix solve(const RatMatrix& a, const RatMatrix& b);

/// #positive - #negative eigenvalues by symmetric fraction-free congruence
/// reduction. Throws std::invalid_argument when not symmetric.
long signature_symmetric(const RatMatrix& a);

/// Monic det(t I - A). Throws std::invalid_argument when not square and
/// std::domain_error when some coefficient is not an integer.
IntPoly char_poly(const RatMatrix& a);

/// p(A) by Horner's rule.
RatMatrix evaluate_polynomial(const IntPoly& p, const RatMatrix& a);

/// Basis of {v : A v = 0} read off the reduced row echelon form.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

/// Scale to a primitive integer vector with first nonzero entry positive.
RatVector primitive_integer(const RatVector& v);

}  // namespace brieskorn

#endif
