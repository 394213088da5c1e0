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

#include "brieskorn/ratmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace brieskorn {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("RatMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    RatMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("RatMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = rows[i][j];
            m(i, j).canonicalize();
        }
    }
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols) { return from_rows(cols).transpose(); }

RatVector RatMatrix::row(std::size_t i) const {
    return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RatVector RatMatrix::column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return x == 0; });
}

bool RatMatrix::is_integral() const {
    return std::all_of(data_.begin(), data_.end(), [](const mpq_class& x) { return x.get_den() == 1; });
}

mpz_class RatMatrix::denominator_lcm() const {
    mpz_class l = 1;
    for (const auto& x : data_) {
        if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    return l;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix +: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("RatMatrix -: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

RatMatrix& RatMatrix::operator*=(const mpq_class& k) {
    for (auto& x : data_) x *= k;
    return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix *: shape mismatch");
    // nonzero pattern of b, row by row; the Kronecker inputs here are sparse
    std::vector<std::vector<std::size_t>> nz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t j = 0; j < b.cols_; ++j)
            if (b(k, j) != 0) nz[k].push_back(j);

    RatMatrix c(a.rows_, b.cols_);
    const bool integral = a.is_integral() && b.is_integral();
    if (integral) {
        std::vector<mpz_class> acc(b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (auto& x : acc) x = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const mpq_class& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j : nz[k])
                    mpz_addmul(acc[j].get_mpz_t(), aik.get_num_mpz_t(), b(k, j).get_num_mpz_t());
            }
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = acc[j];
        }
        return c;
    }
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpq_class& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j : nz[k]) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: shape mismatch");
    RatVector r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

RatMatrix tensor(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix t(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const mpq_class& x = a(i, j);
            if (x == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (b(k, l) != 0) t(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return t;
}

RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix s(a.rows() + b.rows(), a.cols() + b.cols());
    set_block(s, 0, 0, a);
    set_block(s, a.rows(), a.cols(), b);
    return s;
}

RatMatrix submatrix(const RatMatrix& a, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    if (r0 + nr > a.rows() || c0 + nc > a.cols()) throw std::invalid_argument("submatrix: out of range");
    RatMatrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) s(i, j) = a(r0 + i, c0 + j);
    return s;
}

void set_block(RatMatrix& a, std::size_t r0, std::size_t c0, const RatMatrix& b) {
    if (r0 + b.rows() > a.rows() || c0 + b.cols() > a.cols()) throw std::invalid_argument("set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) a(r0 + i, c0 + j) = b(i, j);
}

mpq_class bilinear(const RatMatrix& a, const RatVector& x, const RatVector& y) {
    if (x.size() != a.rows() || y.size() != a.cols()) throw std::invalid_argument("bilinear: shape mismatch");
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (x[i] == 0) continue;
        mpq_class r = 0;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0 && y[j] != 0) r += a(i, j) * y[j];
        s += x[i] * r;
    }
    return s;
}

// ---------------------------------------------------------------------------
// determinant: Bareiss on the row-scaled integer matrix

mpq_class determinant(const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    std::vector<mpz_class> m(n * n);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class d = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), a(i, j).get_den_mpz_t());
        scale *= d;
        for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a(i, j).get_num() * (d / a(i, j).get_den());
    }
    auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return m[i * n + j]; };
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_mul(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), at(k, k).get_mpz_t());
                mpz_submul(at(i, j).get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = at(k, k);
    }
    mpq_class det(sign * prev, scale);
    det.canonicalize();
    return det;
}

// ---------------------------------------------------------------------------
// Gauss-Jordan with zero skipping

namespace {

struct Echelon {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form of m restricted to its first `ncols` columns;
// the remaining columns ride along.
Echelon rref(RatMatrix m, std::size_t ncols) {
    const std::size_t nr = m.rows();
    const std::size_t nc = m.cols();
    Echelon e;
    std::size_t r = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < ncols && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m(p, c) == 0) ++p;
        if (p == nr) continue;
        if (p != r)
            for (std::size_t j = 0; j < nc; ++j) std::swap(m(p, j), m(r, j));
        const mpq_class inv = 1 / m(r, c);
        nz.clear();
        for (std::size_t j = c; j < nc; ++j) {
            if (m(r, j) == 0) continue;
            m(r, j) *= inv;
            nz.push_back(j);
        }
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const mpq_class f = m(i, c);
            for (std::size_t j : nz) m(i, j) -= f * m(r, j);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    e.m = std::move(m);
    return e;
}

RatMatrix augment(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix g(a.rows(), a.cols() + b.cols());
    set_block(g, 0, 0, a);
    set_block(g, 0, a.cols(), b);
    return g;
}

}  // namespace

std::size_t rank(const RatMatrix& a) { return rref(a, a.cols()).pivot_cols.size(); }

RatMatrix solve(const RatMatrix& a, const RatMatrix& b) {
    if (!a.is_square()) throw std::invalid_argument("solve: matrix is not square");
    if (b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    Echelon e = rref(augment(a, b), n);
    if (e.pivot_cols.size() != n) throw std::domain_error("solve: matrix is singular");
    return submatrix(e.m, 0, n, n, b.cols());
}

RatMatrix inverse(const RatMatrix& a) { return solve(a, RatMatrix::identity(a.rows())); }

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
    const std::size_t nc = a.cols();
    Echelon e = rref(a, nc);
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(nc, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = -e.m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector primitive_integer(const RatVector& v) {
    mpz_class den = 1;
    for (const auto& x : v)
        if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    mpz_class g = 0;
    std::vector<mpz_class> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].get_num() * (den / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (g == 0) return v;
    int sign = 1;
    for (const auto& x : ints) {
        if (x != 0) {
            sign = x < 0 ? -1 : 1;
            break;
        }
    }
    RatVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = mpq_class(sign * ints[i] / g);
    return out;
}

RatMatrix evaluate_polynomial(const IntPoly& p, const RatMatrix& a) {
    if (!a.is_square()) throw std::invalid_argument("evaluate_polynomial: matrix is not square");
    const std::size_t n = a.rows();
    RatMatrix acc(n, n);
    for (long k = p.degree(); k >= 0; --k) {
        acc = acc * a;
        const mpq_class c(p.coeff(static_cast<std::size_t>(k)));
        if (c != 0)
            for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
    }
    return acc;
}

}  // namespace brieskorn
