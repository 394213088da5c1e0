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

#ifndef BRIESKORN_INTPOLY_HPP
#define BRIESKORN_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace brieskorn {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of t^i; the zero polynomial has no coefficients.
class IntPoly {
   public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> low_to_high);
    explicit IntPoly(std::vector<mpz_class> low_to_high);

    static IntPoly monomial(std::size_t degree, const mpz_class& c = 1);
    static IntPoly constant(const mpz_class& c);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    const mpz_class& leading() const { return c_.back(); }

    mpz_class evaluate(const mpz_class& t) const;
    mpq_class evaluate(const mpq_class& t) const;

    /// p(-t)
    IntPoly negated_variable() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly pow(unsigned e) const;

    /// Division by a monic divisor. Returns true and sets quotient iff the
    /// remainder vanishes.
    bool divide_exact_monic(const IntPoly& monic_divisor, IntPoly& quotient) const;

    /// Human-readable form in decreasing degree, e.g. "t^2 - t + 1".
    std::string to_string(const char* var = "t") const;

   private:
    void trim();
    std::vector<mpz_class> c_;
};

/// The m-th cyclotomic polynomial, m >= 1. Results are memoised per thread.
const IntPoly& cyclotomic_polynomial(unsigned long m);

/// Euler's totient.
unsigned long totient(unsigned long m);

/// Moebius function.
int moebius(unsigned long m);

}  // namespace brieskorn

#endif
