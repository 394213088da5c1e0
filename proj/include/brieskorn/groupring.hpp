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

// Divisor calculus in the integral group ring of the multiplicative group
// of nonzero complex numbers, restricted to the span of
// Lambda_a = divisor(t^a - 1). Lambda_1 = <1> is the ring unit.

#ifndef BRIESKORN_GROUPRING_HPP
#define BRIESKORN_GROUPRING_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "brieskorn/exponent_multiset.hpp"
#include "brieskorn/intpoly.hpp"

namespace brieskorn {

/// sum_a c_a Lambda_a with no zero coefficient stored; iteration runs from
/// the largest index down, which is also the printing order.
class LambdaCombo {
   public:
    using Terms = std::map<unsigned long, mpz_class, std::greater<>>;

    LambdaCombo() = default;
    explicit LambdaCombo(const Terms& terms);

    static LambdaCombo zero() { return {}; }
    static LambdaCombo unit() { return lambda(1); }
    static LambdaCombo lambda(unsigned long a, const mpz_class& coeff = 1);

    const Terms& terms() const { return terms_; }
    mpz_class coefficient(unsigned long a) const;
    bool is_zero() const { return terms_.empty(); }

    LambdaCombo& operator+=(const LambdaCombo& o);
    LambdaCombo& operator-=(const LambdaCombo& o);
    LambdaCombo& operator*=(const mpz_class& k);

    friend LambdaCombo operator+(LambdaCombo a, const LambdaCombo& b) { return a += b; }
    friend LambdaCombo operator-(LambdaCombo a, const LambdaCombo& b) { return a -= b; }
    friend LambdaCombo operator*(LambdaCombo a, const mpz_class& k) { return a *= k; }
    friend LambdaCombo operator*(const mpz_class& k, LambdaCombo a) { return a *= k; }
    friend LambdaCombo operator*(const LambdaCombo& a, const LambdaCombo& b);
    friend bool operator==(const LambdaCombo& a, const LambdaCombo& b) { return a.terms_ == b.terms_; }

    /// Canonical text, e.g. "4*L12 - L3 - 1"; the zero element prints as "0".
    std::string to_string() const;
    /// Accepts the to_string grammar (whitespace-insensitive, "L1" allowed).
    static LambdaCombo parse(std::string_view text);

   private:
    void add_term(unsigned long a, const mpz_class& c);
    Terms terms_;
};

/// prod phi_m^{k_m}; no zero multiplicity stored; iteration runs from the
/// largest index down.
class CycloFactorization {
   public:
    using Factors = std::map<unsigned long, mpz_class, std::greater<>>;

    CycloFactorization() = default;
    explicit CycloFactorization(const Factors& factors);

    const Factors& factors() const { return factors_; }
    mpz_class multiplicity(unsigned long m) const;
    bool all_nonnegative() const;
    /// sum k_m * totient(m)
    mpz_class degree() const;

    void multiply_by(unsigned long m, const mpz_class& k);

    /// e.g. "phi12^2 phi6^2 phi3^3"; the empty product prints as "1".
    std::string to_string() const;

    friend bool operator==(const CycloFactorization& a, const CycloFactorization& b) {
        return a.factors_ == b.factors_;
    }

   private:
    Factors factors_;
};

/// Bilinear extension of Lambda_a Lambda_b = gcd(a,b) Lambda_lcm(a,b).
LambdaCombo multiply(const LambdaCombo& x, const LambdaCombo& y);

/// prod_{a in E} (Lambda_a - 1); the empty product is the unit.
LambdaCombo alexander_divisor(const ExponentMultiset& exponents);

CycloFactorization to_cyclotomic(const LambdaCombo& x);
LambdaCombo from_cyclotomic(const CycloFactorization& f);

/// True iff x - y has only even Lambda-coefficients.
bool congruent_mod2(const LambdaCombo& x, const LambdaCombo& y);

/// sum_a c_a * a. For a Brieskorn divisor this is the Milnor number.
mpz_class total_multiplicity(const LambdaCombo& x);

/// True iff every cyclotomic multiplicity is even. Throws std::domain_error
/// if some multiplicity is negative.
bool is_square(const LambdaCombo& x);

/// prod phi_m(1)^{k_m}. Throws std::domain_error if phi_1 occurs, or if the
/// value is not an integer (a prime-power factor with negative multiplicity).
mpz_class evaluate_at_one(const LambdaCombo& x);

/// Least m with positive multiplicity of phi_m in both arguments.
std::optional<unsigned long> shared_cyclotomic_factor(const LambdaCombo& x, const LambdaCombo& y);

/// Expanded monic polynomial. Throws std::domain_error on negative multiplicities.
IntPoly to_polynomial(const CycloFactorization& f);

/// Trial division by cyclotomic polynomials. Returns std::nullopt when p is
/// not monic or leaves a non-cyclotomic cofactor. Orders are searched up to
/// max_order, which defaults to the largest m with totient(m) <= deg p.
std::optional<CycloFactorization> factor_cyclotomic(const IntPoly& p, unsigned long max_order = 0);

}  // namespace brieskorn

#endif
