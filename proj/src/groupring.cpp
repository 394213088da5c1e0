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

#include "brieskorn/groupring.hpp"

#include <cctype>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace brieskorn {

// ---------------------------------------------------------------------------
// LambdaCombo

LambdaCombo::LambdaCombo(const Terms& terms) {
    for (const auto& [a, c] : terms) add_term(a, c);
}

LambdaCombo LambdaCombo::lambda(unsigned long a, const mpz_class& coeff) {
    if (a == 0) throw std::invalid_argument("Lambda index must be positive");
    LambdaCombo x;
    x.add_term(a, coeff);
    return x;
}

void LambdaCombo::add_term(unsigned long a, const mpz_class& c) {
    if (a == 0) throw std::invalid_argument("Lambda index must be positive");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpz_class LambdaCombo::coefficient(unsigned long a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

LambdaCombo& LambdaCombo::operator+=(const LambdaCombo& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

LambdaCombo& LambdaCombo::operator-=(const LambdaCombo& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

LambdaCombo& LambdaCombo::operator*=(const mpz_class& k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, c] : terms_) c *= k;
    return *this;
}

LambdaCombo operator*(const LambdaCombo& x, const LambdaCombo& y) {
    LambdaCombo r;
    for (const auto& [a, ca] : x.terms_) {
        for (const auto& [b, cb] : y.terms_) {
            const unsigned long g = std::gcd(a, b);
            r.add_term(a / g * b, mpz_class(ca * cb * g));
        }
    }
    return r;
}

LambdaCombo multiply(const LambdaCombo& x, const LambdaCombo& y) { return x * y; }

std::string LambdaCombo::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        const mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (a == 1) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'L' << a;
        }
    }
    return os.str();
}

LambdaCombo LambdaCombo::parse(std::string_view text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    }
    if (s.empty()) throw std::invalid_argument("empty Lambda expression");
    if (s == "0") return {};

    LambdaCombo x;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("cannot parse Lambda expression '" + std::string(text) + "': " + why);
    };
    auto read_digits = [&](std::string& out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out += s[i++];
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-' at position " + std::to_string(i));
        }
        first = false;
        std::string coeff_digits;
        read_digits(coeff_digits);
        mpz_class coeff = 1;
        bool have_coeff = !coeff_digits.empty();
        if (have_coeff) coeff = mpz_class(coeff_digits);
        unsigned long index = 1;
        if (i < s.size() && s[i] == '*') {
            if (!have_coeff) fail("'*' without coefficient");
            ++i;
            if (i >= s.size() || s[i] != 'L') fail("expected 'L' after '*'");
        }
        if (i < s.size() && s[i] == 'L') {
            ++i;
            std::string idx;
            read_digits(idx);
            if (idx.empty()) fail("missing index after 'L'");
            index = std::stoul(idx);
            if (index == 0) fail("index 0");
        } else if (!have_coeff) {
            fail("empty term");
        }
        x.add_term(index, sign * coeff);
    }
    return x;
}

// ---------------------------------------------------------------------------
// CycloFactorization

CycloFactorization::CycloFactorization(const Factors& factors) {
    for (const auto& [m, k] : factors) multiply_by(m, k);
}

mpz_class CycloFactorization::multiplicity(unsigned long m) const {
    auto it = factors_.find(m);
    return it == factors_.end() ? mpz_class(0) : it->second;
}

bool CycloFactorization::all_nonnegative() const {
    for (const auto& [m, k] : factors_) {
        if (k < 0) return false;
    }
    return true;
}

mpz_class CycloFactorization::degree() const {
    mpz_class d = 0;
    for (const auto& [m, k] : factors_) d += k * totient(m);
    return d;
}

void CycloFactorization::multiply_by(unsigned long m, const mpz_class& k) {
    if (m == 0) throw std::invalid_argument("cyclotomic index must be positive");
    if (k == 0) return;
    auto [it, inserted] = factors_.try_emplace(m, k);
    if (!inserted) {
        it->second += k;
        if (it->second == 0) factors_.erase(it);
    }
}

std::string CycloFactorization::to_string() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, k] : factors_) {
        if (!first) os << ' ';
        first = false;
        os << "phi" << m;
        if (k != 1) os << '^' << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

LambdaCombo alexander_divisor(const ExponentMultiset& exponents) {
    LambdaCombo acc = LambdaCombo::unit();
    for (unsigned long a : exponents) {
        acc = acc * (LambdaCombo::lambda(a) - LambdaCombo::unit());
    }
    return acc;
}

CycloFactorization to_cyclotomic(const LambdaCombo& x) {
    // Lambda_a = sum_{d | a} divisor(phi_d)
    CycloFactorization f;
    for (const auto& [a, c] : x.terms()) {
        for (unsigned long d = 1; d * d <= a; ++d) {
            if (a % d) continue;
            f.multiply_by(d, c);
            if (d * d != a) f.multiply_by(a / d, c);
        }
    }
    return f;
}

LambdaCombo from_cyclotomic(const CycloFactorization& f) {
    // Moebius inversion over multiples: c_a = sum_{k >= 1} mu(k) m_{k a}.
    LambdaCombo x;
    for (const auto& [m, k] : f.factors()) {
        for (unsigned long q = 1; q <= m; ++q) {
            if (m % q) continue;
            const int mu = moebius(q);
            if (mu != 0) x += LambdaCombo::lambda(m / q, mu * k);
        }
    }
    return x;
}

bool congruent_mod2(const LambdaCombo& x, const LambdaCombo& y) {
    const LambdaCombo d = x - y;
    for (const auto& [a, c] : d.terms()) {
        if (mpz_odd_p(c.get_mpz_t())) return false;
    }
    return true;
}

mpz_class total_multiplicity(const LambdaCombo& x) {
    mpz_class total = 0;
    for (const auto& [a, c] : x.terms()) total += c * a;
    return total;
}

bool is_square(const LambdaCombo& x) {
    const CycloFactorization f = to_cyclotomic(x);
    if (!f.all_nonnegative()) throw std::domain_error("is_square: divisor has a negative cyclotomic multiplicity");
    for (const auto& [m, k] : f.factors()) {
        if (mpz_odd_p(k.get_mpz_t())) return false;
    }
    return true;
}

namespace {

// phi_m(1) is p when m = p^k, and 1 for every other m > 1.
unsigned long prime_power_base(unsigned long m) {
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        return m == 1 ? p : 1;
    }
    return m;
}

}  // namespace

mpz_class evaluate_at_one(const LambdaCombo& x) {
    const CycloFactorization f = to_cyclotomic(x);
    if (f.multiplicity(1) != 0) throw std::domain_error("evaluate_at_one: phi_1 occurs, value is 0 or undefined");
    mpz_class value = 1;
    for (const auto& [m, k] : f.factors()) {
        const unsigned long p = prime_power_base(m);
        if (p == 1) continue;
        if (k < 0) throw std::domain_error("evaluate_at_one: value is not an integer");
        mpz_class pk;
        mpz_pow_ui(pk.get_mpz_t(), mpz_class(p).get_mpz_t(), k.get_ui());
        value *= pk;
    }
    return value;
}

std::optional<unsigned long> shared_cyclotomic_factor(const LambdaCombo& x, const LambdaCombo& y) {
    const CycloFactorization fx = to_cyclotomic(x);
    const CycloFactorization fy = to_cyclotomic(y);
    std::optional<unsigned long> best;
    for (const auto& [m, k] : fx.factors()) {
        if (k > 0 && fy.multiplicity(m) > 0) best = m;  // descending order: last hit is least
    }
    return best;
}

IntPoly to_polynomial(const CycloFactorization& f) {
    if (!f.all_nonnegative()) throw std::domain_error("to_polynomial: negative multiplicity");
    IntPoly p = IntPoly::constant(1);
    for (const auto& [m, k] : f.factors()) p *= cyclotomic_polynomial(m).pow(static_cast<unsigned>(k.get_ui()));
    return p;
}

std::optional<CycloFactorization> factor_cyclotomic(const IntPoly& p, unsigned long max_order) {
    if (p.is_zero() || p.leading() != 1) return std::nullopt;
    IntPoly rest = p;
    CycloFactorization f;
    const unsigned long deg = static_cast<unsigned long>(p.degree());
    if (max_order == 0) max_order = 2 * deg * deg + 2;  // totient(m) >= sqrt(m/2)

    std::vector<unsigned long> phi(max_order + 1);
    for (unsigned long m = 0; m <= max_order; ++m) phi[m] = m;
    for (unsigned long q = 2; q <= max_order; ++q) {
        if (phi[q] != q) continue;
        for (unsigned long m = q; m <= max_order; m += q) phi[m] -= phi[m] / q;
    }

    for (unsigned long m = 1; m <= max_order && rest.degree() > 0; ++m) {
        if (phi[m] > static_cast<unsigned long>(rest.degree())) continue;
        // cheap necessary test: rest must vanish at exp(2 pi i / m) up to rounding
        if (m > 2) {
            const long double angle = 2.0L * 3.14159265358979323846264338327950288L / static_cast<long double>(m);
            const std::complex<long double> z(std::cos(angle), std::sin(angle));
            std::complex<long double> acc = 0;
            long double scale = 0;
            for (auto it = rest.coeffs().rbegin(); it != rest.coeffs().rend(); ++it) {
                const long double c = static_cast<long double>(it->get_d());
                acc = acc * z + c;
                scale += std::fabs(c);
            }
            if (std::abs(acc) > 1e-9L * scale) continue;
        }
        const IntPoly& cyc = cyclotomic_polynomial(m);
        IntPoly q;
        while (rest.degree() >= cyc.degree() && rest.divide_exact_monic(cyc, q)) {
            rest = std::move(q);
            f.multiply_by(m, 1);
        }
    }
    if (rest.degree() != 0 || rest.leading() != 1) return std::nullopt;
    return f;
}

}  // namespace brieskorn
