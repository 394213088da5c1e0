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

#include "brieskorn/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace brieskorn {

IntPoly::IntPoly(std::initializer_list<long> low_to_high) {
    c_.reserve(low_to_high.size());
    for (long v : low_to_high) c_.emplace_back(v);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> low_to_high) : c_(std::move(low_to_high)) { trim(); }

IntPoly IntPoly::monomial(std::size_t degree, const mpz_class& c) {
    IntPoly p;
    if (c == 0) return p;
    p.c_.assign(degree + 1, 0);
    p.c_[degree] = c;
    return p;
}

IntPoly IntPoly::constant(const mpz_class& c) { return monomial(0, c); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPoly::evaluate(const mpz_class& t) const {
    mpz_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

mpq_class IntPoly::evaluate(const mpq_class& t) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * t + mpq_class(*it);
    }
    return acc;
}

IntPoly IntPoly::negated_variable() const {
    IntPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] != 0) mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly operator-(IntPoly a) {
    for (auto& c : a.c_) c = -c;
    return a;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result = constant(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

bool IntPoly::divide_exact_monic(const IntPoly& d, IntPoly& quotient) const {
    if (d.is_zero() || d.leading() != 1) throw std::invalid_argument("divide_exact_monic: divisor must be monic");
    if (is_zero()) {
        quotient = {};
        return true;
    }
    if (degree() < d.degree()) return false;
    std::vector<mpz_class> rem = c_;
    const std::size_t dd = static_cast<std::size_t>(d.degree());
    std::vector<mpz_class> q(rem.size() - dd, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const mpz_class lead = rem[k + dd];
        q[k] = lead;
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            if (d.c_[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), lead.get_mpz_t(), d.c_[j].get_mpz_t());
        }
    }
    for (std::size_t j = 0; j < dd; ++j) {
        if (rem[j] != 0) return false;
    }
    quotient = IntPoly(std::move(q));
    return true;
}

std::string IntPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const mpz_class& c = c_[k];
        if (c == 0) continue;
        const mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || k == 0) os << mag;
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

unsigned long totient(unsigned long m) {
    unsigned long result = m;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

int moebius(unsigned long m) {
    int sign = 1;
    for (unsigned long p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        m /= p;
        if (m % p == 0) return 0;
        sign = -sign;
    }
    if (m > 1) sign = -sign;
    return sign;
}

const IntPoly& cyclotomic_polynomial(unsigned long m) {
    if (m == 0) throw std::invalid_argument("cyclotomic_polynomial: index must be positive");
    thread_local std::unordered_map<unsigned long, IntPoly> cache;
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    // phi_m = prod_{d | m} (t^d - 1)^{mu(m/d)}
    IntPoly acc = IntPoly::constant(1);
    std::vector<unsigned long> denominators;
    for (unsigned long d = 1; d <= m; ++d) {
        if (m % d) continue;
        const int mu = moebius(m / d);
        if (mu == 1) {
            acc *= IntPoly::monomial(d) - IntPoly::constant(1);
        } else if (mu == -1) {
            denominators.push_back(d);
        }
    }
    for (unsigned long d : denominators) {
        IntPoly q;
        if (!acc.divide_exact_monic(IntPoly::monomial(d) - IntPoly::constant(1), q)) {
            throw std::logic_error("cyclotomic_polynomial: inexact division");
        }
        acc = std::move(q);
    }
    return cache.emplace(m, std::move(acc)).first->second;
}

}  // namespace brieskorn
