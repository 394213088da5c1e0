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

#ifndef BRIESKORN_REPORT_HPP
#define BRIESKORN_REPORT_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brieskorn/exponent_multiset.hpp"
#include "brieskorn/exponents.hpp"
#include "brieskorn/groupring.hpp"
#include "brieskorn/json_io.hpp"

namespace brieskorn {

struct AnalysisReport {
    ExponentMultiset exponents;
    long n = 0;
    LambdaCombo divisor;
    CycloFactorization cyclotomic;
    mpz_class milnor_number;
    std::vector<unsigned long> essential_set;
    SphericityVerdict sphericity;
    mpz_class alexander_at_one;  // 0 when phi_1 divides the polynomial
    long signature = 0;
    std::map<unsigned long, long> equivariant;  // cyclotomic index -> signature
};

/// n defaults to exponents.size() - 1; a different n throws std::invalid_argument.
AnalysisReport analyze(const ExponentMultiset& e, std::optional<long> n = std::nullopt);

struct CompareReport {
    AnalysisReport first;
    AnalysisReport second;
    bool identical = false;
    bool same_dimension = false;
    bool fox_milnor = false;   // essential sets agree
    bool mod2_congruent = false;  // divisors agree mod 2
    std::optional<unsigned long> shared_factor;
    bool excluded_by_fox_milnor = false;
    bool excluded_by_signature = false;
};

CompareReport compare(const ExponentMultiset& a, const ExponentMultiset& b);

Json to_json(const AnalysisReport& r);
Json to_json(const CompareReport& r);
std::string to_text(const AnalysisReport& r);
std::string to_text(const CompareReport& r);

/// "{3,8}"
std::string set_string(const std::vector<unsigned long>& s);
/// "12:8 6:0 3:6", decreasing index
std::string equivariant_string(const std::map<unsigned long, long>& eq);

}  // namespace brieskorn

#endif
