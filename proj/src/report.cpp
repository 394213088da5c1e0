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

#include "brieskorn/report.hpp"

#include <sstream>

#include "brieskorn/signatures.hpp"

namespace brieskorn {

std::string set_string(const std::vector<unsigned long>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string equivariant_string(const std::map<unsigned long, long>& eq) {
    std::string out;
    for (auto it = eq.rbegin(); it != eq.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += std::to_string(it->first) + ":" + std::to_string(it->second);
    }
    return out;
}

AnalysisReport analyze(const ExponentMultiset& e, std::optional<long> n) {
    AnalysisReport r;
    r.exponents = e;
    r.n = n.value_or(e.n());
    r.sphericity = is_spherical(e, r.n);
    r.divisor = alexander_divisor(e);
    r.cyclotomic = to_cyclotomic(r.divisor);
    r.milnor_number = e.milnor_number();
    r.essential_set = essential_exponent_set(e);
    r.alexander_at_one = r.cyclotomic.multiplicity(1) > 0 ? mpz_class(0) : evaluate_at_one(r.divisor);
    r.signature = lattice_signature(e);
    r.equivariant = equivariant_signatures(e);
    return r;
}

CompareReport compare(const ExponentMultiset& a, const ExponentMultiset& b) {
    CompareReport c;
    c.first = analyze(a);
    c.second = analyze(b);
    c.identical = a == b;
    c.same_dimension = a.size() == b.size();
    c.fox_milnor = fox_milnor(a, b);
    c.mod2_congruent = congruent_mod2(c.first.divisor, c.second.divisor);
    c.shared_factor = shared_cyclotomic_factor(c.first.divisor, c.second.divisor);
    c.excluded_by_fox_milnor = !c.fox_milnor;
    c.excluded_by_signature = c.first.signature != c.second.signature;
    return c;
}

namespace {

Json equivariant_json(const std::map<unsigned long, long>& eq) {
    Json a = Json::array();
    for (auto it = eq.rbegin(); it != eq.rend(); ++it) a.push_back(Json::array({it->first, it->second}));
    return a;
}

}  // namespace

Json to_json(const AnalysisReport& r) {
    return Json{{"exponents", to_json(r.exponents)},
                {"n", r.n},
                {"milnor_number", integer_json(r.milnor_number)},
                {"divisor", to_json(r.divisor)},
                {"divisor_text", r.divisor.to_string()},
                {"cyclotomic", to_json(r.cyclotomic)},
                {"cyclotomic_text", r.cyclotomic.to_string()},
                {"essential_set", r.essential_set},
                {"spherical", r.sphericity.spherical},
                {"n2_caveat", r.sphericity.n2_caveat},
                {"alexander_at_one", integer_json(r.alexander_at_one)},
                {"signature", r.signature},
                {"equivariant", equivariant_json(r.equivariant)}};
}

Json to_json(const CompareReport& r) {
    return Json{{"first", to_json(r.first)},
                {"second", to_json(r.second)},
                {"identical", r.identical},
                {"same_dimension", r.same_dimension},
                {"fox_milnor", r.fox_milnor},
                {"mod2_congruent", r.mod2_congruent},
                {"shared_factor", r.shared_factor ? Json(*r.shared_factor) : Json(nullptr)},
                {"excluded_by_fox_milnor", r.excluded_by_fox_milnor},
                {"excluded_by_signature", r.excluded_by_signature}};
}

std::string to_text(const AnalysisReport& r) {
    std::ostringstream os;
    os << "exponents: " << r.exponents.to_string() << '\n'
       << "n: " << r.n << '\n'
       << "milnor number: " << r.milnor_number << '\n'
       << "divisor: " << r.divisor.to_string() << '\n'
       << "cyclotomic: " << r.cyclotomic.to_string() << '\n'
       << "essential set: " << set_string(r.essential_set) << '\n'
       << "spherical: " << (r.sphericity.spherical ? "yes" : "no")
       << (r.sphericity.n2_caveat ? " (n = 2: homology sphere criterion)" : "") << '\n'
       << "alexander at 1: " << r.alexander_at_one << '\n'
       << "signature: " << r.signature << '\n'
       << "equivariant: " << equivariant_string(r.equivariant) << '\n';
    return os.str();
}

std::string to_text(const CompareReport& r) {
    std::ostringstream os;
    os << "first: " << r.first.exponents.to_string() << '\n'
       << "second: " << r.second.exponents.to_string() << '\n'
       << "identical: " << (r.identical ? "yes" : "no") << '\n'
       << "same dimension: " << (r.same_dimension ? "yes" : "no") << '\n'
       << "essential sets: " << set_string(r.first.essential_set) << ' ' << set_string(r.second.essential_set)
       << '\n'
       << "fox-milnor: " << (r.fox_milnor ? "true" : "false") << '\n'
       << "mod 2 congruent: " << (r.mod2_congruent ? "true" : "false") << '\n'
       << "shared factor: " << (r.shared_factor ? "phi" + std::to_string(*r.shared_factor) : "none") << '\n'
       << "signatures: " << r.first.signature << ' ' << r.second.signature << '\n';
    if (r.excluded_by_fox_milnor) os << "cobordism excluded by fox-milnor\n";
    if (r.excluded_by_signature) os << "cobordism excluded by signature\n";
    if (!r.excluded_by_fox_milnor && !r.excluded_by_signature) os << "all obstructions pass\n";
    return os.str();
}

}  // namespace brieskorn
