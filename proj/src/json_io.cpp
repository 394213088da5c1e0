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

#include "brieskorn/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace brieskorn {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("JSON: " + what); }

}  // namespace

Json integer_json(const mpz_class& z) {
    if (mpz_fits_slong_p(z.get_mpz_t())) return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.dump());
        return z;
    }
    bad("expected an integer, got " + j.dump());
}

Json rational_json(const mpq_class& q) {
    if (q.get_den() == 1) return integer_json(q.get_num());
    return Json(q.get_str());
}

mpq_class rational_from_json(const Json& j) {
    if (j.is_number_integer()) return mpq_class(integer_from_json(j));
    if (!j.is_string()) bad("expected a rational, got " + j.dump());
    mpq_class q;
    const std::string s = j.get<std::string>();
    if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) bad("not a rational: " + s);
    q.canonicalize();
    return q;
}

Json to_json(const ExponentMultiset& e) {
    Json a = Json::array();
    for (unsigned long v : e) a.push_back(v);
    return a;
}

Json to_json(const LambdaCombo& x) {
    Json a = Json::array();
    for (const auto& [idx, c] : x.terms()) a.push_back(Json::array({idx, integer_json(c)}));
    return a;
}

Json to_json(const CycloFactorization& f) {
    Json a = Json::array();
    for (const auto& [m, k] : f.factors()) a.push_back(Json::array({m, integer_json(k)}));
    return a;
}

Json to_json(const RatMatrix& a) {
    Json data = Json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(rational_json(a(i, j)));
        data.push_back(std::move(row));
    }
    return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

Json to_json(const SeifertPresentation& p) {
    Json j = to_json(p.L);
    j["parity"] = p.parity;
    return j;
}

Json to_json(const JumpReport& r) {
    Json a = Json::array();
    for (const auto& [x, v] : r.values) a.push_back(Json::array({x, v}));
    return a;
}

Json to_json(const IndependenceCertificate& c) {
    Json fam = Json::array();
    for (const auto& e : c.family) fam.push_back(to_json(e));
    Json chain = Json::array();
    for (const auto& s : c.chain) {
        Json others = Json::array();
        for (const auto& [idx, v] : s.others)
            others.push_back(Json{{"member", idx}, {"exponents", to_json(c.family[idx])}, {"jump", v}});
        chain.push_back(Json{{"member", s.member},
                             {"exponents", to_json(c.family[s.member])},
                             {"M", integer_json(s.M)},
                             {"at", "1/" + s.M.get_str()},
                             {"jump", s.value},
                             {"others", std::move(others)}});
    }
    return Json{{"family", std::move(fam)},
                {"M", c.chain.empty() ? Json(nullptr) : integer_json(c.M())},
                {"valid", c.valid},
                {"chain", std::move(chain)}};
}

Json to_json(const IntPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(integer_json(c));
    return a;
}

ExponentMultiset exponents_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) bad("exponents must be a nonempty array");
    std::vector<unsigned long> v;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 2) bad("invalid exponent " + x.dump());
        v.push_back(x.get<unsigned long>());
    }
    return ExponentMultiset(std::move(v));
}

LambdaCombo lambda_from_json(const Json& j) {
    if (!j.is_array()) bad("Lambda combination must be an array");
    LambdaCombo x;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || t[0].get<long long>() < 1)
            bad("bad Lambda term " + t.dump());
        x += LambdaCombo::lambda(t[0].get<unsigned long>(), integer_from_json(t[1]));
    }
    return x;
}

CycloFactorization cyclo_from_json(const Json& j) {
    if (!j.is_array()) bad("factorization must be an array");
    CycloFactorization f;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || t[0].get<long long>() < 1)
            bad("bad factor " + t.dump());
        f.multiply_by(t[0].get<unsigned long>(), integer_from_json(t[1]));
    }
    return f;
}

RatMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        bad("matrix needs rows, cols and data");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned()) bad("rows and cols must be nonnegative");
    const auto r = j["rows"].get<std::size_t>();
    const auto c = j["cols"].get<std::size_t>();
    const Json& data = j["data"];
    if (!data.is_array() || data.size() != r) bad("data must have " + std::to_string(r) + " rows");
    RatMatrix a(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!data[i].is_array() || data[i].size() != c) bad("row " + std::to_string(i) + " must have " + std::to_string(c) + " entries");
        for (std::size_t k = 0; k < c; ++k) a(i, k) = rational_from_json(data[i][k]);
    }
    return a;
}

SeifertPresentation presentation_from_json(const Json& j) {
    SeifertPresentation p{matrix_from_json(j), 1};
    if (j.contains("parity")) {
        const Json& q = j["parity"];
        if (!q.is_number_integer() || (q.get<int>() != 1 && q.get<int>() != -1)) bad("parity must be 1 or -1");
        p.parity = q.get<int>();
    }
    if (!p.L.is_square()) bad("Seifert matrix must be square");
    return p;
}

SeifertPresentation read_presentation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
    return presentation_from_json(j);
}

}  // namespace brieskorn
