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

// JSON forms of the library types.
//   LambdaCombo        [[index, coeff], ...], decreasing index
//   CycloFactorization [[m, multiplicity], ...], decreasing m
//   RatMatrix          {"rows": r, "cols": c, "data": [[...], ...]}, entries
//                      are integers or "p/q" strings
//   SeifertPresentation adds "parity": 1 | -1 to the matrix object
//   JumpReport         [[r, value], ...]
// Integers outside the int64 range are written as decimal strings.

#ifndef BRIESKORN_JSON_IO_HPP
#define BRIESKORN_JSON_IO_HPP

#include <gmpxx.h>

#include <string>

#include "brieskorn/groupring.hpp"
#include "brieskorn/ratmatrix.hpp"
#include "brieskorn/seifert.hpp"
#include "brieskorn/signatures.hpp"
#include "json.hpp"

namespace brieskorn {

using Json = nlohmann::ordered_json;

Json integer_json(const mpz_class& z);
mpz_class integer_from_json(const Json& j);
Json rational_json(const mpq_class& q);
mpq_class rational_from_json(const Json& j);

Json to_json(const ExponentMultiset& e);
Json to_json(const LambdaCombo& x);
Json to_json(const CycloFactorization& f);
Json to_json(const RatMatrix& a);
Json to_json(const SeifertPresentation& p);
Json to_json(const JumpReport& r);
Json to_json(const IndependenceCertificate& c);
Json to_json(const IntPoly& p);  // coefficients, low degree first

// All readers throw std::invalid_argument on malformed input.
ExponentMultiset exponents_from_json(const Json& j);
LambdaCombo lambda_from_json(const Json& j);
CycloFactorization cyclo_from_json(const Json& j);
RatMatrix matrix_from_json(const Json& j);
SeifertPresentation presentation_from_json(const Json& j);

/// Reads a matrix or presentation file; parity defaults to +1 when absent.
SeifertPresentation read_presentation_file(const std::string& path);

}  // namespace brieskorn

#endif
