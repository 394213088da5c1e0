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

#ifndef BRIESKORN_REPRODUCE_HPP
#define BRIESKORN_REPRODUCE_HPP

#include <string>
#include <vector>

#include "brieskorn/json_io.hpp"

namespace brieskorn {

struct ReproRow {
    std::string tag;  // section3 | section4 | section5
    int criterion = 0;
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string note;  // set when the expected value corrects a printed one
    double seconds = 0;
};

/// Tags accepted by reproduce(): the three tags above and criterion1 .. criterion11.
std::vector<std::string> reproduction_tags();

/// Runs every row whose tag or "criterion<k>" equals only; all rows when only
/// is empty. Throws std::invalid_argument for an unknown tag.
std::vector<ReproRow> reproduce(const std::string& only = "");

std::string to_text(const std::vector<ReproRow>& rows);
Json to_json(const std::vector<ReproRow>& rows);

}  // namespace brieskorn

#endif
