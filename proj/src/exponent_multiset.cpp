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

#include "brieskorn/exponent_multiset.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace brieskorn {

namespace {

void validate(const std::vector<unsigned long>& entries) {
    for (unsigned long a : entries) {
        if (a < 2) throw std::invalid_argument("exponent must be >= 2, got " + std::to_string(a));
    }
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

ExponentMultiset::ExponentMultiset(std::initializer_list<unsigned long> entries)
    : ExponentMultiset(std::vector<unsigned long>(entries)) {}

ExponentMultiset::ExponentMultiset(std::vector<unsigned long> entries) : entries_(std::move(entries)) {
    validate(entries_);
    std::sort(entries_.begin(), entries_.end());
}

ExponentMultiset ExponentMultiset::parse(std::string_view text) {
    std::vector<unsigned long> out;
    text = strip(text);
    if (text.empty()) throw std::invalid_argument("empty exponent list");
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view raw = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        const std::string_view tok = strip(raw);
        unsigned long v = 0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (tok.empty() || ec != std::errc() || ptr != last) {
            throw std::invalid_argument("invalid exponent token '" + std::string(tok) + "'");
        }
        if (v < 2) throw std::invalid_argument("invalid exponent token '" + std::string(tok) + "': must be >= 2");
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return ExponentMultiset(std::move(out));
}

mpz_class ExponentMultiset::milnor_number() const {
    mpz_class r = 1;
    for (unsigned long a : entries_) r *= a - 1;
    return r;
}

mpz_class ExponentMultiset::product() const {
    mpz_class r = 1;
    for (unsigned long a : entries_) r *= a;
    return r;
}

ExponentMultiset ExponentMultiset::with(unsigned long extra) const {
    auto e = entries_;
    e.push_back(extra);
    return ExponentMultiset(std::move(e));
}

std::string ExponentMultiset::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(entries_[i]);
    }
    return s;
}

std::vector<ExponentMultiset> parse_family(std::string_view text) {
    std::vector<ExponentMultiset> family;
    std::size_t pos = 0;
    while (true) {
        const std::size_t semi = text.find(';', pos);
        family.push_back(
            ExponentMultiset::parse(text.substr(pos, semi == std::string_view::npos ? text.npos : semi - pos)));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    return family;
}

}  // namespace brieskorn
