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

#ifndef BRIESKORN_EXPONENT_MULTISET_HPP
#define BRIESKORN_EXPONENT_MULTISET_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace brieskorn {

/// Exponents a_1, ..., a_{n+1} of z_1^{a_1} + ... + z_{n+1}^{a_{n+1}}.
/// Stored sorted ascending; every entry is at least 2.
class ExponentMultiset {
   public:
    ExponentMultiset() = default;
    ExponentMultiset(std::initializer_list<unsigned long> entries);
    explicit ExponentMultiset(std::vector<unsigned long> entries);

    /// Parses "3,4,4,6,9". Throws std::invalid_argument naming the bad token.
    static ExponentMultiset parse(std::string_view text);

    const std::vector<unsigned long>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }
    unsigned long operator[](std::size_t i) const { return entries_[i]; }

    /// Complex dimension parameter n, i.e. size() - 1.
    long n() const { return static_cast<long>(entries_.size()) - 1; }
    /// Milnor number prod(a_i - 1).
    mpz_class milnor_number() const;
    /// prod(a_i)
    mpz_class product() const;

    ExponentMultiset with(unsigned long extra) const;

    std::string to_string() const;

    friend bool operator==(const ExponentMultiset&, const ExponentMultiset&) = default;
    friend auto operator<=>(const ExponentMultiset&, const ExponentMultiset&) = default;

   private:
    std::vector<unsigned long> entries_;
};

/// Parses "2,3,5;2,3,7".
std::vector<ExponentMultiset> parse_family(std::string_view text);

}  // namespace brieskorn

#endif
