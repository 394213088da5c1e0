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

#ifndef BRIESKORN_EXPONENTS_HPP
#define BRIESKORN_EXPONENTS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "brieskorn/exponent_multiset.hpp"

namespace brieskorn {

/// Reduced exponent set: drop even values occurring an even number of
/// times, deduplicate, then drop every value that is a proper multiple of
/// another odd value still present. Sorted ascending.
std::vector<unsigned long> essential_exponent_set(const ExponentMultiset& e);

/// Equality of essential exponent sets.
bool fox_milnor(const ExponentMultiset& f, const ExponentMultiset& g);

struct GraphComponent {
    std::vector<std::size_t> vertices;
    bool isolated = false;
    // odd number of vertices, all even, pairwise gcd exactly 2
    bool odd_two_component = false;
};

struct BrieskornGraph {
    std::vector<unsigned long> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<GraphComponent> components;

    std::size_t isolated_count() const;
};

/// Vertices are the entries of e (with repetition); i, j are joined iff
/// gcd(a_i, a_j) > 1.
BrieskornGraph brieskorn_graph(const ExponentMultiset& e);

struct SphericityVerdict {
    bool spherical = false;
    // n == 2: the criterion decides homology spheres only
    bool n2_caveat = false;
};

/// At least two isolated vertices, or exactly one isolated vertex and an odd
/// 2-component elsewhere in the graph. Throws std::invalid_argument unless
/// e.size() == n + 1.
SphericityVerdict is_spherical(const ExponentMultiset& e, long n);

/// Members pairwise coprime internally, with pairwise distinct products.
/// Throws std::invalid_argument if the members differ in size.
bool is_good_family(const std::vector<ExponentMultiset>& family);

}  // namespace brieskorn

#endif
