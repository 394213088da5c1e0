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

#include "brieskorn/exponents.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace brieskorn {

std::vector<unsigned long> essential_exponent_set(const ExponentMultiset& e) {
    std::map<unsigned long, std::size_t> count;
    for (unsigned long a : e) ++count[a];

    std::vector<unsigned long> kept;
    for (const auto& [a, c] : count) {
        if (a % 2 == 0 && c % 2 == 0) continue;
        kept.push_back(a);
    }

    // Divisibility is transitive and a minimal odd divisor is never itself
    // removed, so one pass against the deduplicated set reaches the fixpoint.
    std::vector<unsigned long> out;
    for (unsigned long a : kept) {
        bool drop = false;
        for (unsigned long b : kept) {
            if (b != a && b % 2 == 1 && a % b == 0) {
                drop = true;
                break;
            }
        }
        if (!drop) out.push_back(a);
    }
    return out;
}

bool fox_milnor(const ExponentMultiset& f, const ExponentMultiset& g) {
    return essential_exponent_set(f) == essential_exponent_set(g);
}

std::size_t BrieskornGraph::isolated_count() const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [](const GraphComponent& c) { return c.isolated; }));
}

BrieskornGraph brieskorn_graph(const ExponentMultiset& e) {
    BrieskornGraph g;
    g.vertices = e.entries();
    const std::size_t nv = g.vertices.size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            if (std::gcd(g.vertices[i], g.vertices[j]) > 1) {
                g.edges.emplace_back(i, j);
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }

    std::vector<bool> seen(nv, false);
    for (std::size_t s = 0; s < nv; ++s) {
        if (seen[s]) continue;
        GraphComponent comp;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            comp.vertices.push_back(v);
            for (std::size_t w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.vertices.begin(), comp.vertices.end());
        comp.isolated = comp.vertices.size() == 1;

        bool two = comp.vertices.size() % 2 == 1;
        for (std::size_t i = 0; two && i < comp.vertices.size(); ++i) {
            const unsigned long ai = g.vertices[comp.vertices[i]];
            if (ai % 2) two = false;
            for (std::size_t j = i + 1; two && j < comp.vertices.size(); ++j) {
                if (std::gcd(ai, g.vertices[comp.vertices[j]]) != 2) two = false;
            }
        }
        comp.odd_two_component = two;
        g.components.push_back(std::move(comp));
    }
    return g;
}

SphericityVerdict is_spherical(const ExponentMultiset& e, long n) {
    if (static_cast<long>(e.size()) != n + 1) {
        throw std::invalid_argument("is_spherical: expected " + std::to_string(n + 1) + " exponents, got " +
                                    std::to_string(e.size()));
    }
    const BrieskornGraph g = brieskorn_graph(e);
    SphericityVerdict v;
    v.n2_caveat = n == 2;
    const std::size_t iso = g.isolated_count();
    if (iso >= 2) {
        v.spherical = true;
    } else if (iso == 1) {
        // the odd 2-component has to be a component other than the isolated one
        for (const auto& c : g.components) {
            if (!c.isolated && c.odd_two_component) v.spherical = true;
        }
    }
    return v;
}

bool is_good_family(const std::vector<ExponentMultiset>& family) {
    std::set<mpz_class> products;
    for (const auto& member : family) {
        if (member.size() != family.front().size()) {
            throw std::invalid_argument("is_good_family: members have different sizes");
        }
        for (std::size_t i = 0; i < member.size(); ++i) {
            for (std::size_t j = i + 1; j < member.size(); ++j) {
                if (std::gcd(member[i], member[j]) != 1) return false;
            }
        }
        if (!products.insert(member.product()).second) return false;
    }
    return true;
}

}  // namespace brieskorn
