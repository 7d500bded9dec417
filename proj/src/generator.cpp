/*
    Copyright 2026 The rbac-sev Authors

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

#include "rbacsev/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "rbacsev/error.hpp"
#include "rbacsev/parser.hpp"

namespace rbacsev {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

} // namespace

RoleTree generate_tree(const GenParams& params) {
    if (params.roles == 0 || params.perms == 0 || params.max_children == 0 || params.max_leaf_perms == 0) {
        throw InvalidParams("roles, perms, max-children and max-leaf-perms must all be at least 1");
    }

    std::mt19937_64 rng(params.seed);
    const std::size_t n = params.roles;
    const std::size_t m = params.perms;

    std::vector<std::size_t> child_count(n, 0);
    std::vector<std::size_t> open{0}; // roles with room for another child
    RoleTreeParts parts;
    parts.root = RoleId("r1");
    for (std::size_t r = 1; r < n; ++r) {
        const std::size_t slot = uniform(rng, 0, open.size() - 1);
        const std::size_t parent = open[slot];
        parts.edges.emplace_back(RoleId("r" + std::to_string(parent + 1)), RoleId("r" + std::to_string(r + 1)));
        if (++child_count[parent] == params.max_children) {
            open[slot] = open.back();
            open.pop_back();
        }
        open.push_back(r);
    }

    std::vector<std::size_t> leaf_roles;
    for (std::size_t r = 0; r < n; ++r) {
        if (child_count[r] == 0) {
            leaf_roles.push_back(r);
        }
    }
    const std::size_t cap = std::min(params.max_leaf_perms, m);
    if (leaf_roles.size() * cap < m) {
        throw InvalidParams("cannot place " + std::to_string(m) + " permissions on " +
                            std::to_string(leaf_roles.size()) + " leaves with at most " + std::to_string(cap) +
                            " each");
    }

    std::vector<std::size_t> all_perms(m);
    std::iota(all_perms.begin(), all_perms.end(), 0);
    std::vector<std::vector<std::size_t>> drawn(leaf_roles.size());
    std::vector<bool> used(m, false);
    for (auto& set : drawn) {
        const std::size_t size = uniform(rng, 1, cap);
        std::sample(all_perms.begin(), all_perms.end(), std::back_inserter(set), size, rng);
        for (const auto p : set) {
            used[p] = true;
        }
    }

    // Every permission must occur somewhere; room is guaranteed by the check above.
    for (std::size_t p = 0; p < m; ++p) {
        if (used[p]) {
            continue;
        }
        std::vector<std::size_t> roomy;
        for (std::size_t l = 0; l < drawn.size(); ++l) {
            if (drawn[l].size() < cap) {
                roomy.push_back(l);
            }
        }
        if (roomy.empty()) {
            // Every leaf is full: swap p in for a permission that occurs more than once.
            std::vector<std::size_t> occurrences(m, 0);
            for (const auto& set : drawn) {
                for (const auto q : set) {
                    ++occurrences[q];
                }
            }
            bool placed = false;
            for (auto& set : drawn) {
                for (auto& q : set) {
                    if (occurrences[q] > 1) {
                        q = p;
                        placed = true;
                        break;
                    }
                }
                if (placed) {
                    break;
                }
            }
            if (!placed) {
                throw InvalidParams("no room left to place permission p" + std::to_string(p + 1));
            }
        } else {
            drawn[roomy[uniform(rng, 0, roomy.size() - 1)]].push_back(p);
        }
        used[p] = true;
    }

    for (std::size_t l = 0; l < leaf_roles.size(); ++l) {
        std::vector<PermissionId> perms;
        for (const auto p : drawn[l]) {
            perms.emplace_back("p" + std::to_string(p + 1));
        }
        parts.assignments.emplace_back(RoleId("r" + std::to_string(leaf_roles[l] + 1)), std::move(perms));
    }
    return RoleTree::from_parts(parts);
}

std::string generate_policy(const GenParams& params) {
    return serialize(generate_tree(params));
}

} // namespace rbacsev
