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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "rbacsev/analysis.hpp"
#include "rbacsev/error.hpp"
#include "rbacsev/generator.hpp"
#include "rbacsev/severity.hpp"

using namespace rbacsev;

namespace {

WeightedTree weigh(const RoleTree& tree) {
    return assign_weights(extend(tree), compute_closure(tree));
}

std::vector<std::string> path_names(const PathContribution& c) {
    std::vector<std::string> out;
    for (const auto& r : c.roles) {
        out.push_back(r.str());
    }
    return out;
}

std::map<std::string, Rational> severities(const SeverityReport& report) {
    std::map<std::string, Rational> out;
    for (const auto& e : report.entries()) {
        out.emplace(e.permission.str(), e.severity.value());
    }
    return out;
}

RoleTree random_tree(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GenParams params;
    params.roles = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
    params.perms = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    params.max_children = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    params.max_leaf_perms = 20;
    params.seed = seed;
    return generate_tree(params);
}

// Rewrites a policy with a bijective renaming of roles and permissions.
std::string relabel(const std::string& text, const std::map<std::string, std::string>& roles,
                    const std::map<std::string, std::string>& perms) {
    const auto doc = parse(text);
    std::string out;
    for (const auto& e : doc.edges) {
        out += "edge " + roles.at(e.parent.str()) + " " + roles.at(e.child.str()) + "\n";
    }
    for (const auto& a : doc.assignments) {
        out += "assign " + roles.at(a.leaf.str());
        for (const auto& p : a.perms) {
            out += " " + perms.at(p.str());
        }
        out += "\n";
    }
    return out;
}

} // namespace

TEST_CASE("extend hangs one permission vertex per (leaf, permission)") {
    const auto tree = testing::paper_tree();
    const auto ext = extend(tree);
    CHECK(ext.permission_vertex_count() == 15);
    CHECK(ext.size() == 26);

    const auto r2 = tree.index_of(RoleId("r2"));
    const auto& kids = ext.vertex(r2).children;
    REQUIRE(kids.size() == 2);
    CHECK(*ext.vertex(kids[0]).permission == PermissionId("p2"));
    CHECK(*ext.vertex(kids[1]).permission == PermissionId("p3"));

    const auto r7 = tree.index_of(RoleId("r7"));
    REQUIRE(ext.vertex(r7).children.size() == 1);
    CHECK(*ext.vertex(ext.vertex(r7).children[0]).permission == PermissionId("p5"));

    // Internal structure untouched.
    for (RoleIndex r = 0; r < tree.size(); ++r) {
        if (!tree.is_leaf(r)) {
            CHECK(std::equal(ext.vertex(r).children.begin(), ext.vertex(r).children.end(),
                             tree.children(r).begin(), tree.children(r).end()));
        } else {
            CHECK(ext.vertex(r).children.size() == tree.direct_perms(r).size());
        }
    }
    for (VertexIndex v = tree.size(); v < ext.size(); ++v) {
        CHECK(ext.vertex(v).is_permission());
        CHECK(ext.vertex(v).children.empty());
    }
}

TEST_CASE("extend degenerate trees") {
    const auto single = extend(testing::tree_from_text("assign root p1 p2\n"));
    CHECK(single.vertex(0).children.size() == 2);

    const auto chain = extend(testing::tree_from_text("edge r1 r2\nassign r2 p1\n"));
    CHECK(chain.vertex(0).children == std::vector<VertexIndex>{1});
    CHECK(chain.vertex(1).children.size() == 1);
}

TEST_CASE("weights of the example tree") {
    const auto tree = testing::paper_tree();
    const auto wt = weigh(tree);
    auto w = [&](const char* role) { return *wt.weight(tree.index_of(RoleId(role))); };

    CHECK_FALSE(wt.weight(0).has_value());
    CHECK(w("r2") == Rational(1, 5));
    CHECK(w("r3") == Rational(2, 5));
    CHECK(w("r4") == Rational(2, 5));
    CHECK(w("r5") == Rational(3, 5));
    CHECK(w("r6") == Rational(2, 5));
    CHECK(w("r7") == Rational(1, 6));
    CHECK(w("r8") == Rational(1, 2));
    CHECK(w("r9") == Rational(1, 3));
    CHECK(w("r10") == Rational(3, 5));
    CHECK(w("r11") == Rational(2, 5));

    const auto& ext = wt.extended();
    for (const auto v : ext.vertex(tree.index_of(RoleId("r5"))).children) {
        CHECK(*wt.weight(v) == Rational(1, 3));
    }
    for (const auto v : ext.vertex(tree.index_of(RoleId("r7"))).children) {
        CHECK(*wt.weight(v) == Rational(1));
    }
}

TEST_CASE("sibling weights sum to one and only-children weigh one") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto wt = weigh(random_tree(seed));
        const auto& ext = wt.extended();
        CHECK_FALSE(wt.weight(0).has_value());
        for (VertexIndex v = 0; v < ext.size(); ++v) {
            const auto& kids = ext.vertex(v).children;
            if (kids.empty()) {
                continue;
            }
            Rational sum(0);
            for (const auto c : kids) {
                sum += *wt.weight(c);
            }
            CHECK(sum == Rational(1));
            if (kids.size() == 1) {
                CHECK(*wt.weight(kids[0]) == Rational(1));
            }
        }
    }
}

TEST_CASE("severities of the example tree") {
    const auto report = severity_by_paths(weigh(testing::paper_tree()));
    CHECK(report.severity(PermissionId("p1")) == Rational(4, 25));
    CHECK(report.severity(PermissionId("p2")) == Rational(13, 50));
    CHECK(report.severity(PermissionId("p3")) == Rational(37, 150));
    CHECK(report.severity(PermissionId("p4")) == Rational(4, 25));
    CHECK(report.severity(PermissionId("p5")) == Rational(13, 75));
    CHECK(report.total() == Rational(1));

    const auto& p1 = report.at(PermissionId("p1")).contributions;
    REQUIRE(p1.size() == 3);
    CHECK(p1[0].product == Rational(2, 25));
    CHECK(p1[1].product == Rational(1, 25));
    CHECK(p1[2].product == Rational(1, 25));

    std::vector<std::string> ranking;
    for (const auto& p : report.ranking()) {
        ranking.push_back(p.str());
    }
    CHECK(ranking == std::vector<std::string>{"p2", "p3", "p5", "p1", "p4"});
}

TEST_CASE("example severities agree with the independent oracle") {
    const auto text = testing::read_fixture("paper_example.policy");
    const auto expected = testing::SeverityOracle(parse(text)).severities();
    const auto report = severity_by_paths(weigh(testing::tree_from_text(text)));
    REQUIRE(expected.size() == report.entries().size());
    for (const auto& [perm, value] : expected) {
        const auto got = report.severity(PermissionId(perm));
        CHECK(got == Rational(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value)));
    }
}

TEST_CASE("degenerate severities") {
    const auto single = severity_by_paths(weigh(testing::tree_from_text("assign r1 p1\n")));
    CHECK(single.severity(PermissionId("p1")) == Rational(1));

    const auto pair = severity_by_mass_flow(weigh(testing::tree_from_text("assign r1 p1 p2\n")));
    CHECK(pair.severity(PermissionId("p1")) == Rational(1, 2));
    CHECK(pair.severity(PermissionId("p2")) == Rational(1, 2));

    const auto chain =
        severity_by_mass_flow(weigh(testing::tree_from_text("edge a b\nedge b c\nedge c d\nedge d e\nassign e p1\n")));
    CHECK(chain.severity(PermissionId("p1")) == Rational(1));
}

TEST_CASE("mass flow reproduces the path sum on the example") {
    const auto wt = weigh(testing::paper_tree());
    const auto paths = severity_by_paths(wt);
    const auto flow = severity_by_mass_flow(wt);
    CHECK(severities(paths) == severities(flow));
    CHECK(paths == flow);
}

TEST_CASE("explain") {
    const auto report = severity_by_paths(weigh(testing::paper_tree()));

    const auto p5 = explain(report, PermissionId("p5"));
    REQUIRE(p5.size() == 3);
    CHECK(path_names(p5[0]) == std::vector<std::string>{"r1", "r4", "r7"});
    CHECK(p5[0].product == Rational(1, 15));
    CHECK(path_names(p5[1]) == std::vector<std::string>{"r1", "r4", "r8", "r10"});
    CHECK(p5[1].product == Rational(1, 25));
    CHECK(path_names(p5[2]) == std::vector<std::string>{"r1", "r4", "r9"});
    CHECK(p5[2].product == Rational(1, 15));

    const auto p2 = explain(report, PermissionId("p2"));
    REQUIRE(p2.size() == 3);
    CHECK(p2[0].roles.back() == RoleId("r2"));
    CHECK(p2[1].roles.back() == RoleId("r5"));
    CHECK(p2[2].roles.back() == RoleId("r6"));

    CHECK_THROWS_AS(explain(report, PermissionId("p9")), UnknownPermission);

    const auto single = severity_by_paths(weigh(testing::tree_from_text("assign r1 p1\n")));
    const auto one = explain(single, PermissionId("p1"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].product == Rational(1));
}

TEST_CASE("paths equal mass flow and the oracle on random trees") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto tree = random_tree(seed);
        const auto wt = weigh(tree);
        const auto paths = severity_by_paths(wt);
        const auto flow = severity_by_mass_flow(wt);
        REQUIRE(severities(paths) == severities(flow));
        CHECK(paths.total() == Rational(1));
        for (const auto& e : paths.entries()) {
            CHECK(Rational(0) < e.severity.value());
            Rational sum(0);
            for (const auto& c : e.contributions) {
                sum += c.product;
            }
            CHECK(sum == e.severity.value());
        }
        if (seed % 10 == 0) {
            const auto expected = testing::SeverityOracle(parse(serialize(tree))).severities();
            for (const auto& [perm, value] : expected) {
                CHECK(paths.severity(PermissionId(perm)) ==
                      Rational(boost::multiprecision::numerator(value), boost::multiprecision::denominator(value)));
            }
        }
    }
}

TEST_CASE("relabeling permutes the report without changing values") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto tree = random_tree(seed);
        const auto text = serialize(tree);
        const auto before = severities(severity_by_paths(weigh(tree)));

        std::mt19937_64 rng(seed);
        std::map<std::string, std::string> roles;
        for (const auto& id : tree.ids()) {
            roles[id.str()] = "role_" + id.str() + "_x";
        }
        std::vector<std::string> perm_names;
        for (const auto& [p, _] : before) {
            perm_names.push_back(p);
        }
        auto shuffled = perm_names;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::map<std::string, std::string> perms;
        for (std::size_t i = 0; i < perm_names.size(); ++i) {
            perms[perm_names[i]] = "perm." + shuffled[i];
        }

        const auto after = severities(severity_by_paths(weigh(testing::tree_from_text(relabel(text, roles, perms)))));
        REQUIRE(after.size() == before.size());
        for (const auto& [p, value] : before) {
            CHECK(after.at(perms.at(p)) == value);
        }
    }
}

TEST_CASE("sibling order never enters the values") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto tree = random_tree(seed);
        const auto doc = parse(serialize(tree));
        std::string reversed;
        for (auto it = doc.edges.rbegin(); it != doc.edges.rend(); ++it) {
            reversed += "edge " + it->parent.str() + " " + it->child.str() + "\n";
        }
        for (auto it = doc.assignments.rbegin(); it != doc.assignments.rend(); ++it) {
            reversed += "assign " + it->leaf.str();
            for (auto p = it->perms.rbegin(); p != it->perms.rend(); ++p) {
                reversed += " " + p->str();
            }
            reversed += "\n";
        }
        CHECK(severities(severity_by_paths(weigh(tree))) ==
              severities(severity_by_paths(weigh(testing::tree_from_text(reversed)))));
    }
}

TEST_CASE("a shallower single occurrence outranks a deeper one") {
    // a and b tie at the root; p sits one level further down, behind a split with weight 2/3.
    const auto tree = testing::tree_from_text("edge r a\nedge r b\nedge b c\nedge b d\n"
                                              "assign a q x\nassign c p x\nassign d x\n");
    const auto report = severity_by_paths(weigh(tree));
    CHECK(report.severity(PermissionId("q")) == Rational(1, 4));
    CHECK(report.severity(PermissionId("p")) == Rational(1, 6));
    CHECK(report.severity(PermissionId("p")) < report.severity(PermissionId("q")));

    // Splitting a leaf into single-permission children changes nothing.
    const auto deep = testing::tree_from_text("edge r a\nedge r b\nedge a a1\nedge a a2\n"
                                              "assign a1 q\nassign a2 z\nassign b y\n");
    const auto shallow = testing::tree_from_text("edge r a\nedge r b\nassign a q z\nassign b y\n");
    CHECK(severity_by_paths(weigh(deep)).severity(PermissionId("q")) ==
          severity_by_paths(weigh(shallow)).severity(PermissionId("q")));
}

TEST_CASE("analysis profiles") {
    const auto tree = testing::paper_tree();
    const auto analysis = analyze(tree);
    REQUIRE(analysis.profiles.size() == 5);
    struct Row {
        const char* perm;
        std::size_t roles, lo, hi;
    };
    for (const Row& row : {Row{"p1", 7, 0, 3}, Row{"p2", 5, 0, 2}, Row{"p3", 6, 0, 2}, Row{"p4", 7, 0, 3},
                           Row{"p5", 6, 0, 3}}) {
        const auto it = std::find_if(analysis.profiles.begin(), analysis.profiles.end(),
                                     [&](const PermissionProfile& p) { return p.permission == PermissionId(row.perm); });
        REQUIRE(it != analysis.profiles.end());
        CHECK(it->num_roles == row.roles);
        CHECK(it->min_level == row.lo);
        CHECK(it->max_level == row.hi);
    }
    CHECK(analysis.profiles.front().permission == PermissionId("p2"));
}
