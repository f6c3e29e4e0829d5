// Copyright 2026 The qsw authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <set>

#include <doctest.h>

#include "qsw/graph.hpp"
#include "test_support.hpp"

using namespace qsw;

namespace {

Digraph figure1() { return Digraph(3, {{0, 2}, {1, 2}}); }

Digraph figure3() {
    return Digraph(4, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}, {0, 3}});
}

// brute-force moral graph straight from the definition: symmetric closure
// plus every pair with a common child
std::set<Arc> brute_force_moral(const Digraph& g) {
    std::set<Arc> arcs;
    for (const auto& [u, v] : g.arcs()) {
        arcs.insert({u, v});
        arcs.insert({v, u});
    }
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w) {
            if (u == w) continue;
            for (int c = 0; c < n; ++c)
                if (g.has_arc(u, c) && g.has_arc(w, c)) {
                    arcs.insert({u, w});
                    arcs.insert({w, u});
                }
        }
    return arcs;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("digraph construction validates input") {
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);   // self-loop
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(Digraph(2, {{-1, 0}}), std::invalid_argument);  // negative
    const Digraph g(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(g.arcs().size() == 2);  // duplicates collapse
}

TEST_CASE("indegree on the paper graphs") {
    const Digraph g1 = figure1();
    CHECK(g1.indegree(2) == 2);
    CHECK(g1.indegree(0) == 0);
    const Digraph empty(3, {});
    for (int v = 0; v < 3; ++v) CHECK(empty.indegree(v) == 0);
    CHECK(figure3().indegree(3) == 1);
    CHECK_THROWS_AS((void)g1.indegree(3), std::invalid_argument);
    CHECK_THROWS_AS((void)g1.indegree(-1), std::invalid_argument);
}

TEST_CASE("moral graph gains the common-parent edge") {
    const Digraph moral = moral_graph(figure1());
    CHECK(moral.has_arc(0, 1));
    CHECK(moral.has_arc(1, 0));
    CHECK(moral.has_arc(0, 2));
    CHECK(moral.has_arc(2, 0));

    const Digraph single = moral_graph(Digraph(2, {{0, 1}}));
    CHECK(single.arcs() == std::vector<Arc>{{0, 1}, {1, 0}});
}

TEST_CASE("moral graph matches the brute-force definition on random digraphs") {
    auto rng = test::make_rng();
    for (int rep = 0; rep < 50; ++rep) {
        const Digraph g = test::random_digraph(8, rng);
        const Digraph moral = moral_graph(g);
        const std::set<Arc> expected = brute_force_moral(g);
        const std::set<Arc> got(moral.arcs().begin(), moral.arcs().end());
        CHECK(got == expected);
    }
}

TEST_CASE("moral graph is idempotent") {
    auto rng = test::make_rng(2);
    for (int rep = 0; rep < 20; ++rep) {
        const Digraph m1 = moral_graph(test::random_digraph(8, rng));
        const Digraph m2 = moral_graph(m1);
        CHECK(m1.arcs() == m2.arcs());
    }
}

TEST_CASE("enlargement of the paper graphs") {
    const EnlargedGraph e1 = enlarge(figure1());
    CHECK(e1.total_dim() == 4);
    CHECK(e1.block_start(0) == 0);
    CHECK(e1.block_size(0) == 1);
    CHECK(e1.block_start(1) == 1);
    CHECK(e1.block_size(1) == 1);
    CHECK(e1.block_start(2) == 2);
    CHECK(e1.block_size(2) == 2);
    CHECK(e1.parent_rank(2, 0) == 0);
    CHECK(e1.parent_rank(2, 1) == 1);
    CHECK_THROWS_AS((void)e1.parent_rank(2, 2), std::invalid_argument);
    CHECK_THROWS_AS((void)e1.parent_rank(0, 1), std::invalid_argument);

    CHECK(enlarge(figure3()).total_dim() == 7);

    const EnlargedGraph isolated = enlarge(Digraph(4, {}));
    CHECK(isolated.total_dim() == 4);
    for (int v = 0; v < 4; ++v) {
        CHECK(isolated.block_size(v) == 1);
        CHECK(isolated.parents(v).empty());
    }
}

TEST_CASE("enlarged dimension counts indegrees plus sources") {
    auto rng = test::make_rng(4);
    for (int rep = 0; rep < 30; ++rep) {
        const Digraph g = test::random_digraph(8, rng);
        const EnlargedGraph eg = enlarge(g);
        std::size_t expected = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            const int d = g.indegree(v);
            expected += d > 0 ? static_cast<std::size_t>(d) : 1u;
        }
        CHECK(eg.total_dim() == expected);
    }
}

TEST_CASE("enlarged arcs project exactly onto the base arcs") {
    auto rng = test::make_rng(6);
    for (int rep = 0; rep < 30; ++rep) {
        const Digraph g = test::random_digraph(8, rng);
        const EnlargedGraph eg = enlarge(g);
        std::set<Arc> projected;
        for (std::size_t x = 0; x < eg.total_dim(); ++x)
            for (std::size_t y = 0; y < eg.total_dim(); ++y)
                if (eg.has_enlarged_arc(x, y))
                    projected.insert({eg.representative(x), eg.representative(y)});
        const std::set<Arc> base(g.arcs().begin(), g.arcs().end());
        CHECK(projected == base);
    }
}

TEST_CASE("parent ranks enumerate parents in ascending order") {
    auto rng = test::make_rng(8);
    for (int rep = 0; rep < 30; ++rep) {
        const Digraph g = test::random_digraph(8, rng);
        const EnlargedGraph eg = enlarge(g);
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& parents = eg.parents(v);
            CHECK(std::is_sorted(parents.begin(), parents.end()));
            CHECK(parents.size() == static_cast<std::size_t>(g.indegree(v)));
            std::set<int> ranks;
            for (int p : parents) ranks.insert(eg.parent_rank(v, p));
            CHECK(ranks.size() == parents.size());
            if (!parents.empty()) {
                CHECK(*ranks.begin() == 0);
                CHECK(*ranks.rbegin() == static_cast<int>(parents.size()) - 1);
            }
        }
    }
}

TEST_CASE("edge list parsing") {
    const Digraph g = Digraph::parse_edge_list(
        "# comment\n"
        "3\n"
        "0 2\n"
        "1 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.arcs() == figure1().arcs());

    const Digraph undirected = Digraph::parse_edge_list("2\n0 1 undirected\n");
    CHECK(undirected.has_arc(0, 1));
    CHECK(undirected.has_arc(1, 0));

    CHECK_THROWS_AS(Digraph::parse_edge_list("3\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::parse_edge_list("3\n0 1 directed\n"), std::invalid_argument);
    CHECK_THROWS_AS(Digraph::parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("json round trip") {
    const Digraph g = figure3();
    const Digraph parsed = Digraph::parse_json(g.to_json());
    CHECK(parsed.vertex_count() == g.vertex_count());
    CHECK(parsed.arcs() == g.arcs());
    CHECK_THROWS_AS(Digraph::parse_json("{\"arcs\": []}"), std::invalid_argument);
}

TEST_CASE("path recognition") {
    CHECK(Digraph::path(5).is_path());
    CHECK(Digraph::path(1).is_path());
    CHECK(!figure1().is_path());
    CHECK(!Digraph(3, {{0, 1}, {1, 0}, {1, 2}}).is_path());
}

TEST_SUITE_END();
