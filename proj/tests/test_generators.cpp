#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iso/generators.hpp"

#include <algorithm>
#include <set>

using namespace iso;

TEST_CASE("basic families") {
    CHECK(complete_graph(0).vertex_count() == 0);
    CHECK(complete_graph(5).edge_count() == 10);
    CHECK(star_graph(4).vertex_count() == 5);
    CHECK(star_graph(4).degree(1) == 4);
    CHECK(star_graph(1).edge_count() == 1);
    CHECK_THROWS_AS(star_graph(0), std::invalid_argument);
    CHECK(path_graph(1).edge_count() == 0);
    CHECK(path_graph(5).edge_count() == 4);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
    CHECK(cycle_graph(1).vertex_count() == 1);          // alias K_1
    CHECK(cycle_graph(2).edge_count() == 1);            // alias K_2
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(is_regular(cycle_graph(5)) == 2);
    CHECK_THROWS_AS(cycle_graph(0), std::invalid_argument);
}

TEST_CASE("mod_star") {
    CHECK(mod_star(5, 5) == 5);
    CHECK(mod_star(6, 5) == 1);
    CHECK(mod_star(10, 5) == 5);
    CHECK(mod_star(3, 7) == 3);
    CHECK(mod_star(14, 7) == 7);
    CHECK_THROWS_AS(mod_star(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(mod_star(5, 0), std::invalid_argument);
}

TEST_CASE("cycle powers") {
    Graph g = cycle_power(10, 2);
    CHECK(g.vertex_count() == 10);
    CHECK(g.edge_count() == 20);
    CHECK(is_regular(g) == 4);
    // Independent adjacency oracle: edge iff cyclic distance <= 2.
    for (int i = 1; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j) {
            int d = std::min(j - i, 10 - (j - i));
            CHECK(g.has_edge(i, j) == (d <= 2));
        }
    CHECK(is_complete(cycle_power(7, 3)));
    CHECK(is_isomorphic(cycle_power(6, 1), cycle_graph(6)));
    CHECK_THROWS_AS(cycle_power(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_power(6, 6), std::invalid_argument);
    CHECK_THROWS_AS(cycle_power(2, 1), std::invalid_argument);
}

TEST_CASE("connector gadget") {
    CHECK(is_isomorphic(gadget_C(2), cycle_graph(6)));
    Graph c3 = gadget_C(3);
    CHECK(c3.vertex_count() == 8);
    CHECK(c3.edge_count() == 12);
    CHECK(is_regular(c3) == 3);
    // Exact edge set: the 8-cycle plus the chord matching.
    std::vector<Edge> expect = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
                                {7, 8}, {1, 8}, {1, 3}, {2, 4}, {5, 7}, {6, 8}};
    std::sort(expect.begin(), expect.end());
    CHECK(c3.edges() == expect);
    CHECK(is_isomorphic(gadget_C(4), cycle_power(10, 2)));
    for (int k = 2; k <= 8; ++k) {
        Graph c = gadget_C(k);
        CHECK(c.vertex_count() == 2 * k + 2);
        CHECK(is_regular(c) == k);
        CHECK(is_connected(c));
    }
    CHECK_THROWS_AS(gadget_C(1), std::invalid_argument);
}

TEST_CASE("block chain construction") {
    LabeledConstruction b83 = construction_B(8, 3);
    CHECK(b83.graph.vertex_count() == 8);
    CHECK(b83.graph.edge_count() == 13);  // two K_4 blocks plus the marker edge
    CHECK(b83.roles.at("b") == VertexSet{1, 5});
    CHECK(b83.roles.at("B1") == VertexSet{1, 2, 3, 4});
    CHECK(b83.roles.at("B2") == VertexSet{5, 6, 7, 8});
    CHECK(b83.roles.at("R").empty());
    CHECK(b83.graph.has_edge(1, 5));
    CHECK(is_connected(b83.graph));

    LabeledConstruction b93 = construction_B(9, 3);
    CHECK(b93.graph.vertex_count() == 9);
    CHECK(b93.graph.edge_count() == 14);
    CHECK(b93.roles.at("b") == VertexSet{1, 5, 9});
    CHECK(b93.roles.at("R") == VertexSet{9});
    CHECK(b93.graph.has_edge(5, 9));
    CHECK_FALSE(b93.graph.has_edge(1, 9));

    LabeledConstruction b33 = construction_B(3, 3);  // q = 0 degenerates to K_3
    CHECK(is_complete(b33.graph));
    CHECK(b33.graph.vertex_count() == 3);
    CHECK(b33.roles.at("b").empty());

    LabeledConstruction b43 = construction_B(4, 3);  // single block, no path
    CHECK(is_complete(b43.graph));
    CHECK(b43.roles.at("b") == VertexSet{1});

    LabeledConstruction b53 = construction_B(5, 3);
    CHECK(b53.roles.at("b") == VertexSet{1, 5});
    CHECK(b53.graph.has_edge(1, 5));
    CHECK(b53.graph.edge_count() == 7);

    for (int k = 1; k <= 5; ++k)
        for (int n = 1; n <= 24; ++n) {
            LabeledConstruction c = construction_B(n, k);
            CHECK(c.graph.vertex_count() == n);
            CHECK(is_connected(c.graph));
        }
    CHECK_THROWS_AS(construction_B(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(construction_B(5, 0), std::invalid_argument);
}

TEST_CASE("chained gadget construction") {
    LabeledConstruction g = construction_BnCk(16, 2);
    CHECK(g.graph.vertex_count() == 16);
    CHECK(g.graph.edge_count() == 17);
    CHECK(g.roles.at("u") == VertexSet{1, 2, 3, 4});
    CHECK(g.roles.at("C1") == VertexSet{5, 6, 7, 8, 9, 10});
    CHECK(g.roles.at("C2") == VertexSet{11, 12, 13, 14, 15, 16});
    CHECK(g.roles.at("R") == VertexSet{3, 4});
    CHECK(g.graph.has_edge(1, 5));    // spine to first copy
    CHECK(g.graph.has_edge(2, 11));   // spine to second copy
    CHECK(g.graph.has_edge(1, 2));    // path part
    CHECK(g.graph.has_edge(2, 3));
    CHECK(g.graph.has_edge(3, 4));    // star centered at the last tail vertex
    CHECK(is_connected(g.graph));

    // r <= 1: no tail star at all.
    LabeledConstruction g7 = construction_BnCk(7, 2);
    CHECK(g7.graph.vertex_count() == 7);
    CHECK(g7.graph.edge_count() == 7);  // one 6-cycle plus the spine edge
    CHECK(g7.roles.at("u") == VertexSet{1});
    CHECK(g7.roles.at("R").empty());

    LabeledConstruction g14 = construction_BnCk(14, 2);
    CHECK(g14.graph.edge_count() == 15);
    CHECK(g14.roles.at("u") == VertexSet{1, 2});

    // Completing a 2-vertex tail changes nothing...
    CHECK(construction_BnCk_prime(16, 2).graph.edges() ==
          construction_BnCk(16, 2).graph.edges());
    // ...but a 3-vertex tail gains the one missing edge.
    LabeledConstruction g17 = construction_BnCk(17, 2);
    LabeledConstruction g17p = construction_BnCk_prime(17, 2);
    CHECK(g17.graph.edge_count() == 18);
    CHECK(g17p.graph.edge_count() == 19);
    CHECK_FALSE(g17.graph.has_edge(3, 4));
    CHECK(g17p.graph.has_edge(3, 4));
    CHECK(g17p.roles.at("R") == VertexSet{3, 4, 5});

    for (int k = 2; k <= 4; ++k)
        for (int n = 2 * k + 3; n <= std::min(62, 3 * (2 * k + 3) + 2); ++n) {
            LabeledConstruction c = construction_BnCk(n, k);
            CHECK(c.graph.vertex_count() == n);
            CHECK(is_connected(c.graph));
            LabeledConstruction p = construction_BnCk_prime(n, k);
            int r = n % (2 * k + 3);
            int star_edges = r >= 2 ? r - 1 : 0;
            int clique_edges = r >= 2 ? r * (r - 1) / 2 : 0;
            CHECK(p.graph.edge_count() - c.graph.edge_count() == clique_edges - star_edges);
        }
    CHECK_THROWS_AS(construction_BnCk(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(construction_BnCk(10, 1), std::invalid_argument);
}

namespace {

// Independent enumeration oracle: walk every labeled graph on n vertices,
// keep the connected ones, deduplicate by canonical form.
std::set<std::string> brute_force_connected(int n) {
    std::set<std::string> classes;
    std::vector<Edge> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t m = 0; m < (1ull << pairs.size()); ++m) {
        Graph g(n);
        for (size_t i = 0; i < pairs.size(); ++i)
            if (m & (1ull << i)) g.add_edge(pairs[i].first, pairs[i].second);
        if (!is_connected(g)) continue;
        classes.insert(canonical_graph6(g));
    }
    return classes;
}

}  // namespace

TEST_CASE("connected enumeration matches the labeled oracle") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<Graph> got = enumerate_connected(n);
        std::set<std::string> expect = brute_force_connected(n);
        REQUIRE(got.size() == expect.size());
        for (const Graph& g : got) {
            CHECK(g.vertex_count() == n);
            CHECK(is_connected(g));
            CHECK(expect.count(to_graph6(g)) == 1);  // emitted canonically labeled
        }
    }
}

TEST_CASE("connected enumeration counts") {
    const int expect[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(enumerate_connected(n).size() == expect[n]);
    // Deterministic order across calls.
    std::vector<Graph> a = enumerate_connected(6), b = enumerate_connected(6);
    for (size_t i = 0; i < a.size(); ++i) CHECK(to_graph6(a[i]) == to_graph6(b[i]));
    CHECK_THROWS_AS(enumerate_connected(9), BudgetError);
    CHECK_THROWS_AS(enumerate_connected(0), std::invalid_argument);
}

TEST_CASE("full enumeration includes disconnected classes") {
    const int expect[] = {0, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::vector<Graph> all = enumerate_all(n);
        CHECK(all.size() == expect[n]);
        std::set<std::string> classes;
        for (const Graph& g : all) {
            CHECK(g.vertex_count() == n);
            classes.insert(canonical_graph6(g));
        }
        CHECK(classes.size() == all.size());  // pairwise non-isomorphic
    }
}
