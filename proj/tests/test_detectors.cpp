#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "iso/detectors.hpp"
#include "iso/generators.hpp"

#include <algorithm>
#include <numeric>

using namespace iso;

TEST_CASE("family grammar round trips") {
    CHECK(parse_family("K1").kind == FamilyKind::SingleVertex);
    CHECK(family_to_string(parse_family("K1")) == "K1");
    CHECK(parse_family("star:3") == family_star(3));
    CHECK(family_to_string(family_star(3)) == "star:3");
    CHECK(parse_family("cycles") == family_all_cycles());
    CHECK(parse_family("regmin:0") == family_regular_min(0));
    CHECK(parse_family("cycle:1") == family_cycle(1));
    CHECK(parse_family("cycle:2") == family_cycle(2));
    CHECK(parse_family("chrmin:4") == family_chromatic_min(4));
    CHECK(family_to_string(parse_family("F01:3")) == "F01:3");

    // Presets expand structurally; equality ignores the display text.
    CHECK(parse_family("F0:3") == family_star(3));
    CHECK(parse_family("F1:4") == family_regular_min(3));
    CHECK(parse_family("F1:1") == family_regular_min(0));
    CHECK(parse_family("F2:4") == family_chromatic_min(4));
    FamilySpec f01 = parse_family("F01:3");
    REQUIRE(f01.kind == FamilyKind::Union);
    REQUIRE(f01.members.size() == 2);
    CHECK(f01.members[0] == family_star(3));
    CHECK(f01.members[1] == family_regular_min(2));
    FamilySpec f3 = parse_family("F3:4");
    REQUIRE(f3.members.size() == 3);
    CHECK(f3.members[0] == family_star(4));
    CHECK(f3.members[1] == family_regular_min(3));
    CHECK(f3.members[2] == family_chromatic_min(4));

    FamilySpec u = parse_family("union(star:2, cycles)");
    REQUIRE(u.members.size() == 2);
    CHECK(u.members[1] == family_all_cycles());
    // Nested unions flatten, both via text and via the factory.
    CHECK(parse_family("union(union(star:2,clique:3),path:4)").members.size() == 3);
    CHECK(family_union({family_F01(3), family_chromatic_min(3)}).members.size() == 3);
    CHECK(family_to_string(family_union({family_star(2), family_all_cycles()})) ==
          "union(star:2,cycles)");

    CHECK_THROWS_AS(parse_family("star:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("regmin:-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("cycle:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("star:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("star:3junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("union()"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("union(star:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("F01:"), std::invalid_argument);
    CHECK_THROWS_AS(family_union({}), std::invalid_argument);
}

TEST_CASE("star detection") {
    Graph k13 = star_graph(3);
    auto w = contains_star(k13, 3);
    REQUIRE(w.has_value());
    CHECK(w->vertices == VertexSet{1, 2, 3, 4});
    CHECK(verify_witness(k13, family_star(3), *w));
    CHECK_FALSE(contains_star(cycle_graph(6), 3).has_value());
    CHECK_FALSE(contains_star(Graph(0), 1).has_value());

    // Residual of the degree-3 gadget: the partner vertex keeps degree
    // exactly 3, so a 3-star survives.
    InducedSubgraph res = delete_closed_neighborhood(gadget_C(3), {1});
    CHECK(res.labels == VertexSet{4, 5, 6, 7});
    auto sw = contains_star(res.graph, 3);
    REQUIRE(sw.has_value());
    CHECK(verify_witness(res.graph, family_star(3), *sw));
    int center = 0;
    for (int v = 1; v <= res.graph.vertex_count(); ++v)
        if (res.graph.degree(v) == 3) center = v;
    CHECK(res.labels[center - 1] == mod_star(1 + 4, 8));  // the paired vertex
    CHECK(res.graph.degree(center) == 3);                 // exactly k, not more
}

TEST_CASE("clique detection") {
    auto w = contains_clique(complete_graph(5), 4);
    REQUIRE(w.has_value());
    CHECK(w->vertices == VertexSet{1, 2, 3, 4});  // lexicographically least
    CHECK(verify_witness(complete_graph(5), family_clique(4), *w));
    CHECK_FALSE(contains_clique(cycle_graph(5), 3).has_value());
    auto block = contains_clique(construction_B(8, 3).graph, 4);
    REQUIRE(block.has_value());
    CHECK(block->vertices == VertexSet{1, 2, 3, 4});
    auto single = contains_clique(path_graph(3), 1);
    REQUIRE(single.has_value());
    CHECK(single->vertices == VertexSet{1});
    CHECK(single->edges.empty());
}

TEST_CASE("any cycle detection") {
    CHECK_FALSE(contains_cycle_any(path_graph(6)).has_value());
    CHECK_FALSE(contains_cycle_any(star_graph(5)).has_value());
    CHECK_FALSE(contains_cycle_any(Graph(3)).has_value());
    auto w = contains_cycle_any(cycle_graph(5));
    REQUIRE(w.has_value());
    CHECK(w->vertices.size() == 5);
    CHECK(verify_witness(cycle_graph(5), family_all_cycles(), *w));
    auto t = contains_cycle_any(construction_B(8, 3).graph);
    REQUIRE(t.has_value());
    CHECK(verify_witness(construction_B(8, 3).graph, family_all_cycles(), *t));
}

namespace {

// Brute-force oracle: some k vertices admit a cyclic (or linear) ordering
// with consecutive adjacency.
bool subset_walk_oracle(const Graph& g, int k, bool closed) {
    int n = g.vertex_count();
    if (k > n) return false;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    while (true) {
        // A cycle may be rotated to start at the least vertex; a path may not.
        std::vector<int> perm(pick.begin() + (closed ? 1 : 0), pick.end());
        std::sort(perm.begin(), perm.end());
        do {
            bool ok = true;
            int prev = closed ? pick[0] : perm[0];
            for (size_t i = closed ? 0 : 1; i < perm.size(); ++i) {
                if (!g.has_edge(prev, perm[i])) {
                    ok = false;
                    break;
                }
                prev = perm[i];
            }
            if (ok && closed && !g.has_edge(prev, pick[0])) ok = false;
            if (ok) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - (k - 1 - i)) --i;
        if (i < 0) return false;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace

TEST_CASE("fixed length cycles and paths") {
    CHECK(contains_cycle_len(cycle_graph(6), 6).has_value());
    CHECK_FALSE(contains_cycle_len(cycle_graph(6), 5).has_value());
    CHECK_FALSE(contains_cycle_len(cycle_graph(6), 3).has_value());
    auto v1 = contains_cycle_len(path_graph(2), 1);
    REQUIRE(v1.has_value());
    CHECK(v1->vertices == VertexSet{1});
    auto v2 = contains_cycle_len(path_graph(3), 2);
    REQUIRE(v2.has_value());
    CHECK(v2->edges.size() == 1);
    CHECK_FALSE(contains_cycle_len(Graph(2), 2).has_value());

    // Residual of the degree-4 gadget keeps a 5-cycle.
    InducedSubgraph res = delete_closed_neighborhood(gadget_C(4), {1});
    auto c5 = contains_cycle_len(res.graph, 5);
    REQUIRE(c5.has_value());
    CHECK(verify_witness(res.graph, family_cycle(5), *c5));

    auto p = contains_path_order(path_graph(5), 5);
    REQUIRE(p.has_value());
    CHECK(p->vertices == VertexSet{1, 2, 3, 4, 5});
    CHECK(verify_witness(path_graph(5), family_path(5), *p));
    CHECK(contains_path_order(star_graph(3), 3).has_value());
    CHECK_FALSE(contains_path_order(star_graph(3), 4).has_value());
    auto pv = contains_path_order(Graph(2), 1);
    REQUIRE(pv.has_value());
    CHECK(pv->vertices == VertexSet{1});

    // Cross-check both searches against the permutation oracle.
    for (int n = 4; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            for (int k = 3; k <= n; ++k) {
                auto found = contains_cycle_len(g, k);
                CHECK(found.has_value() == subset_walk_oracle(g, k, true));
                if (found) CHECK(verify_witness(g, family_cycle(k), *found));
            }
            for (int k = 2; k <= n; ++k) {
                auto found = contains_path_order(g, k);
                CHECK(found.has_value() == subset_walk_oracle(g, k, false));
                if (found) CHECK(verify_witness(g, family_path(k), *found));
            }
        }

    Budget tiny(3);
    CHECK_THROWS_AS(contains_cycle_len(complete_graph(8), 8, tiny), BudgetError);
}

TEST_CASE("regular subgraph search") {
    auto c6 = contains_regular_min(cycle_graph(6), 2);
    REQUIRE(c6.has_value());
    CHECK(c6->vertices.size() == 6);
    CHECK(verify_witness(cycle_graph(6), family_regular_min(2), *c6));
    auto k4 = contains_regular_min(complete_graph(4), 3);
    REQUIRE(k4.has_value());
    CHECK(k4->vertices == VertexSet{1, 2, 3, 4});
    CHECK(verify_witness(complete_graph(4), family_regular_min(3), *k4));

    // Residual of the degree-3 gadget: a triangle survives but nothing
    // 3-regular does.
    InducedSubgraph res = delete_closed_neighborhood(gadget_C(3), {1});
    CHECK_FALSE(contains_regular_min(res.graph, 3).has_value());
    auto tri = contains_regular_min(res.graph, 2);
    REQUIRE(tri.has_value());
    VertexSet orig;
    for (int v : tri->vertices) orig.push_back(res.labels[v - 1]);
    std::sort(orig.begin(), orig.end());
    CHECK(orig == VertexSet{5, 6, 7});

    // Dispatch extremes.
    auto r0 = contains_regular_min(Graph(3), 0);
    REQUIRE(r0.has_value());
    CHECK(r0->vertices == VertexSet{1});
    CHECK_FALSE(contains_regular_min(Graph(0), 0).has_value());
    auto r1 = contains_regular_min(path_graph(4), 1);
    REQUIRE(r1.has_value());
    CHECK(r1->edges.size() == 1);
    CHECK_FALSE(contains_regular_min(star_graph(4), 2).has_value());

    // K_5 holds a 3-regular subgraph (a K_4) and is itself 4-regular.
    auto k5r3 = find_exact_regular(complete_graph(5), 3);
    REQUIRE(k5r3.has_value());
    CHECK(verify_witness(complete_graph(5), family_regular_min(3), *k5r3));
    auto k5r4 = find_exact_regular(complete_graph(5), 4);
    REQUIRE(k5r4.has_value());
    CHECK(k5r4->vertices.size() == 5);
    CHECK_FALSE(find_exact_regular(complete_graph(5), 5).has_value());

    // Petersen graph: 3-regular, triangle-free.
    Graph pet(10);
    for (int i = 1; i <= 5; ++i) {
        pet.add_edge(i, i % 5 + 1);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, (i + 1) % 5 + 6);
    }
    auto pr = find_exact_regular(pet, 3);
    REQUIRE(pr.has_value());
    CHECK(verify_witness(pet, family_regular_min(3), *pr));

    // Agreement with the cycle detector at r = 2.
    for (int n = 3; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n))
            CHECK(contains_regular_min(g, 2).has_value() == contains_cycle_any(g).has_value());

    Budget tiny(4);
    CHECK_THROWS_AS(find_exact_regular(gadget_C(4), 4, tiny), BudgetError);
    CHECK_THROWS_AS(contains_regular_min(path_graph(3), -1), std::invalid_argument);
}

namespace {

// Independent chromatic oracle: try every assignment of t colors, t ascending.
int brute_chromatic(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 0;
    for (int t = 1;; ++t) {
        std::vector<int> color(n, 0);
        while (true) {
            bool proper = true;
            for (const Edge& e : g.edges())
                if (color[e.first - 1] == color[e.second - 1]) {
                    proper = false;
                    break;
                }
            if (proper) return t;
            int i = 0;
            while (i < n && color[i] == t - 1) color[i++] = 0;
            if (i == n) break;
            ++color[i];
        }
    }
}

}  // namespace

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(path_graph(6)) == 2);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(Graph(3)) == 1);

    Graph pet(10);
    for (int i = 1; i <= 5; ++i) {
        pet.add_edge(i, i % 5 + 1);
        pet.add_edge(i, i + 5);
        pet.add_edge(i + 5, (i + 1) % 5 + 6);
    }
    CHECK(chromatic_number(pet) == 3);

    // Disjoint K_3 and K_2: the maximum over components.
    Graph u(5);
    u.add_edge(1, 2);
    u.add_edge(1, 3);
    u.add_edge(2, 3);
    u.add_edge(4, 5);
    CHECK(chromatic_number(u) == 3);

    // A block of the chain construction minus its marker stays k-chromatic.
    LabeledConstruction b = construction_B(8, 3);
    std::uint64_t keep = 0;
    for (int v : {6, 7, 8}) keep |= Graph::bit(v);
    CHECK(chromatic_number(induced_subgraph(b.graph, keep).graph) == 3);

    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : enumerate_all(n)) CHECK(chromatic_number(g) == brute_chromatic(g));

    // Degree bounds: one more than the maximum degree always suffices, and
    // the maximum degree itself does except for cliques and odd cycles.
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : enumerate_connected(n)) {
            int chi = chromatic_number(g);
            int delta = max_degree(g);
            CHECK(chi <= delta + 1);
            bool exempt = is_complete(g) || (n % 2 == 1 && is_regular(g) == 2 && is_connected(g) &&
                                             g.edge_count() == n);
            if (!exempt) CHECK(chi <= delta);
        }

    auto w = contains_chromatic_min(cycle_graph(5), 3);
    REQUIRE(w.has_value());
    CHECK(w->vertices.size() == 5);
    CHECK(verify_witness(cycle_graph(5), family_chromatic_min(3), *w));
    CHECK_FALSE(contains_chromatic_min(cycle_graph(6), 3).has_value());
    CHECK(contains_chromatic_min(path_graph(1), 1).has_value());
    CHECK_FALSE(contains_chromatic_min(Graph(0), 1).has_value());
}

TEST_CASE("family dispatch") {
    // Union tries members in order: the star member fires before the
    // regular member on a 5-cycle at k = 2.
    auto w = contains_family(cycle_graph(5), family_F01(2));
    REQUIRE(w.has_value());
    CHECK(w->kind == FamilyKind::Star);
    CHECK(verify_witness(cycle_graph(5), family_F01(2), *w));

    // Complete graphs have max degree k-1, so only the regular member fires.
    for (int k : {3, 4}) {
        auto kk = contains_family(complete_graph(k), family_F01(k));
        REQUIRE(kk.has_value());
        CHECK(kk->kind == FamilyKind::RegularMinDegree);
        CHECK(kk->vertices.size() == static_cast<size_t>(k));
        CHECK(verify_witness(complete_graph(k), family_F01(k), *kk));
    }
    CHECK_FALSE(contains_family(path_graph(4), family_F01(3)).has_value());

    auto first = contains_family(cycle_graph(6), parse_family("union(cycles,star:2)"));
    REQUIRE(first.has_value());
    CHECK(first->kind == FamilyKind::AllCycles);
    auto second = contains_family(cycle_graph(6), parse_family("union(star:2,cycles)"));
    REQUIRE(second.has_value());
    CHECK(second->kind == FamilyKind::Star);

    auto k1 = contains_family(Graph(2), family_single_vertex());
    REQUIRE(k1.has_value());
    CHECK(k1->vertices == VertexSet{1});

    // Nothing is ever found in the empty graph.
    for (const char* text : {"K1", "star:1", "clique:1", "cycle:1", "path:1", "cycles",
                             "regmin:0", "chrmin:1", "F01:2", "F3:3"})
        CHECK_FALSE(contains_family(Graph(0), parse_family(text)).has_value());

    // Star containment agrees with the degree threshold on every graph.
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n))
            for (int k = 1; k <= 6; ++k)
                CHECK(contains_family(g, family_star(k)).has_value() == (max_degree(g) >= k));
}

TEST_CASE("witness sweep and tampering") {
    std::vector<FamilySpec> specs = {family_star(2),   family_clique(3),
                                     family_cycle(4),  family_all_cycles(),
                                     family_path(4),   family_regular_min(2),
                                     family_chromatic_min(3), family_F01(3)};
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_connected(n))
            for (const FamilySpec& spec : specs)
                if (auto w = contains_family(g, spec)) CHECK(verify_witness(g, spec, *w));

    // Witnesses found in a residual map back into the host graph.
    for (const Graph& g : enumerate_connected(6)) {
        InducedSubgraph res = delete_closed_neighborhood(g, {1});
        if (auto w = contains_family(res.graph, family_all_cycles())) {
            Witness mapped = *w;
            for (int& v : mapped.vertices) v = res.labels[v - 1];
            for (Edge& e : mapped.edges) {
                e.first = res.labels[e.first - 1];
                e.second = res.labels[e.second - 1];
                if (e.first > e.second) std::swap(e.first, e.second);
            }
            CHECK(verify_witness(g, family_all_cycles(), mapped));
        }
    }

    // Tampered witnesses are rejected.
    Graph k4 = complete_graph(4);
    Witness w = *contains_clique(k4, 3);
    Witness missing_edge = w;
    missing_edge.edges.pop_back();
    CHECK_FALSE(verify_witness(k4, family_clique(3), missing_edge));
    Witness wrong_vertex = w;
    wrong_vertex.vertices.back() = 9;
    CHECK_FALSE(verify_witness(k4, family_clique(3), wrong_vertex));
    Witness dup = w;
    dup.vertices = {1, 1, 2};
    CHECK_FALSE(verify_witness(k4, family_clique(3), dup));
    CHECK_FALSE(verify_witness(k4, family_clique(4), w));  // arity mismatch
    CHECK_FALSE(verify_witness(k4, family_star(3), w));    // kind mismatch
    Witness fake_cycle = *contains_cycle_any(k4);
    fake_cycle.edges.push_back({1, 4});
    CHECK_FALSE(verify_witness(k4, family_all_cycles(), fake_cycle));

    // Two disjoint triangles are not one 6-cycle.
    Graph two_tri(6);
    for (auto [a, b] : std::vector<Edge>{{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})
        two_tri.add_edge(a, b);
    Witness glued;
    glued.kind = FamilyKind::CycleLen;
    glued.vertices = {1, 2, 3, 4, 5, 6};
    glued.edges = {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}};
    CHECK_FALSE(verify_witness(two_tri, family_cycle(6), glued));
}
