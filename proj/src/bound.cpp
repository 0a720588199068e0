#include "iso/bound.hpp"

#include "iso/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace iso {

namespace {

VertexSet sorted_unique(std::set<int> s) { return VertexSet(s.begin(), s.end()); }

VertexSet map_labels(const VertexSet& local, const std::vector<int>& labels) {
    std::set<int> out;
    for (int v : local) out.insert(labels[v - 1]);
    return sorted_unique(std::move(out));
}

std::vector<int> compose_labels(const std::vector<int>& to_root,
                                const std::vector<int>& inner) {
    std::vector<int> out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = to_root[inner[i] - 1];
    return out;
}

// Connected components of the subgraph induced by `keep`, with labels
// rewritten into g's labelling.  Ordered by least label.
std::vector<InducedSubgraph> components_within(const Graph& g, std::uint64_t keep) {
    InducedSubgraph sub = induced_subgraph(g, keep);
    std::vector<InducedSubgraph> out = components(sub.graph);
    for (InducedSubgraph& comp : out)
        for (int& label : comp.labels) label = sub.labels[label - 1];
    return out;
}

std::uint64_t mask_of(const std::vector<int>& labels) {
    std::uint64_t m = 0;
    for (int v : labels) m |= std::uint64_t(1) << (v - 1);
    return m;
}

bool is_k_clique(const Graph& g, int k) {
    return g.vertex_count() == k && is_complete(g);
}

struct Builder {
    int k;
    FamilySpec fam;
    Budget& budget;

    // Returns a set in g's labelling; trace fields are written in root labels
    // via to_root.
    VertexSet build(const Graph& g, const std::vector<int>& to_root,
                    BoundTraceNode& node) {
        budget.tick();
        const int n = g.vertex_count();
        node.n = n;
        node.k = k;
        node.bound = n / (k + 1);
        if (!is_connected(g) || is_special_pair(g, k).special)
            throw InconsistencyError("construction recursed into an invalid part");

        VertexSet result = dispatch(g, to_root, node);
        std::optional<Witness> leftover = is_isolating_set(g, fam, result, budget);
        if (leftover)
            throw InconsistencyError("constructed set fails to isolate (" + node.tag + ")");
        if (static_cast<int>(result.size()) > node.bound)
            throw InconsistencyError("constructed set exceeds the bound (" + node.tag + ")");
        node.set = map_labels(result, to_root);
        return result;
    }

    VertexSet dispatch(const Graph& g, const std::vector<int>& to_root,
                       BoundTraceNode& node) {
        const int n = g.vertex_count();

        // Nothing to isolate.
        if (!contains_family(g, fam, budget)) {
            node.tag = "no-F-graph";
            return {};
        }

        // A forbidden subgraph under the degree cap forces a (k-1)-regular
        // graph; any single vertex dismantles it.
        if (max_degree(g) <= k - 1) {
            std::optional<int> r = is_regular(g);
            if (!r || *r != k - 1)
                throw InconsistencyError("low-degree graph with a forbidden subgraph is not (k-1)-regular");
            node.tag = "low-degree-regular";
            node.v = to_root[0];
            return {1};
        }

        // v: least vertex of maximum degree (>= k from here on).
        int v = 0;
        const int dmax = max_degree(g);
        for (int u = 1; u <= n; ++u)
            if (g.degree(u) == dmax) { v = u; break; }
        node.v = to_root[v - 1];

        const std::uint64_t full = g.full_mask();
        const std::uint64_t nv_closed = closed_neighborhood_mask(g, std::uint64_t(1) << (v - 1));
        if (nv_closed == full) {
            node.tag = "dominating-vertex";
            return {v};
        }

        // Components of G - N[v], split into k-cliques (hq) and the rest.
        std::vector<InducedSubgraph> comps = components_within(g, full & ~nv_closed);
        std::vector<int> hq, hrest;
        for (std::size_t i = 0; i < comps.size(); ++i)
            (is_k_clique(comps[i].graph, k) ? hq : hrest).push_back(int(i));

        if (hq.empty()) {
            node.tag = "no-Kk-components";
            std::set<int> d{v};
            for (int ci : hrest) recurse_into(comps[ci], to_root, node, d);
            return sorted_unique(std::move(d));
        }

        // Neighbours of v, ascending, and which components each is linked to.
        VertexSet nbrs = set_from_mask(g.neighbors_mask(v));
        auto linked = [&](int u, const InducedSubgraph& comp) {
            return (g.neighbors_mask(u) & mask_of(comp.labels)) != 0;
        };

        // Case 1: some neighbour of v is linked to two or more k-cliques.
        for (int u : nbrs) {
            int cliques_at_u = 0;
            for (int ci : hq) cliques_at_u += linked(u, comps[ci]);
            if (cliques_at_u < 2) continue;
            node.tag = "case1";
            node.x = to_root[u - 1];
            std::set<int> d{v, u};
            for (int ci : hq) {
                if (linked(u, comps[ci])) continue;
                bool found = false;
                for (int w : nbrs)
                    if (linked(w, comps[ci])) { d.insert(w); found = true; break; }
                if (!found) throw InconsistencyError("k-clique component has no link to the neighbourhood");
            }
            for (int ci : hrest) recurse_into(comps[ci], to_root, node, d);
            return sorted_unique(std::move(d));
        }

        // Case 2: every neighbour of v is linked to at most one k-clique.
        // hc: the least k-clique component; x: its least linked neighbour of
        // v; y: the least vertex of hc adjacent to x.
        const InducedSubgraph& hc = comps[hq.front()];
        const std::uint64_t hc_mask = mask_of(hc.labels);
        int x = 0, y = 0;
        for (int u : nbrs)
            if (linked(u, hc)) { x = u; break; }
        if (x == 0) throw InconsistencyError("k-clique component has no link to the neighbourhood");
        y = std::countr_zero(g.neighbors_mask(x) & hc_mask) + 1;
        node.x = to_root[x - 1];
        node.y = to_root[y - 1];

        // Non-clique components whose only linked neighbour of v is x.
        std::vector<int> only_x;
        for (int ci : hrest) {
            bool to_x = false, to_other = false;
            for (int u : nbrs) (u == x ? to_x : to_other) |= linked(u, comps[ci]);
            if (to_x && !to_other) only_x.push_back(ci);
        }

        // Remove x and the clique; the remainder splits into the component
        // holding v and exactly the components hanging off x alone.
        const std::uint64_t cut = hc_mask | (std::uint64_t(1) << (x - 1));
        std::vector<InducedSubgraph> parts = components_within(g, full & ~cut);
        int at_v = -1;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (mask_of(parts[i].labels) & (std::uint64_t(1) << (v - 1))) at_v = int(i);
        if (at_v < 0) throw InconsistencyError("lost the component holding v");
        {
            std::set<std::uint64_t> expect, got;
            for (int ci : only_x) expect.insert(mask_of(comps[ci].labels));
            for (std::size_t i = 0; i < parts.size(); ++i)
                if (int(i) != at_v) got.insert(mask_of(parts[i].labels));
            if (expect != got)
                throw InconsistencyError("removal split the graph differently than predicted");
        }
        const InducedSubgraph& gv = parts[at_v];

        if (!is_k_clique(gv.graph, k)) {
            node.tag = "case2-attach-y";
            std::set<int> d{y};
            recurse_into(gv, to_root, node, d);
            for (int ci : only_x) recurse_into(comps[ci], to_root, node, d);
            return sorted_unique(std::move(d));
        }

        // The component holding v collapsed to a k-clique, so it is exactly
        // N[v] - x and v has degree k.
        if (mask_of(gv.labels) != (nv_closed & ~(std::uint64_t(1) << (x - 1))))
            throw InconsistencyError("clique at v is not the punctured neighbourhood");
        if (g.degree(v) != k)
            throw InconsistencyError("clique at v forces degree k at v");

        // Y: both k-cliques minus their attachment points v, x, y.
        const std::uint64_t y_mask =
            (cut | mask_of(gv.labels)) &
            ~(std::uint64_t(1) << (v - 1)) & ~(std::uint64_t(1) << (x - 1)) &
            ~(std::uint64_t(1) << (y - 1));
        if (std::popcount(y_mask) != 2 * (k - 1))
            throw InconsistencyError("residual pair has the wrong size");
        InducedSubgraph within_y = induced_subgraph(g, y_mask);

        if (!contains_family(within_y.graph, fam, budget)) {
            node.tag = "case2-noFgraph-in-Y";
            std::set<int> d{x};
            for (int ci : only_x) recurse_into(comps[ci], to_root, node, d);
            return sorted_unique(std::move(d));
        }

        // z: least vertex of Y with at least k-1 neighbours inside Y; W: z
        // plus its k-1 least neighbours there.
        int z = 0;
        for (std::size_t i = 0; i < within_y.labels.size(); ++i)
            if (within_y.graph.degree(int(i) + 1) >= k - 1) { z = within_y.labels[i]; break; }
        if (z == 0) throw InconsistencyError("no centre of a forbidden subgraph inside the residual pair");
        std::uint64_t w_mask = std::uint64_t(1) << (z - 1);
        {
            int zi = int(std::find(within_y.labels.begin(), within_y.labels.end(), z) -
                         within_y.labels.begin()) + 1;
            VertexSet znbrs = set_from_mask(within_y.graph.neighbors_mask(zi));
            for (int i = 0; i < k - 1; ++i)
                w_mask |= std::uint64_t(1) << (within_y.labels[znbrs[i] - 1] - 1);
        }

        // z lies in exactly one of the punctured cliques; Z is that clique
        // (with its attachment restored) together with W.
        const std::uint64_t side_v = mask_of(gv.labels);
        const std::uint64_t side_h = hc_mask;
        std::uint64_t block;
        if (side_v & (std::uint64_t(1) << (z - 1))) block = side_v;
        else if (side_h & (std::uint64_t(1) << (z - 1))) block = side_h;
        else throw InconsistencyError("centre fell outside both cliques");
        const std::uint64_t z_mask = block | w_mask;
        node.z = to_root[z - 1];
        node.W = map_labels(set_from_mask(w_mask), to_root);
        node.Z = map_labels(set_from_mask(z_mask), to_root);
        if (std::popcount(z_mask) < k + 1)
            throw InconsistencyError("removed block is too small");

        if (!only_x.empty()) {
            // Enough is hanging off x that the rest stays connected: remove
            // the block and recurse.
            node.tag = "case2.1";
            InducedSubgraph rest = induced_subgraph(g, full & ~z_mask);
            if (!is_connected(rest.graph))
                throw InconsistencyError("remainder after the block is disconnected");
            if (is_k_clique(rest.graph, k))
                throw InconsistencyError("remainder after the block is a k-clique");
            std::set<int> d{z};
            recurse_into(rest, to_root, node, d);
            return sorted_unique(std::move(d));
        }

        // Nothing else hangs off x: the whole graph is the two cliques plus
        // v's neighbour x, n = 2k+1, and N[z] = Z.
        if (n != 2 * k + 1)
            throw InconsistencyError("two-clique endgame on the wrong order");
        InducedSubgraph rest = induced_subgraph(g, full & ~closed_neighborhood_mask(
                                                        g, std::uint64_t(1) << (z - 1)));
        if (!contains_family(rest.graph, fam, budget)) {
            node.tag = "case2.2-z";
            return {z};
        }
        if (!is_k_clique(rest.graph, k))
            throw InconsistencyError("residual of the centre is not a k-clique");
        std::uint64_t w_only = z_mask & ~block;
        if (std::popcount(w_only) != 1)
            throw InconsistencyError("cover leaks outside the centre's clique");
        int w = std::countr_zero(w_only) + 1;
        node.tag = "case2.2-w";
        node.w = to_root[w - 1];
        return {w};
    }

    void recurse_into(const InducedSubgraph& part, const std::vector<int>& to_root,
                      BoundTraceNode& node, std::set<int>& acc) {
        node.children.emplace_back();
        VertexSet local = build(part.graph, compose_labels(to_root, part.labels),
                                node.children.back());
        for (int u : local) acc.insert(part.labels[u - 1]);
    }
};

std::vector<int> identity_labels(int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = i + 1;
    return out;
}

// k = 1 beyond the solver guard: the smaller level-parity class of a
// breadth-first search dominates and has at most n/2 vertices.
VertexSet parity_dominating_set(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> level(n + 1, -1);
    std::queue<int> q;
    level[1] = 0;
    q.push(1);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : set_from_mask(g.neighbors_mask(u)))
            if (level[w] < 0) { level[w] = level[u] + 1; q.push(w); }
    }
    VertexSet even, odd;
    for (int u = 1; u <= n; ++u) (level[u] % 2 == 0 ? even : odd).push_back(u);
    return odd.size() < even.size() ? odd : even;
}

void validate_input(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
    SpecialPairVerdict sp = is_special_pair(g, k);
    if (sp.special)
        throw std::invalid_argument("no bound holds for this pair (" + sp.reason + ")");
}

}  // namespace

SpecialPairVerdict is_special_pair(const Graph& g, int k) {
    if (g.vertex_count() == k && is_complete(g)) return {true, "k-clique"};
    if (k == 2 && g.vertex_count() == 5 && g.edge_count() == 5 && is_connected(g) &&
        is_regular(g) == std::optional<int>(2))
        return {true, "five-cycle-k2"};
    return {false, "none"};
}

BoundResult construct_isolating_set(const Graph& g, int k, Budget& budget,
                                    int solver_guard) {
    validate_input(g, k);
    const int n = g.vertex_count();
    BoundResult out;
    out.bound = n / (k + 1);

    if (k >= 3) {
        Builder builder{k, family_F01(k), budget};
        out.set = builder.build(g, identity_labels(n), out.trace);
    } else if (n <= solver_guard) {
        SolveOptions opts;
        opts.guard_n = solver_guard;
        IsolationCertificate cert = iota_exact(g, family_F01(k), budget, opts);
        out.set = cert.set;
        out.trace.tag = "fallback-exact";
    } else if (k == 1) {
        out.set = parity_dominating_set(g);
        out.trace.tag = "fallback-parity";
    } else {
        throw BudgetError("instance of " + std::to_string(n) +
                              " vertices exceeds the solver guard of " +
                              std::to_string(solver_guard) +
                              " and only k = 1 has a direct construction",
                          std::uint64_t(solver_guard));
    }

    std::optional<Witness> leftover = is_isolating_set(g, family_F01(k), out.set, budget);
    if (leftover) throw InconsistencyError("constructed set fails to isolate");
    if (static_cast<int>(out.set.size()) > out.bound)
        throw InconsistencyError("constructed set exceeds the bound");

    out.size = static_cast<int>(out.set.size());
    out.trace.n = n;
    out.trace.k = k;
    out.trace.bound = out.bound;
    out.trace.set = out.set;
    return out;
}

BoundResult construct_isolating_set(const Graph& g, int k) {
    Budget budget;
    return construct_isolating_set(g, k, budget);
}

BoundResult construct_for_family(const Graph& g, int i, int k, Budget& budget,
                                 int solver_guard) {
    if (i < 0 || i > 3) throw std::invalid_argument("family index must be 0..3");
    BoundResult out = construct_isolating_set(g, k, budget, solver_guard);
    FamilySpec fam = i == 0   ? family_F0(k)
                     : i == 1 ? family_F1(k)
                     : i == 2 ? family_F2(k)
                              : family_F3(k);
    std::uint64_t removed = closed_neighborhood_mask(g, mask_from_set(g, out.set));
    InducedSubgraph residual = induced_subgraph(g, g.full_mask() & ~removed);
    if (contains_family(residual.graph, fam, budget))
        throw InconsistencyError("set leaves a member of the wider family");
    return out;
}

BoundResult construct_for_family(const Graph& g, int i, int k) {
    Budget budget;
    return construct_for_family(g, i, k, budget);
}

}  // namespace iso
