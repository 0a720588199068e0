#include "iso/detectors.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace iso {

namespace {

Edge norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

Witness make_witness(FamilyKind kind, VertexSet vertices, std::vector<Edge> edges) {
    Witness w;
    w.kind = kind;
    w.vertices = std::move(vertices);
    w.edges = std::move(edges);
    return w;
}

}  // namespace

std::optional<Witness> contains_star(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("star parameter must be >= 1");
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.degree(v) < k) continue;
        VertexSet nbrs = g.neighbors(v);
        nbrs.resize(k);
        std::vector<Edge> edges;
        for (int u : nbrs) edges.push_back(norm_edge(v, u));
        std::sort(edges.begin(), edges.end());
        nbrs.push_back(v);
        std::sort(nbrs.begin(), nbrs.end());
        return make_witness(FamilyKind::Star, std::move(nbrs), std::move(edges));
    }
    return std::nullopt;
}

namespace {

bool clique_search(const Graph& g, int k, std::uint64_t clique, int count, std::uint64_t cand,
                   Budget& budget, std::uint64_t& out) {
    budget.tick();
    if (count == k) {
        out = clique;
        return true;
    }
    while (cand != 0) {
        if (count + Graph::popcount(cand) < k) return false;
        int v = std::countr_zero(cand) + 1;
        cand &= cand - 1;
        if (clique_search(g, k, clique | Graph::bit(v), count + 1,
                          cand & g.neighbors_mask(v), budget, out))
            return true;
    }
    return false;
}

}  // namespace

std::optional<Witness> contains_clique(const Graph& g, int k, Budget& budget) {
    if (k < 1) throw std::invalid_argument("clique parameter must be >= 1");
    if (k > g.vertex_count()) return std::nullopt;
    std::uint64_t cand = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) >= k - 1) cand |= Graph::bit(v);
    std::uint64_t found = 0;
    if (!clique_search(g, k, 0, 0, cand, budget, found)) return std::nullopt;
    VertexSet vs = set_from_mask(found);
    std::vector<Edge> edges;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
    return make_witness(FamilyKind::Clique, std::move(vs), std::move(edges));
}

std::optional<Witness> contains_clique(const Graph& g, int k) {
    Budget budget;
    return contains_clique(g, k, budget);
}

namespace {

Witness cycle_witness(FamilyKind kind, const VertexSet& in_order) {
    std::vector<Edge> edges;
    for (size_t i = 0; i < in_order.size(); ++i)
        edges.push_back(norm_edge(in_order[i], in_order[(i + 1) % in_order.size()]));
    return make_witness(kind, in_order, std::move(edges));
}

}  // namespace

std::optional<Witness> contains_cycle_any(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> visited(n + 1, 0), on_path(n + 1, 0);
    VertexSet path;
    // Undirected depth-first search: any non-parent edge to a path vertex
    // closes a cycle.
    auto dfs = [&](auto&& self, int v, int parent) -> std::optional<Witness> {
        visited[v] = on_path[v] = 1;
        path.push_back(v);
        for (int w : g.neighbors(v)) {
            if (w == parent) continue;
            if (on_path[w]) {
                auto it = std::find(path.begin(), path.end(), w);
                return cycle_witness(FamilyKind::AllCycles, VertexSet(it, path.end()));
            }
            if (!visited[w])
                if (auto found = self(self, w, v)) return found;
        }
        on_path[v] = 0;
        path.pop_back();
        return std::nullopt;
    };
    for (int v = 1; v <= n; ++v)
        if (!visited[v])
            if (auto found = dfs(dfs, v, 0)) return found;
    return std::nullopt;
}

std::optional<Witness> contains_cycle_len(const Graph& g, int k, Budget& budget) {
    if (k < 1) throw std::invalid_argument("cycle length must be >= 1");
    int n = g.vertex_count();
    if (k == 1) {
        if (n == 0) return std::nullopt;
        return make_witness(FamilyKind::CycleLen, {1}, {});
    }
    if (k == 2) {
        std::vector<Edge> edges = g.edges();
        if (edges.empty()) return std::nullopt;
        return make_witness(FamilyKind::CycleLen, {edges[0].first, edges[0].second}, {edges[0]});
    }
    // Anchor the cycle at its least vertex and extend upward only.
    std::vector<char> on_path(n + 1, 0);
    VertexSet path;
    auto extend = [&](auto&& self, int anchor, int last) -> bool {
        budget.tick();
        if (static_cast<int>(path.size()) == k) return g.has_edge(last, anchor);
        for (int w : g.neighbors(last)) {
            if (w <= anchor || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (self(self, anchor, w)) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    };
    for (int a = 1; a + k - 1 <= n; ++a) {
        if (g.degree(a) < 2) continue;
        on_path[a] = 1;
        path.assign(1, a);
        if (extend(extend, a, a)) return cycle_witness(FamilyKind::CycleLen, path);
        on_path[a] = 0;
    }
    return std::nullopt;
}

std::optional<Witness> contains_cycle_len(const Graph& g, int k) {
    Budget budget;
    return contains_cycle_len(g, k, budget);
}

std::optional<Witness> contains_path_order(const Graph& g, int k, Budget& budget) {
    if (k < 1) throw std::invalid_argument("path order must be >= 1");
    int n = g.vertex_count();
    if (k == 1) {
        if (n == 0) return std::nullopt;
        return make_witness(FamilyKind::PathOrder, {1}, {});
    }
    std::vector<char> on_path(n + 1, 0);
    VertexSet path;
    auto extend = [&](auto&& self, int last) -> bool {
        budget.tick();
        if (static_cast<int>(path.size()) == k) return true;
        for (int w : g.neighbors(last)) {
            if (on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    };
    for (int s = 1; s <= n; ++s) {
        on_path[s] = 1;
        path.assign(1, s);
        if (extend(extend, s)) {
            std::vector<Edge> edges;
            for (size_t i = 0; i + 1 < path.size(); ++i)
                edges.push_back(norm_edge(path[i], path[i + 1]));
            return make_witness(FamilyKind::PathOrder, path, std::move(edges));
        }
        on_path[s] = 0;
    }
    return std::nullopt;
}

std::optional<Witness> contains_path_order(const Graph& g, int k) {
    Budget budget;
    return contains_path_order(g, k, budget);
}

namespace {

// Include/exclude backtracking over the edge list.  deg counts chosen edges;
// undecided counts incident edges not yet decided.  A touched vertex must end
// at degree exactly r, an untouched one at 0.
struct RegularSearch {
    const std::vector<Edge>& edges;
    int r;
    Budget& budget;
    std::vector<int> deg, undecided;
    std::vector<char> chosen;

    bool feasible(int w) const {
        if (deg[w] == 0) return true;
        if (deg[w] > r) return false;
        if (undecided[w] == 0) return deg[w] == r;
        return deg[w] + undecided[w] >= r;
    }

    bool run(size_t i) {
        budget.tick();
        if (i == edges.size())
            return std::find(chosen.begin(), chosen.end(), 1) != chosen.end();
        auto [u, v] = edges[i];
        --undecided[u];
        --undecided[v];
        if (deg[u] < r && deg[v] < r) {
            ++deg[u];
            ++deg[v];
            chosen[i] = 1;
            if (feasible(u) && feasible(v) && run(i + 1)) return true;
            chosen[i] = 0;
            --deg[u];
            --deg[v];
        }
        if (feasible(u) && feasible(v) && run(i + 1)) return true;
        ++undecided[u];
        ++undecided[v];
        return false;
    }
};

}  // namespace

std::optional<Witness> find_exact_regular(const Graph& g, int r, Budget& budget) {
    if (r < 1) throw std::invalid_argument("exact regular degree must be >= 1");
    if (max_degree(g) < r) return std::nullopt;
    std::vector<Edge> edges = g.edges();
    RegularSearch search{edges, r, budget,
                         std::vector<int>(g.vertex_count() + 1, 0),
                         std::vector<int>(g.vertex_count() + 1, 0),
                         std::vector<char>(edges.size(), 0)};
    for (int v = 1; v <= g.vertex_count(); ++v) search.undecided[v] = g.degree(v);
    if (!search.run(0)) return std::nullopt;
    VertexSet vs;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (search.deg[v] > 0) vs.push_back(v);
    std::vector<Edge> picked;
    for (size_t i = 0; i < edges.size(); ++i)
        if (search.chosen[i]) picked.push_back(edges[i]);
    return make_witness(FamilyKind::RegularMinDegree, std::move(vs), std::move(picked));
}

std::optional<Witness> find_exact_regular(const Graph& g, int r) {
    Budget budget;
    return find_exact_regular(g, r, budget);
}

std::optional<Witness> contains_regular_min(const Graph& g, int r, Budget& budget) {
    if (r < 0) throw std::invalid_argument("regmin parameter must be >= 0");
    if (r == 0) {
        if (g.vertex_count() == 0) return std::nullopt;
        return make_witness(FamilyKind::RegularMinDegree, {1}, {});
    }
    if (r == 1) {
        std::vector<Edge> edges = g.edges();
        if (edges.empty()) return std::nullopt;
        return make_witness(FamilyKind::RegularMinDegree, {edges[0].first, edges[0].second},
                            {edges[0]});
    }
    if (r == 2) {
        if (auto w = contains_cycle_any(g)) {
            w->kind = FamilyKind::RegularMinDegree;
            return w;
        }
        return std::nullopt;
    }
    for (int rp = r; rp <= max_degree(g); ++rp)
        if (auto w = find_exact_regular(g, rp, budget)) return w;
    return std::nullopt;
}

std::optional<Witness> contains_regular_min(const Graph& g, int r) {
    Budget budget;
    return contains_regular_min(g, r, budget);
}

namespace {

// Backtracking t-colorability with saturation-first vertex selection and
// new-color symmetry breaking.
bool colorable(const Graph& g, int t, Budget& budget) {
    int n = g.vertex_count();
    std::vector<int> color(n + 1, 0);
    auto rec = [&](auto&& self, int done, int in_use) -> bool {
        budget.tick();
        if (done == n) return true;
        int pick = 0, pick_sat = -1, pick_deg = -1;
        for (int v = 1; v <= n; ++v) {
            if (color[v] != 0) continue;
            std::uint64_t seen = 0;
            for (int w : g.neighbors(v))
                if (color[w] != 0) seen |= 1ull << color[w];
            int sat = Graph::popcount(seen);
            int deg = g.degree(v);
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = v;
                pick_sat = sat;
                pick_deg = deg;
            }
        }
        for (int c = 1; c <= std::min(t, in_use + 1); ++c) {
            bool clash = false;
            for (int w : g.neighbors(pick))
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color[pick] = c;
            if (self(self, done + 1, std::max(in_use, c))) return true;
            color[pick] = 0;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

int chi_connected(const Graph& g, Budget& budget) {
    if (g.edge_count() == 0) return 1;
    VertexSet order;
    for (int v = 1; v <= g.vertex_count(); ++v) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    // Greedy clique for the lower bound, greedy coloring for the upper.
    std::uint64_t clique = 0;
    for (int v : order)
        if ((clique & ~g.neighbors_mask(v)) == 0) clique |= Graph::bit(v);
    int lower = Graph::popcount(clique);
    std::vector<int> color(g.vertex_count() + 1, 0);
    int upper = 0;
    for (int v : order) {
        std::uint64_t used = 0;
        for (int w : g.neighbors(v))
            if (color[w] != 0) used |= 1ull << color[w];
        int c = 1;
        while (used & (1ull << c)) ++c;
        color[v] = c;
        upper = std::max(upper, c);
    }
    for (int t = lower; t < upper; ++t)
        if (colorable(g, t, budget)) return t;
    return upper;
}

}  // namespace

int chromatic_number(const Graph& g, Budget& budget) {
    int chi = 0;
    for (const InducedSubgraph& comp : components(g))
        chi = std::max(chi, chi_connected(comp.graph, budget));
    return chi;
}

int chromatic_number(const Graph& g) {
    Budget budget;
    return chromatic_number(g, budget);
}

std::optional<Witness> contains_chromatic_min(const Graph& g, int k, Budget& budget) {
    if (k < 1) throw std::invalid_argument("chrmin parameter must be >= 1");
    if (chromatic_number(g, budget) < k) return std::nullopt;
    VertexSet vs;
    for (int v = 1; v <= g.vertex_count(); ++v) vs.push_back(v);
    return make_witness(FamilyKind::ChromaticMin, std::move(vs), g.edges());
}

std::optional<Witness> contains_chromatic_min(const Graph& g, int k) {
    Budget budget;
    return contains_chromatic_min(g, k, budget);
}

std::optional<Witness> contains_family(const Graph& g, const FamilySpec& spec, Budget& budget) {
    switch (spec.kind) {
        case FamilyKind::SingleVertex:
            if (g.vertex_count() == 0) return std::nullopt;
            return make_witness(FamilyKind::SingleVertex, {1}, {});
        case FamilyKind::Star: return contains_star(g, spec.param);
        case FamilyKind::Clique: return contains_clique(g, spec.param, budget);
        case FamilyKind::CycleLen: return contains_cycle_len(g, spec.param, budget);
        case FamilyKind::PathOrder: return contains_path_order(g, spec.param, budget);
        case FamilyKind::AllCycles: return contains_cycle_any(g);
        case FamilyKind::RegularMinDegree: return contains_regular_min(g, spec.param, budget);
        case FamilyKind::ChromaticMin: return contains_chromatic_min(g, spec.param, budget);
        case FamilyKind::Union:
            for (const FamilySpec& member : spec.members)
                if (auto w = contains_family(g, member, budget)) return w;
            return std::nullopt;
    }
    throw std::logic_error("unreachable family kind");
}

std::optional<Witness> contains_family(const Graph& g, const FamilySpec& spec) {
    Budget budget;
    return contains_family(g, spec, budget);
}

namespace {

// Degrees within the witness subgraph, keyed by vertex.
std::map<int, int> witness_degrees(const Witness& w) {
    std::map<int, int> deg;
    for (int v : w.vertices) deg[v] = 0;
    for (const Edge& e : w.edges) {
        ++deg[e.first];
        ++deg[e.second];
    }
    return deg;
}

// True when the witness edges form one closed (cycle) or open (path) walk
// covering every witness vertex.
bool single_walk(const Witness& w, bool closed) {
    std::map<int, int> deg = witness_degrees(w);
    std::map<int, VertexSet> adj;
    for (const Edge& e : w.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    int start = 0, leaf_count = 0;
    for (auto& [v, d] : deg) {
        if (closed && d != 2) return false;
        if (!closed) {
            if (d != 1 && d != 2) return false;
            if (d == 1) {
                ++leaf_count;
                start = v;
            }
        }
    }
    if (!closed && leaf_count != 2) return false;
    if (closed) start = w.vertices.front();
    // Walk without immediately backtracking; a single cycle/path visits
    // every vertex exactly once.
    int prev = 0, cur = start;
    size_t steps = 1;
    while (true) {
        int next = 0;
        for (int cand : adj[cur])
            if (cand != prev) {
                next = cand;
                break;
            }
        if (next == 0) break;
        if (closed && next == start) break;
        prev = cur;
        cur = next;
        ++steps;
    }
    return steps == w.vertices.size();
}

bool verify_structure(const Graph& g, const FamilySpec& spec, const Witness& w, Budget& budget) {
    size_t nv = w.vertices.size();
    switch (spec.kind) {
        case FamilyKind::SingleVertex: return nv == 1 && w.edges.empty();
        case FamilyKind::Star: {
            int k = spec.param;
            if (nv != static_cast<size_t>(k) + 1 || w.edges.size() != static_cast<size_t>(k))
                return false;
            std::map<int, int> deg = witness_degrees(w);
            for (auto& [v, d] : deg)
                if (d == k) {
                    bool all_incident = true;
                    for (const Edge& e : w.edges)
                        if (e.first != v && e.second != v) all_incident = false;
                    if (all_incident) return true;
                }
            return false;
        }
        case FamilyKind::Clique: {
            int k = spec.param;
            if (nv != static_cast<size_t>(k) ||
                w.edges.size() != static_cast<size_t>(k) * (k - 1) / 2)
                return false;
            for (size_t i = 0; i < nv; ++i)
                for (size_t j = i + 1; j < nv; ++j)
                    if (!g.has_edge(w.vertices[i], w.vertices[j])) return false;
            return true;
        }
        case FamilyKind::CycleLen: {
            int k = spec.param;
            if (nv != static_cast<size_t>(k)) return false;
            if (k == 1) return w.edges.empty();
            if (k == 2) return w.edges.size() == 1;
            return w.edges.size() == nv && single_walk(w, true);
        }
        case FamilyKind::PathOrder: {
            int k = spec.param;
            if (nv != static_cast<size_t>(k)) return false;
            if (k == 1) return w.edges.empty();
            return w.edges.size() == nv - 1 && single_walk(w, false);
        }
        case FamilyKind::AllCycles:
            return nv >= 3 && w.edges.size() == nv && single_walk(w, true);
        case FamilyKind::RegularMinDegree: {
            if (nv == 0) return false;
            std::map<int, int> deg = witness_degrees(w);
            int common = deg.begin()->second;
            for (auto& [v, d] : deg)
                if (d != common) return false;
            return common >= spec.param;
        }
        case FamilyKind::ChromaticMin: {
            Graph h(static_cast<int>(nv));
            std::map<int, int> index;
            for (size_t i = 0; i < nv; ++i) index[w.vertices[i]] = static_cast<int>(i) + 1;
            for (const Edge& e : w.edges) h.add_edge(index[e.first], index[e.second]);
            return chromatic_number(h, budget) >= spec.param;
        }
        case FamilyKind::Union:
            for (const FamilySpec& member : spec.members)
                if (member.kind == w.kind && verify_structure(g, member, w, budget)) return true;
            return false;
    }
    throw std::logic_error("unreachable family kind");
}

}  // namespace

bool verify_witness(const Graph& g, const FamilySpec& spec, const Witness& w, Budget& budget) {
    if (spec.kind != FamilyKind::Union && w.kind != spec.kind) return false;
    VertexSet sorted = w.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : sorted)
        if (v < 1 || v > g.vertex_count()) return false;
    std::vector<Edge> edges;
    for (const Edge& e : w.edges) {
        if (e.first == e.second) return false;
        if (!std::binary_search(sorted.begin(), sorted.end(), e.first)) return false;
        if (!std::binary_search(sorted.begin(), sorted.end(), e.second)) return false;
        if (!g.has_edge(e.first, e.second)) return false;
        edges.push_back(norm_edge(e.first, e.second));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return false;
    return verify_structure(g, spec, w, budget);
}

bool verify_witness(const Graph& g, const FamilySpec& spec, const Witness& w) {
    Budget budget;
    return verify_witness(g, spec, w, budget);
}

}  // namespace iso
