#include "iso/graph.hpp"

#include <algorithm>
#include <bit>

namespace iso {

int Graph::popcount(std::uint64_t m) { return std::popcount(m); }

VertexSet Graph::neighbors(int v) const { return set_from_mask(neighbors_mask(v)); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (adj_[u - 1] & bit(v)) out.emplace_back(u, v);
    return out;
}

VertexSet set_from_mask(std::uint64_t mask) {
    VertexSet out;
    while (mask) {
        int i = std::countr_zero(mask);
        out.push_back(i + 1);
        mask &= mask - 1;
    }
    return out;
}

std::uint64_t mask_from_set(const Graph& g, const VertexSet& s) {
    std::uint64_t m = 0;
    int prev = 0;
    for (int v : s) {
        g.check_vertex(v);
        if (v <= prev)
            throw std::invalid_argument("vertex set not sorted strictly ascending");
        prev = v;
        m |= Graph::bit(v);
    }
    return m;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::uint64_t closed_neighborhood_mask(const Graph& g, std::uint64_t s) {
    std::uint64_t m = s;
    std::uint64_t rest = s;
    while (rest) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        m |= g.neighbors_mask(i + 1);
    }
    return m;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    return set_from_mask(closed_neighborhood_mask(g, mask_from_set(g, s)));
}

InducedSubgraph induced_subgraph(const Graph& g, std::uint64_t keep_mask) {
    InducedSubgraph out;
    out.labels = set_from_mask(keep_mask);
    out.graph = Graph(static_cast<int>(out.labels.size()));
    for (size_t i = 0; i < out.labels.size(); ++i)
        for (size_t j = i + 1; j < out.labels.size(); ++j)
            if (g.has_edge(out.labels[i], out.labels[j]))
                out.graph.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, const VertexSet& d) {
    std::uint64_t gone = closed_neighborhood_mask(g, mask_from_set(g, d));
    return induced_subgraph(g, g.full_mask() & ~gone);
}

namespace {

std::uint64_t component_mask(const Graph& g, int start) {
    std::uint64_t comp = Graph::bit(start);
    for (;;) {
        std::uint64_t grown = closed_neighborhood_mask(g, comp);
        if (grown == comp) return comp;
        comp = grown;
    }
}

}  // namespace

std::vector<InducedSubgraph> components(const Graph& g) {
    std::vector<InducedSubgraph> out;
    std::uint64_t seen = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (seen & Graph::bit(v)) continue;
        std::uint64_t comp = component_mask(g, v);
        seen |= comp;
        out.push_back(induced_subgraph(g, comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    return component_mask(g, 1) == g.full_mask();
}

std::optional<int> is_regular(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int d = g.degree(1);
    for (int v = 2; v <= g.vertex_count(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

// ---- graph6 ----

std::string to_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    // Upper triangle in column order: (1,2), (1,3), (2,3), (1,4), ...
    for (int v = 2; v <= n; ++v) {
        for (int u = 1; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph from_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6 byte out of range");
    int n = text[0] - 63;
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6 order beyond one-byte header unsupported");
    Graph g(n);
    int bits_needed = n * (n - 1) / 2;
    size_t bytes_needed = static_cast<size_t>((bits_needed + 5) / 6);
    if (text.size() != 1 + bytes_needed)
        throw std::invalid_argument("graph6 length mismatch");
    int u = 1, v = 2;
    for (size_t i = 0; i < bytes_needed; ++i) {
        int acc = text[1 + i] - 63;
        for (int b = 5; b >= 0; --b) {
            if (v > n) {
                if ((acc >> b) & 1)
                    throw std::invalid_argument("graph6 padding bits not zero");
                continue;
            }
            if ((acc >> b) & 1) g.add_edge(u, v);
            if (++u == v) {
                u = 1;
                ++v;
            }
        }
    }
    return g;
}

// ---- canonical form ----

namespace {

// Iterated neighborhood refinement. Colors are ranked by signature, so the
// final coloring is invariant under relabeling.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<size_t>(n), 0);
    int ncolors = 1;
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(static_cast<size_t>(n));
        for (int v = 1; v <= n; ++v) {
            std::vector<int> s;
            s.push_back(color[v - 1]);
            std::vector<int> nb;
            for (int u : g.neighbors(v)) nb.push_back(color[u - 1]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v - 1] = {std::move(s), v};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(static_cast<size_t>(n), 0);
        int rank = 0;
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
            next[sorted[i].second - 1] = rank;
        }
        int nnext = n == 0 ? 0 : rank + 1;
        if (nnext == ncolors) return next;
        color = std::move(next);
        ncolors = nnext;
    }
}

// Finds the vertex ordering (respecting the refined color classes, taken in
// rank order) whose upper-triangle bit string is lexicographically least.
struct CanonSearch {
    const Graph& g;
    Budget& budget;
    int n;
    std::vector<int> pos_color;      // required color at each position
    std::vector<int> color;
    std::vector<int> perm;           // perm[pos] = vertex
    std::vector<char> placed;        // by vertex
    std::vector<char> cur, best;     // upper-triangle bits, column order
    bool have_best = false;

    CanonSearch(const Graph& gr, Budget& b) : g(gr), budget(b), n(gr.vertex_count()) {
        color = refine_colors(g);
        std::vector<int> sorted_colors = color;
        std::sort(sorted_colors.begin(), sorted_colors.end());
        pos_color = std::move(sorted_colors);
        perm.assign(static_cast<size_t>(n), 0);
        placed.assign(static_cast<size_t>(n) + 1, 0);
        cur.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    }

    // Swapping two unplaced vertices with equal open or equal closed
    // neighborhoods is an automorphism fixing everything else, so at any
    // position only the least member of each twin group needs exploring.
    bool twin_of_earlier_unplaced(int v) const {
        std::uint64_t nv = g.neighbors_mask(v);
        for (int u = 1; u < v; ++u) {
            if (placed[u] || color[u - 1] != color[v - 1]) continue;
            std::uint64_t nu = g.neighbors_mask(u);
            std::uint64_t ignore = ~(Graph::bit(u) | Graph::bit(v));
            if ((nu & ignore) == (nv & ignore) &&
                ((nu >> (v - 1)) & 1) == ((nv >> (u - 1)) & 1))
                return true;
        }
        return false;
    }

    void rec(int pos, bool tight) {
        if (pos == n) {
            if (!have_best || cur < best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        size_t off = cur.size();
        for (int v = 1; v <= n; ++v) {
            if (placed[v] || color[v - 1] != pos_color[pos]) continue;
            if (twin_of_earlier_unplaced(v)) continue;
            budget.tick();
            bool child_tight = tight;
            bool worse = false;
            for (int q = 0; q < pos; ++q) {
                char b = g.has_edge(perm[q], v) ? 1 : 0;
                cur.push_back(b);
                if (child_tight && have_best) {
                    char ref = best[off + static_cast<size_t>(q)];
                    if (b > ref) {
                        worse = true;
                        cur.resize(off);
                        break;
                    }
                    if (b < ref) child_tight = false;
                }
            }
            if (worse) continue;
            perm[pos] = v;
            placed[v] = 1;
            rec(pos + 1, child_tight);
            placed[v] = 0;
            cur.resize(off);
        }
    }
};

}  // namespace

std::string canonical_graph6(const Graph& g, Budget& budget, int guard_n) {
    if (g.vertex_count() > guard_n) throw BudgetError(static_cast<std::uint64_t>(guard_n));
    CanonSearch search(g, budget);
    search.rec(0, true);
    // The minimized bit string already is the adjacency part of the graph6
    // encoding of the relabeled graph; pack it directly.
    int n = g.vertex_count();
    std::string s;
    s.push_back(static_cast<char>(n + 63));
    int acc = 0, nbits = 0;
    for (char b : search.best) {
        acc = (acc << 1) | b;
        if (++nbits == 6) {
            s.push_back(static_cast<char>(acc + 63));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) s.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return s;
}

std::string canonical_graph6(const Graph& g) {
    Budget b;
    return canonical_graph6(g, b);
}

bool is_isomorphic(const Graph& a, const Graph& b, Budget& budget, int guard_n) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;
    auto degseq = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 1; v <= g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degseq(a) != degseq(b)) return false;
    return canonical_graph6(a, budget, guard_n) == canonical_graph6(b, budget, guard_n);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    Budget bu;
    return is_isomorphic(a, b, bu);
}

}  // namespace iso
