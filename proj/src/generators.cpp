#include "iso/generators.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <string>

namespace iso {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph star_graph(int k) {
    if (k < 1) throw std::invalid_argument("star needs at least one leaf");
    Graph g(k + 1);
    for (int i = 2; i <= k + 1; ++i) g.add_edge(1, i);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least one vertex");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 1) throw std::invalid_argument("cycle needs at least one vertex");
    if (n <= 2) return path_graph(n);  // orders 1 and 2 alias K_1 and K_2
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

int mod_star(int x, int a) {
    if (x < 1 || a < 1) throw std::invalid_argument("mod_star needs positive arguments");
    int r = x % a;
    return r == 0 ? a : r;
}

Graph cycle_power(int n, int r) {
    if (n < 3) throw std::invalid_argument("cycle power needs at least 3 vertices");
    if (r < 1 || r >= n) throw std::invalid_argument("cycle power step outside 1..n-1");
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= r; ++j) {
            int t = mod_star(i + j, n);
            if (t != i) g.add_edge(i, t);
        }
    return g;
}

Graph gadget_C(int k) {
    if (k < 2) throw std::invalid_argument("connector gadget needs k >= 2");
    int s = 2 * k + 2;
    if (k % 2 == 0) return cycle_power(s, k / 2);
    Graph g = cycle_power(s, (k - 1) / 2);
    int half = (k + 1) / 2;
    for (int i = 1; i <= half; ++i) g.add_edge(i, i + half);
    for (int i = k + 2; i <= k + 1 + half; ++i) g.add_edge(i, i + half);
    return g;
}

LabeledConstruction construction_B(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("block chain needs n >= 1, k >= 1");
    int q = n / (k + 1);
    int r = n - q * (k + 1);
    LabeledConstruction out;
    out.graph = Graph(n);
    out.roles["b"] = {};
    if (q == 0) {  // degenerate: a single clique, no markers
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) out.graph.add_edge(u, v);
        out.roles["R"] = {};
        for (int v = 1; v <= n; ++v) out.roles["R"].push_back(v);
        return out;
    }
    int qprime = r == 0 ? q : q + 1;
    std::vector<int> markers;
    for (int i = 1; i <= q; ++i) {
        int lo = (i - 1) * (k + 1) + 1, hi = i * (k + 1);
        VertexSet block;
        for (int u = lo; u <= hi; ++u) {
            block.push_back(u);
            for (int v = u + 1; v <= hi; ++v) out.graph.add_edge(u, v);
        }
        out.roles["B" + std::to_string(i)] = std::move(block);
        markers.push_back(lo);
    }
    VertexSet rest;
    for (int u = q * (k + 1) + 1; u <= n; ++u) {
        rest.push_back(u);
        for (int v = u + 1; v <= n; ++v) out.graph.add_edge(u, v);
    }
    out.roles["R"] = std::move(rest);
    if (r >= 1) markers.push_back(q * (k + 1) + 1);
    for (int i = 0; i + 1 < qprime; ++i) out.graph.add_edge(markers[i], markers[i + 1]);
    out.roles["b"] = std::move(markers);
    return out;
}

namespace {

LabeledConstruction chained_gadgets(int n, int k, bool complete_tail) {
    if (k < 2) throw std::invalid_argument("chained gadgets need k >= 2");
    if (n < 2 * k + 3) throw std::invalid_argument("chained gadgets need n >= 2k+3");
    int s = 2 * k + 2;
    int q = n / (s + 1);
    int r = n - q * (s + 1);
    int t = std::min(1, r);
    LabeledConstruction out;
    out.graph = Graph(n);
    VertexSet spine;
    for (int i = 1; i <= q + r; ++i) spine.push_back(i);
    out.roles["u"] = spine;
    Graph gadget = gadget_C(k);
    for (int i = 1; i <= q; ++i) {
        int base = q + r + (i - 1) * s;
        VertexSet copy;
        for (int j = 1; j <= s; ++j) copy.push_back(base + j);
        for (auto [a, b] : gadget.edges()) out.graph.add_edge(base + a, base + b);
        out.graph.add_edge(i, base + 1);  // u_i to the copy's first vertex
        out.roles["C" + std::to_string(i)] = std::move(copy);
    }
    for (int i = 1; i < q + t; ++i) out.graph.add_edge(i, i + 1);
    out.roles["R"] = {};
    if (r >= 2) {
        for (int j = q + 1; j <= q + r; ++j) out.roles["R"].push_back(j);
        for (int j = 1; j <= r - 1; ++j) out.graph.add_edge(q + r, q + j);
        if (complete_tail)
            for (int a = q + 1; a <= q + r; ++a)
                for (int b = a + 1; b <= q + r; ++b) out.graph.add_edge(a, b);
    }
    return out;
}

}  // namespace

LabeledConstruction construction_BnCk(int n, int k) { return chained_gadgets(n, k, false); }

LabeledConstruction construction_BnCk_prime(int n, int k) {
    return chained_gadgets(n, k, true);
}

// ---- enumeration ----

namespace {

std::mutex enum_mutex;
std::vector<std::vector<std::string>>& connected_levels() {
    static std::vector<std::vector<std::string>> levels;  // levels[m] = canon strings, order m+1
    return levels;
}

void build_levels(int n, Budget& budget) {
    auto& levels = connected_levels();
    if (static_cast<int>(levels.size()) >= n) return;
    if (levels.empty()) levels.push_back({to_graph6(Graph(1))});  // K_1 is its own canon form
    while (static_cast<int>(levels.size()) < n) {
        int m = static_cast<int>(levels.size());  // building order m+1
        std::set<std::string> next;
        for (const std::string& canon : levels[m - 1]) {
            Graph base = from_graph6(canon);
            // Attach a new vertex to every nonempty subset of the base. Any
            // connected graph has a vertex whose removal keeps it connected,
            // so every class on m+1 vertices is reached.
            for (std::uint64_t sub = 1; sub < (1ull << m); ++sub) {
                budget.tick();
                Graph g(m + 1);
                for (auto [a, b] : base.edges()) g.add_edge(a, b);
                for (int v = 1; v <= m; ++v)
                    if (sub & Graph::bit(v)) g.add_edge(v, m + 1);
                next.insert(canonical_graph6(g, budget));
            }
        }
        levels.emplace_back(next.begin(), next.end());
    }
}

}  // namespace

std::vector<Graph> enumerate_connected(int n, Budget& budget, int guard) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > guard) throw BudgetError(static_cast<std::uint64_t>(guard));
    std::lock_guard<std::mutex> lock(enum_mutex);
    build_levels(n, budget);
    std::vector<Graph> out;
    for (const std::string& canon : connected_levels()[static_cast<size_t>(n) - 1])
        out.push_back(from_graph6(canon));
    return out;
}

std::vector<Graph> enumerate_connected(int n) {
    Budget b;
    return enumerate_connected(n, b);
}

std::vector<Graph> enumerate_all(int n, Budget& budget, int guard) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > guard) throw BudgetError(static_cast<std::uint64_t>(guard));
    // Component classes indexed by (order ascending, canonical string);
    // multisets of them, non-decreasing in index, cover every class once.
    struct Part {
        int order;
        Graph graph;
    };
    std::vector<Part> parts;
    for (int m = 1; m <= n; ++m)
        for (const Graph& g : enumerate_connected(m, budget, guard))
            parts.push_back({m, g});
    std::vector<Graph> out;
    std::vector<int> chosen;
    auto emit = [&]() {
        Graph g(n);
        int offset = 0;
        for (int idx : chosen) {
            for (auto [a, b] : parts[static_cast<size_t>(idx)].graph.edges())
                g.add_edge(offset + a, offset + b);
            offset += parts[static_cast<size_t>(idx)].order;
        }
        out.push_back(g);
    };
    auto rec = [&](auto&& self, int remaining, int min_idx) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        for (int i = min_idx; i < static_cast<int>(parts.size()); ++i) {
            if (parts[static_cast<size_t>(i)].order > remaining) continue;
            budget.tick();
            chosen.push_back(i);
            self(self, remaining - parts[static_cast<size_t>(i)].order, i);
            chosen.pop_back();
        }
    };
    rec(rec, n, 0);
    return out;
}

std::vector<Graph> enumerate_all(int n) {
    Budget b;
    return enumerate_all(n, b);
}

}  // namespace iso
