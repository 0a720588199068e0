#pragma once
// Core graph type and primitive operations: simple undirected graphs on
// labels 1..n (n <= 62 so every graph fits the one-byte graph6 header),
// adjacency kept as one 64-bit mask per vertex. Everything downstream
// (construction, detection, exact solving) works over this type.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iso {

using Vertex = int;                       // 1-based labels
using VertexSet = std::vector<int>;       // sorted strictly ascending
using Edge = std::pair<int, int>;         // stored with first < second

inline constexpr int kMaxVertices = 62;

// Thrown when a search exceeds its node budget. A detector or solver must
// fail loudly rather than report "absent" after an incomplete search.
struct BudgetError : std::runtime_error {
    std::uint64_t limit;
    explicit BudgetError(std::uint64_t lim)
        : std::runtime_error("search budget of " + std::to_string(lim) +
                             " nodes exceeded; increase the budget or shrink the instance"),
          limit(lim) {}
    BudgetError(const std::string& message, std::uint64_t lim)
        : std::runtime_error(message), limit(lim) {}
};

// Thrown when an internal cross-check fails (e.g. the constructive bound
// produced a set that does not verify). Indicates a bug, never bad input.
struct InconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Node-count budget threaded through every search routine.
struct Budget {
    std::uint64_t limit = 100'000'000;
    std::uint64_t used = 0;
    Budget() = default;
    explicit Budget(std::uint64_t lim) : limit(lim) {}
    void tick(std::uint64_t cost = 1) {
        used += cost;
        if (used > limit) throw BudgetError(limit);
    }
};

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<size_t>(check_order(n))) {}

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (std::uint64_t m : adj_) twice += popcount(m);
        return twice / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop " + std::to_string(u));
        adj_[u - 1] |= bit(v);
        adj_[v - 1] |= bit(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[u - 1] & bit(v)) != 0;
    }

    // Open neighborhood of v as a bitmask (bit i-1 stands for vertex i).
    std::uint64_t neighbors_mask(int v) const {
        check_vertex(v);
        return adj_[v - 1];
    }

    std::uint64_t closed_mask(int v) const { return neighbors_mask(v) | bit(v); }

    int degree(int v) const { return popcount(neighbors_mask(v)); }

    VertexSet neighbors(int v) const;

    // All edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    // Mask with bits 0..n-1 set.
    std::uint64_t full_mask() const {
        return n_ == 0 ? 0 : (n_ == 64 ? ~0ull : (1ull << n_) - 1);
    }

    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " not in 1.." +
                                    std::to_string(n_));
    }

    static std::uint64_t bit(int v) { return 1ull << (v - 1); }
    static int popcount(std::uint64_t m);

  private:
    static int check_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph order " + std::to_string(n) +
                                        " outside 0.." + std::to_string(kMaxVertices));
        return n;
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

// ---- vertex-set helpers ----

VertexSet set_from_mask(std::uint64_t mask);
// Validates that s is sorted, duplicate-free and within 1..n, then packs it.
std::uint64_t mask_from_set(const Graph& g, const VertexSet& s);

// ---- basic operations ----

int max_degree(const Graph& g);  // 0 for the empty graph

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);
std::uint64_t closed_neighborhood_mask(const Graph& g, std::uint64_t s);

// An induced subgraph relabeled to 1..m, remembering the original labels:
// labels[i-1] is the original label of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;
};

InducedSubgraph induced_subgraph(const Graph& g, std::uint64_t keep_mask);

// G minus the closed neighborhood of d (the residual checked for family
// members), with the label map back into G.
InducedSubgraph delete_closed_neighborhood(const Graph& g, const VertexSet& d);

// Connected components ordered by smallest original label.
std::vector<InducedSubgraph> components(const Graph& g);

bool is_connected(const Graph& g);  // vacuously true for n <= 1

// The uniform degree if one exists; absent for the empty graph or when
// degrees differ.
std::optional<int> is_regular(const Graph& g);

bool is_complete(const Graph& g);

// ---- canonical form and isomorphism ----

// graph6 string of a canonically relabeled copy: equal strings iff the
// graphs are isomorphic. Exhaustive ordering search constrained by iterated
// degree refinement; intended for small graphs, guarded by guard_n.
std::string canonical_graph6(const Graph& g, Budget& budget, int guard_n = 12);
std::string canonical_graph6(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b, Budget& budget, int guard_n = 12);
bool is_isomorphic(const Graph& a, const Graph& b);

// ---- graph6 codec (one-byte header, n <= 62) ----

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

}  // namespace iso
