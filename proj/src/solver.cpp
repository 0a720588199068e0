#include "iso/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace iso {

namespace {

Witness map_back(Witness w, const std::vector<int>& labels) {
    for (int& v : w.vertices) v = labels[v - 1];
    for (Edge& e : w.edges) {
        e.first = labels[e.first - 1];
        e.second = labels[e.second - 1];
        if (e.first > e.second) std::swap(e.first, e.second);
    }
    return w;
}

std::optional<Witness> residual_witness(const Graph& g, const FamilySpec& spec,
                                        std::uint64_t set_mask, Budget& budget) {
    std::uint64_t removed = closed_neighborhood_mask(g, set_mask);
    InducedSubgraph residual = induced_subgraph(g, g.full_mask() & ~removed);
    if (auto w = contains_family(residual.graph, spec, budget))
        return map_back(std::move(w).value(), residual.labels);
    return std::nullopt;
}

}  // namespace

std::optional<Witness> is_isolating_set(const Graph& g, const FamilySpec& spec,
                                        const VertexSet& set, Budget& budget) {
    return residual_witness(g, spec, mask_from_set(g, set), budget);
}

std::optional<Witness> is_isolating_set(const Graph& g, const FamilySpec& spec,
                                        const VertexSet& set) {
    Budget budget;
    return is_isolating_set(g, spec, set, budget);
}

IsolationCertificate iota_exact(const Graph& g, const FamilySpec& spec, Budget& budget,
                                const SolveOptions& options) {
    int n = g.vertex_count();
    if (n > options.guard_n)
        throw BudgetError("instance of " + std::to_string(n) +
                              " vertices exceeds the solver guard of " +
                              std::to_string(options.guard_n) + "; raise the guard to proceed",
                          static_cast<std::uint64_t>(options.guard_n));
    std::uint64_t used_before = budget.used;
    IsolationCertificate cert;
    cert.graph6 = to_graph6(g);
    cert.spec = spec;
    cert.optimal = true;

    VertexSet candidates;
    for (int v = 1; v <= n; ++v) {
        if (options.maximal_candidates) {
            // Keep v only if no other vertex strictly dominates its closed
            // neighborhood (ties kept on the least label): if N[v] is
            // contained in N[w], swapping v for w never hurts.
            std::uint64_t nv = g.closed_mask(v);
            bool dominated = false;
            for (int w = 1; w <= n && !dominated; ++w) {
                if (w == v) continue;
                std::uint64_t nw = g.closed_mask(w);
                if ((nv & ~nw) == 0 && (nv != nw || w < v)) dominated = true;
            }
            if (dominated) continue;
        }
        candidates.push_back(v);
    }

    int m = static_cast<int>(candidates.size());
    for (int t = 0; t <= m; ++t) {
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        while (true) {
            budget.tick();
            std::uint64_t mask = 0;
            for (int i : idx) mask |= Graph::bit(candidates[i]);
            if (!residual_witness(g, spec, mask, budget)) {
                for (int i : idx) cert.set.push_back(candidates[i]);
                cert.size = t;
                cert.search_budget_used = budget.used - used_before;
                return cert;
            }
            int i = t - 1;
            while (i >= 0 && idx[i] == m - (t - i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw InconsistencyError("no isolating set found although the full vertex set is one");
}

IsolationCertificate iota_exact(const Graph& g, const FamilySpec& spec) {
    Budget budget;
    return iota_exact(g, spec, budget);
}

IsolationCertificate check_set(const Graph& g, const FamilySpec& spec, const VertexSet& set,
                               Budget& budget) {
    std::uint64_t used_before = budget.used;
    IsolationCertificate cert;
    cert.graph6 = to_graph6(g);
    cert.spec = spec;
    cert.set = set;
    cert.size = static_cast<int>(set.size());
    cert.optimal = false;
    cert.residual_witness = is_isolating_set(g, spec, set, budget);
    cert.search_budget_used = budget.used - used_before;
    return cert;
}

IsolationCertificate check_set(const Graph& g, const FamilySpec& spec, const VertexSet& set) {
    Budget budget;
    return check_set(g, spec, set, budget);
}

int solve_iota(const Graph& g, const FamilySpec& spec) { return iota_exact(g, spec).size; }

int domination_number(const Graph& g, Budget& budget) {
    return iota_exact(g, family_single_vertex(), budget).size;
}

int domination_number(const Graph& g) {
    Budget budget;
    return domination_number(g, budget);
}

}  // namespace iso
