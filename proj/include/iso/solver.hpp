#pragma once

#include "iso/detectors.hpp"
#include "iso/family.hpp"
#include "iso/graph.hpp"

#include <optional>
#include <string>

namespace iso {

struct SolveOptions {
    int guard_n = 26;                // refuse larger instances
    bool maximal_candidates = false; // restrict candidates to inclusion-maximal
                                     // closed neighborhoods (sizes unchanged)
};

struct IsolationCertificate {
    std::string graph6;
    FamilySpec spec;
    VertexSet set;
    int size = 0;
    bool optimal = false;
    std::uint64_t search_budget_used = 0;
    std::optional<Witness> residual_witness;  // present when the checked set fails
};

// nullopt when removing N[set] leaves no family member; otherwise the
// surviving witness, mapped back to the host labels.  set must be a sorted
// strictly ascending subset of V(G).
std::optional<Witness> is_isolating_set(const Graph& g, const FamilySpec& spec,
                                        const VertexSet& set, Budget& budget);
std::optional<Witness> is_isolating_set(const Graph& g, const FamilySpec& spec,
                                        const VertexSet& set);

// Smallest isolating set by subset enumeration in ascending size and
// lexicographic order; the returned set is the lexicographically least
// minimum one.
IsolationCertificate iota_exact(const Graph& g, const FamilySpec& spec, Budget& budget,
                                const SolveOptions& options = {});
IsolationCertificate iota_exact(const Graph& g, const FamilySpec& spec);

// Certificate for one candidate set, without any optimality claim.
IsolationCertificate check_set(const Graph& g, const FamilySpec& spec, const VertexSet& set,
                               Budget& budget);
IsolationCertificate check_set(const Graph& g, const FamilySpec& spec, const VertexSet& set);

int solve_iota(const Graph& g, const FamilySpec& spec);

int domination_number(const Graph& g, Budget& budget);
int domination_number(const Graph& g);

}  // namespace iso
