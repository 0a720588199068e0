#pragma once

#include "iso/family.hpp"
#include "iso/graph.hpp"

#include <optional>

namespace iso {

// A concrete forbidden subgraph found in a host graph: the matched family
// variant plus the vertices and edges of the copy, in host labels.  Cycle and
// path witnesses keep their vertices in traversal order.
struct Witness {
    FamilyKind kind = FamilyKind::SingleVertex;
    VertexSet vertices;
    std::vector<Edge> edges;
};

std::optional<Witness> contains_star(const Graph& g, int k);

std::optional<Witness> contains_clique(const Graph& g, int k, Budget& budget);
std::optional<Witness> contains_clique(const Graph& g, int k);

std::optional<Witness> contains_cycle_any(const Graph& g);

// k = 1 and k = 2 are the single-vertex and single-edge aliases.
std::optional<Witness> contains_cycle_len(const Graph& g, int k, Budget& budget);
std::optional<Witness> contains_cycle_len(const Graph& g, int k);

std::optional<Witness> contains_path_order(const Graph& g, int k, Budget& budget);
std::optional<Witness> contains_path_order(const Graph& g, int k);

// Exactly r-regular subgraph (not necessarily induced), r >= 1.
std::optional<Witness> find_exact_regular(const Graph& g, int r, Budget& budget);
std::optional<Witness> find_exact_regular(const Graph& g, int r);

// Some r'-regular subgraph with r' >= r.
std::optional<Witness> contains_regular_min(const Graph& g, int r, Budget& budget);
std::optional<Witness> contains_regular_min(const Graph& g, int r);

int chromatic_number(const Graph& g, Budget& budget);
int chromatic_number(const Graph& g);

std::optional<Witness> contains_chromatic_min(const Graph& g, int k, Budget& budget);
std::optional<Witness> contains_chromatic_min(const Graph& g, int k);

// Dispatch on the family variant; unions try members in listed order and
// return the first hit.
std::optional<Witness> contains_family(const Graph& g, const FamilySpec& spec, Budget& budget);
std::optional<Witness> contains_family(const Graph& g, const FamilySpec& spec);

// Re-validate a witness against the host graph and the family that produced
// it: edges must lie in the host, and the structure must genuinely belong to
// the family.
bool verify_witness(const Graph& g, const FamilySpec& spec, const Witness& w, Budget& budget);
bool verify_witness(const Graph& g, const FamilySpec& spec, const Witness& w);

}  // namespace iso
