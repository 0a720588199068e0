#pragma once

#include "iso/detectors.hpp"
#include "iso/family.hpp"
#include "iso/graph.hpp"

#include <string>
#include <vector>

namespace iso {

// The two exceptional inputs: a k-clique, or a 5-cycle when k = 2.
struct SpecialPairVerdict {
    bool special = false;
    std::string reason = "none";  // "k-clique", "five-cycle-k2", or "none"
};

SpecialPairVerdict is_special_pair(const Graph& g, int k);

// One node of the construction's recursion tree.  Vertex fields carry labels
// of the root graph (0 = not applicable at this node).
struct BoundTraceNode {
    std::string tag;
    int n = 0, k = 0, bound = 0;
    int v = 0, x = 0, y = 0, z = 0, w = 0;
    VertexSet W, Z;    // cover chosen around z, and the removed block
    VertexSet set;     // set returned by this node
    std::vector<BoundTraceNode> children;
};

struct BoundResult {
    VertexSet set;
    int size = 0;
    int bound = 0;  // floor(n/(k+1))
    BoundTraceNode trace;
};

// Constructive isolating set against stars of k leaves and regular graphs of
// degree >= k-1: at most floor(n/(k+1)) vertices for connected,
// non-exceptional input.  The recursion follows a fixed case analysis and
// re-verifies itself at every level; k <= 2 falls back to the exact solver
// (or, for k = 1 beyond the guard, to the smaller level-parity class of a
// breadth-first search, at most n/2 vertices).
BoundResult construct_isolating_set(const Graph& g, int k, Budget& budget,
                                    int solver_guard = 26);
BoundResult construct_isolating_set(const Graph& g, int k);

// Same set, re-verified against the wider family selected by i:
// 0 = stars only, 1 = regular graphs of degree >= k-1, 2 = chromatic number
// >= k, 3 = all three together.
BoundResult construct_for_family(const Graph& g, int i, int k, Budget& budget,
                                 int solver_guard = 26);
BoundResult construct_for_family(const Graph& g, int i, int k);

}  // namespace iso
