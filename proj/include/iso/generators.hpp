#pragma once
// Parameterized graph constructions (blocks-and-markers chains, regular
// connector gadgets and their chained variants) plus exhaustive enumeration
// of small graphs up to isomorphism.

#include "iso/graph.hpp"

#include <map>

namespace iso {

Graph complete_graph(int n);  // n >= 0
Graph star_graph(int k);      // K_{1,k}: center 1, leaves 2..k+1; k >= 1
Graph path_graph(int n);      // n >= 1
Graph cycle_graph(int n);     // n >= 1; orders 1 and 2 alias K_1 and K_2

// x reduced into 1..a: a when a divides x, else x mod a. Requires x, a >= 1.
int mod_star(int x, int a);

// Vertices 1..n around a cycle, i adjacent to everything at cyclic distance
// <= r. Requires n >= 3 and 1 <= r < n; r = 1 is the plain cycle.
Graph cycle_power(int n, int r);

// The k-regular connector gadget on 2k+2 vertices: the (k/2)-th cycle power
// for even k; for odd k the ((k-1)/2)-th power plus a perfect matching of
// chords {i, i+(k+1)/2} over i in [ (k+1)/2 ] and [k+2 .. k+1+(k+1)/2].
Graph gadget_C(int k);  // k >= 2

struct LabeledConstruction {
    Graph graph;
    std::map<std::string, VertexSet> roles;
};

// Chain of q = floor(n/(k+1)) cliques K_{k+1} plus a remainder clique on
// r = n - q(k+1) vertices; marker b_i is the least vertex of block i and
// consecutive markers are joined by a path. q = 0 degenerates to K_n.
// Roles: "b" (markers), "B1".."Bq" (full blocks), "R" (remainder clique).
LabeledConstruction construction_B(int n, int k);  // n >= 1, k >= 1

// Spine vertices u_1..u_{q+r} (q = floor(n/(2k+3)), r the remainder) with a
// gadget copy hanging off each of u_1..u_q via its first vertex; path edges
// run through u_1..u_{q+min(1,r)} only, and for r >= 2 the tail vertices
// u_{q+1}..u_{q+r} form a star centered at u_{q+r}.
// Roles: "u" (spine), "C1".."Cq" (gadget copies), "R" (star tail, empty
// when r <= 1).
LabeledConstruction construction_BnCk(int n, int k);  // k >= 2, n >= 2k+3

// Same with the star tail completed into a clique.
LabeledConstruction construction_BnCk_prime(int n, int k);

// All connected graphs on n vertices up to isomorphism, canonically labeled
// and sorted by canonical encoding. Built level by level: every connected
// graph arises from a connected graph one vertex smaller by attaching the
// new vertex to a nonempty neighbor set. Guarded (default n <= 8).
std::vector<Graph> enumerate_connected(int n, Budget& budget, int guard = 8);
std::vector<Graph> enumerate_connected(int n);

// All graphs on n vertices up to isomorphism, as disjoint unions of
// connected classes (multisets), deterministic order.
std::vector<Graph> enumerate_all(int n, Budget& budget, int guard = 8);
std::vector<Graph> enumerate_all(int n);

}  // namespace iso
