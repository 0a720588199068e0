#pragma once

#include "iso/graph.hpp"

#include <string>
#include <vector>

namespace iso {

// A symbolic description of a set of forbidden subgraphs.
enum class FamilyKind {
    SingleVertex,      // K_1 (isolation = domination)
    Star,              // K_{1,k}
    Clique,            // K_k
    CycleLen,          // C_k (k=1,2 are aliases of K_1, K_2)
    PathOrder,         // P_k
    AllCycles,         // any cycle
    RegularMinDegree,  // any regular graph of degree >= r
    ChromaticMin,      // any graph with chromatic number >= k
    Union,             // first match across members, in order
};

struct FamilySpec {
    FamilyKind kind = FamilyKind::SingleVertex;
    int param = 0;                    // k or r; 0 for kinds without a parameter
    std::vector<FamilySpec> members;  // Union only, flat and non-empty
    std::string display;              // original text for round-tripping; cosmetic

    friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
        if (a.kind != b.kind || a.param != b.param) return false;
        if (a.members.size() != b.members.size()) return false;
        for (size_t i = 0; i < a.members.size(); ++i)
            if (!(a.members[i] == b.members[i])) return false;
        return true;  // display is intentionally ignored
    }
    friend bool operator!=(const FamilySpec& a, const FamilySpec& b) { return !(a == b); }
};

FamilySpec family_single_vertex();
FamilySpec family_star(int k);          // k >= 1
FamilySpec family_clique(int k);        // k >= 1
FamilySpec family_cycle(int k);         // k >= 1
FamilySpec family_path(int k);          // k >= 1
FamilySpec family_all_cycles();
FamilySpec family_regular_min(int r);   // r >= 0
FamilySpec family_chromatic_min(int k); // k >= 1
// Nested unions are flattened; the member list must end up non-empty.
FamilySpec family_union(std::vector<FamilySpec> members);

// The named presets: F0 = stars, F1 = regular of degree >= k-1,
// F2 = chromatic number >= k, F01 = F0 or F1, F3 = F0 or F1 or F2.
FamilySpec family_F0(int k);
FamilySpec family_F1(int k);
FamilySpec family_F2(int k);
FamilySpec family_F01(int k);
FamilySpec family_F3(int k);

// Text form: K1 | star:k | clique:k | cycle:k | path:k | cycles | regmin:r |
// chrmin:k | F0:k | F1:k | F2:k | F3:k | F01:k | union(a,b,...).
FamilySpec parse_family(const std::string& text);
std::string family_to_string(const FamilySpec& spec);

}  // namespace iso
