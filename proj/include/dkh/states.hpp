#pragma once
// Resolving cube vertices into cuspidal states. A resolution word picks the
// local splitting at every unresolved singular point; the resolved diagram is
// a disjoint union of open and closed curves built from elementary arcs (one
// arc per strand level per inter-column gap).
//
// Local splitting semantics on the arc ends around a point:
//   crossing  0: both strands pass straight through the column,
//             1: the left pair and the right pair are each joined by a cusp;
//   turn-back 0: the wall pair is cut into two boundary endpoints,
//             1: the wall pair stays joined by a cusped turn-back.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dkh/divide.hpp"

namespace dkh {

// Bit of point t (profile order) is (bits >> (length-1-t)) & 1, so ascending
// integers enumerate words in lexicographic order, e.g. 00, 01, 10, 11.
struct ResolutionWord {
    uint32_t bits = 0;
    int length = 0;

    int bit(int t) const { return (bits >> (length - 1 - t)) & 1u; }
    ResolutionWord with_flip(int t) const { return {bits ^ (1u << (length - 1 - t)), length}; }
    std::string to_string() const;

    friend bool operator==(const ResolutionWord&, const ResolutionWord&) = default;
};

struct StateComponent {
    int id = 0;
    bool closed = false;
    int32_t min_arc = 0;
    int32_t arc_count = 0;
    uint64_t arc_hash = 0;  // order-independent hash of the arc set
};

struct StateComponents {
    std::vector<StateComponent> comps;  // sorted by min_arc; index == id
    std::vector<int32_t> comp_of_arc;   // arc id -> component id
    int op = 0;
    int cl = 0;

    int count() const { return static_cast<int>(comps.size()); }
};

struct Gradings {
    int r_plus = 0;
    int r_minus = 0;
    int r_zero = 0;
    int i = 0;  // r_plus - r_minus + r_zero
    int k = 0;  // writhe + 2 i - r_zero
};

std::pair<StateComponents, Gradings> resolve_state(const Divide& divide, ResolutionWord word);
std::pair<StateComponents, Gradings> resolve_state(const PartialDivide& divide, ResolutionWord word);

// A state with a sign on each component. Sign bits are packed with component
// 0 in the most significant position and 0 meaning '+', so ascending integers
// enumerate sign vectors lexicographically by component id with '+' < '-'.
struct EnhancedState {
    ResolutionWord word;
    uint32_t signs = 0;
    int i = 0;
    int j = 0;
};

inline int sign_of(uint32_t signs, int comp, int comp_count) {
    return ((signs >> (comp_count - 1 - comp)) & 1u) ? -1 : +1;
}

std::string signs_to_string(uint32_t signs, int comp_count);

// j = k + sum over components of sign * (1 open / 2 closed).
int degree_j(const StateComponents& comps, const Gradings& gr, uint32_t signs);

// All enhanced states grouped by (i, j); within a group the order is word as
// binary counter, then sign vector. Throws TooManyPoints past the limit.
std::map<std::pair<int, int>, std::vector<EnhancedState>> enumerate_enhanced(const Divide& divide,
                                                                             int max_points = 24);

}  // namespace dkh
