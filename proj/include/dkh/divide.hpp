#pragma once
// Combinatorial model of an ordered Morse signed divide: N horizontal strand
// levels bounded by two walls, crossings between them. A wall item is either
// an endpoint (one strand position) or a turn-back joining two vertically
// adjacent positions. Strand positions are 1-indexed from the top and walls
// are read top to bottom.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dkh/errors.hpp"

namespace dkh {

enum class WallKind : uint8_t { Endpoint, TurnBack };

struct Crossing {
    int position = 1;  // top strand index of the transposed pair, 1..N-1
    int sign = +1;     // +1 or -1

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Divide {
    std::string name;  // optional, carried from the document header
    std::vector<WallKind> left_wall;
    std::vector<Crossing> word;
    std::vector<WallKind> right_wall;

    int strand_count() const;    // sum of left wall widths
    int endpoint_count() const;  // Endpoint items on both walls

    friend bool operator==(const Divide& a, const Divide& b) {
        return a.left_wall == b.left_wall && a.word == b.word && a.right_wall == b.right_wall;
    }
};

enum class PointKind : uint8_t { PositiveCrossing, NegativeCrossing, TurnBack };

// A singular point: a signed double point (crossing) or a vertical tangent
// point (wall turn-back). The point order is total: crossings in word order,
// then left turn-backs top to bottom, then right turn-backs top to bottom.
struct SingularPoint {
    PointKind kind;
    int word_index = -1;     // crossings: index into Divide::word
    int position = 0;        // crossings: strand position
    bool right_side = false; // turn-backs: which wall
    int top_level = 0;       // turn-backs: upper of the two joined levels
};

struct SingularProfile {
    int strands = 0;
    int endpoints = 0;
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    int writhe = 0;  // 2 n_plus - 2 n_minus + n_zero
    std::vector<SingularPoint> points;

    int n() const { return n_plus + n_minus + n_zero; }
};

// Checks wall widths and crossing ranges; returns the singular profile.
// Throws StrandCountMismatch, CrossingOutOfRange or EmptyDivide.
SingularProfile validate(const Divide& divide);

// A divide with some singular points pinned to a fixed local splitting
// (0 or 1). Its profile covers the unresolved points only, in base order.
struct PartialDivide {
    Divide base;
    std::vector<std::pair<int, int>> fixed;  // (point index in base profile, bit), sorted

    int fixed_bit(int point) const;  // -1 when unresolved
};

PartialDivide as_partial(const Divide& divide);
PartialDivide pin_point(const PartialDivide& divide, int point, int bit);

// Profile of the unresolved points (counts, writhe and order exclude the
// pinned ones; SingularPoint entries keep their base identity).
SingularProfile validate(const PartialDivide& divide);

int writhe(const Divide& divide);
int writhe(const PartialDivide& divide);

}  // namespace dkh
