#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gtwist/rotation_system.hpp"

namespace gtwist {

enum class K4Kind { NoCrossing, Crossing, Unrealizable };

// Outcome of classifying a 4-vertex rotation system.  For Crossing,
// `matching` identifies which perfect matching of the four sorted vertices
// v0<v1<v2<v3 crosses: 0 = {v0v1, v2v3}, 1 = {v0v2, v1v3}, 2 = {v0v3, v1v2}.
struct K4Outcome {
    K4Kind kind = K4Kind::Unrealizable;
    int matching = -1;

    friend bool operator==(const K4Outcome&, const K4Outcome&) = default;
};

// A 4-vertex rotation system has one free bit per vertex (the cyclic order of
// the other three, (x,y,z) or (x,z,y) with x<y<z), so there are exactly 16
// abstract patterns.  The catalog maps every pattern to its outcome; it is
// built once from two geometric reference drawings (a convex quadrilateral
// and a triangle with an interior point) closed under all 24 relabelings and
// inversion.  Patterns never generated are Unrealizable.
class K4Catalog {
public:
    static const K4Catalog& instance();

    K4Outcome by_pattern(int bits) const { return table_[bits]; }
    int realizable_pattern_count() const;

private:
    K4Catalog();
    std::array<K4Outcome, 16> table_;
};

// Orientation-bit pattern of the subsystem induced by four sorted vertices.
int k4_pattern_bits(const RotationSystem& rs, const std::array<Vertex, 4>& sorted_subset);

// Catalog lookup for a rotation system with exactly 4 vertices.
K4Outcome classify_k4(const RotationSystem& r4);

// O(1) crossing predicate for vertex-disjoint edges in a realizable rotation
// system.  Throws PreconditionError on a shared endpoint and
// NotRealizableError when the induced 4-pattern is not realizable.
bool edges_cross(const RotationSystem& rs, Edge e, Edge f);

// Scans all C(n,4) subsets; the returned list is empty iff every 4-subsystem
// is realizable.  A necessary (not sufficient) condition for realizability.
std::vector<std::array<Vertex, 4>> unrealizable_four_subsets(const RotationSystem& rs);

}  // namespace gtwist
