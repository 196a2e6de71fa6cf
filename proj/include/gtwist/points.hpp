#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <utility>
#include <vector>

#include "gtwist/rotation_system.hpp"

namespace gtwist {

// Exact rational scalar.  Construct fractions through rat() so the value is
// always canonicalized (mpq_class's two-argument constructor is not).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

struct Point {
    Rat x;
    Rat y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Points in general position (no 3 collinear), the source of realizable and
// typically non-generalized-twisted instances.
struct PointSet {
    std::vector<Point> pts;

    int n() const { return static_cast<int>(pts.size()); }
};

// Sign of the cross product (b-a) x (c-a): +1 counterclockwise, -1 clockwise,
// 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

// Proper interior crossing of segments ab and cd; endpoints assumed pairwise
// distinct and in general position.
bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d);

// Throws PreconditionError on a collinear triple or duplicate point.
void require_general_position(const PointSet& ps);

// Rotation of each vertex = clockwise angular order of the other points
// around it.  Throws PreconditionError if the set is degenerate.
RotationSystem straightline_rotation_system(const PointSet& ps);

// All edge pairs that properly cross in the straight-line drawing.
std::vector<std::pair<Edge, Edge>> straightline_crossings(const PointSet& ps);

// n rational points on the unit circle in convex position, hull order 0..n-1.
PointSet convex_points(int n);

// Seeded random integer points in general position (collinear triples are
// resampled).  Deterministic for a fixed (n, seed).
PointSet random_points(int n, std::uint64_t seed);

}  // namespace gtwist
