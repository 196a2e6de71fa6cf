#pragma once

#include <vector>

#include "gtwist/points.hpp"
#include "gtwist/rng.hpp"
#include "gtwist/rotation_system.hpp"

namespace gtwist::test {

inline std::vector<Vertex> random_perm(int n, Rng& rng) {
    std::vector<Vertex> p(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.uniform(0, i)]);
    return p;
}

inline PointSet reflect_x(const PointSet& ps) {
    PointSet out;
    for (const Point& p : ps.pts) out.pts.push_back({-p.x, p.y});
    return out;
}

}  // namespace gtwist::test
