#include "gtwist/points.hpp"

#include <algorithm>
#include <numeric>

#include "gtwist/rng.hpp"

namespace gtwist {

int orient(const Point& a, const Point& b, const Point& c) {
    const Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(det);
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
    return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

void require_general_position(const PointSet& ps) {
    const int n = ps.n();
    if (n < 3) throw PreconditionError("point set needs at least 3 points");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (ps.pts[i] == ps.pts[j]) throw PreconditionError("duplicate point");
            for (int k = j + 1; k < n; ++k)
                if (orient(ps.pts[i], ps.pts[j], ps.pts[k]) == 0)
                    throw PreconditionError("collinear triple " + std::to_string(i) + "," +
                                            std::to_string(j) + "," + std::to_string(k));
        }
}

namespace {

struct Dir {
    Vertex target;
    Rat dx, dy;
};

// Angular half-plane: 0 for angles in [0, pi), 1 for [pi, 2*pi).
int half_of(const Dir& d) {
    if (d.dy > 0) return 0;
    if (d.dy < 0) return 1;
    return d.dx > 0 ? 0 : 1;
}

// Counterclockwise-before within the full turn starting at angle 0.
bool ccw_less(const Dir& a, const Dir& b) {
    const int ha = half_of(a), hb = half_of(b);
    if (ha != hb) return ha < hb;
    return sgn(a.dx * b.dy - a.dy * b.dx) > 0;
}

}  // namespace

RotationSystem straightline_rotation_system(const PointSet& ps) {
    require_general_position(ps);
    const int n = ps.n();
    std::vector<std::vector<Vertex>> rows(static_cast<size_t>(n));
    std::vector<Dir> dirs;
    for (Vertex v = 0; v < n; ++v) {
        dirs.clear();
        for (Vertex u = 0; u < n; ++u)
            if (u != v) dirs.push_back({u, ps.pts[u].x - ps.pts[v].x, ps.pts[u].y - ps.pts[v].y});
        std::sort(dirs.begin(), dirs.end(), ccw_less);
        std::reverse(dirs.begin(), dirs.end());  // clockwise
        for (const Dir& d : dirs) rows[v].push_back(d.target);
    }
    return RotationSystem::from_rows(std::move(rows));
}

std::vector<std::pair<Edge, Edge>> straightline_crossings(const PointSet& ps) {
    const int n = ps.n();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    std::vector<std::pair<Edge, Edge>> out;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &e = edges[i], &f = edges[j];
            if (!edges_disjoint(e, f)) continue;
            if (segments_cross(ps.pts[e.u], ps.pts[e.v], ps.pts[f.u], ps.pts[f.v]))
                out.emplace_back(e, f);
        }
    return out;
}

PointSet convex_points(int n) {
    if (n < 3) throw PreconditionError("convex_points: n must be at least 3");
    // Rational circle parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2)) with
    // t = 0..n-1: distinct points on the unit circle, angles increasing, so
    // the hull order is 0..n-1 and no three are collinear.
    PointSet ps;
    for (int k = 0; k < n; ++k) {
        const Rat t = rat(k);
        const Rat d = 1 + t * t;
        ps.pts.push_back({(1 - t * t) / d, 2 * t / d});
    }
    return ps;
}

PointSet random_points(int n, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("random_points: n must be at least 3");
    constexpr long long kBox = 1'000'000;
    Rng rng(seed);
    PointSet ps;
    while (ps.n() < n) {
        Point cand{rat(rng.uniform(-kBox, kBox)), rat(rng.uniform(-kBox, kBox))};
        bool ok = true;
        for (int i = 0; ok && i < ps.n(); ++i) {
            if (ps.pts[i] == cand) ok = false;
            for (int j = i + 1; ok && j < ps.n(); ++j)
                if (orient(ps.pts[i], ps.pts[j], cand) == 0) ok = false;
        }
        if (ok) ps.pts.push_back(std::move(cand));
    }
    return ps;
}

}  // namespace gtwist
