#include "gtwist/radial.hpp"

#include <algorithm>
#include <set>

#include "gtwist/rng.hpp"

namespace gtwist {

void validate_radial(const RadialDrawing& d) {
    if (d.n < 3) throw PreconditionError("radial drawing needs at least 3 vertices");
    if (static_cast<int>(d.theta.size()) != d.n || static_cast<int>(d.rho.size()) != d.n)
        throw PreconditionError("theta/rho size mismatch");
    for (int v = 0; v < d.n; ++v) {
        if (d.theta[v] <= 0 || d.theta[v] >= 1)
            throw PreconditionError("angle of vertex " + std::to_string(v) +
                                    " must lie strictly inside (0,1) turns");
        if (d.rho[v] <= 0)
            throw PreconditionError("radius of vertex " + std::to_string(v) +
                                    " must be positive");
    }
    for (int u = 0; u < d.n; ++u)
        for (int v = u + 1; v < d.n; ++v)
            if (d.theta[u] == d.theta[v])
                throw PreconditionError("vertices " + std::to_string(u) + " and " +
                                        std::to_string(v) + " share an angle");
}

EdgeArc edge_arc(const RadialDrawing& d, Edge e) {
    Vertex lo = e.u, hi = e.v;
    if (d.theta[lo] > d.theta[hi]) std::swap(lo, hi);
    return EdgeArc{e, d.theta[hi], d.theta[lo] + 1, d.rho[hi], d.rho[lo]};
}

Rat arc_radius(const EdgeArc& arc, const Rat& psi) {
    return arc.ra + (psi - arc.a) * (arc.rb - arc.ra) / (arc.b - arc.a);
}

namespace {

Rat plane_angle(const Rat& psi) { return psi >= 1 ? Rat(psi - 1) : psi; }

}  // namespace

ArcMeeting arc_meeting(const RadialDrawing& d, Edge e, Edge f) {
    const EdgeArc ae = edge_arc(d, e);
    const EdgeArc af = edge_arc(d, f);
    ArcMeeting m;
    for (int shift = -1; shift <= 1; ++shift) {
        // Overlap of ae's domain with af's domain shifted by `shift` turns;
        // there both arcs pass over the same plane angles.
        const Rat fa = af.a + shift;
        const Rat fb = af.b + shift;
        const Rat lo = ae.a > fa ? ae.a : fa;
        const Rat hi = ae.b < fb ? ae.b : fb;
        if (lo > hi) continue;
        const Rat glo = arc_radius(ae, lo) - arc_radius(af, lo - shift);
        if (lo == hi) {
            if (glo == 0) m.boundary_contacts.emplace_back(plane_angle(lo), arc_radius(ae, lo));
            continue;
        }
        const Rat ghi = arc_radius(ae, hi) - arc_radius(af, hi - shift);
        if (glo == 0 && ghi == 0) {
            m.overlap = true;
            continue;
        }
        if (glo == 0) {
            m.boundary_contacts.emplace_back(plane_angle(lo), arc_radius(ae, lo));
            continue;
        }
        if (ghi == 0) {
            m.boundary_contacts.emplace_back(plane_angle(hi), arc_radius(ae, hi));
            continue;
        }
        if (sgn(glo) != sgn(ghi)) {
            const Rat psi = lo + (hi - lo) * glo / (glo - ghi);
            m.crossings.emplace_back(plane_angle(psi), arc_radius(ae, psi));
        }
    }
    return m;
}

namespace {

std::vector<Edge> all_edges(int n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    return edges;
}

bool contact_is_vertex(const std::pair<Rat, Rat>& contact, const RadialDrawing& d, Vertex w) {
    return contact.first == d.theta[w] && contact.second == d.rho[w];
}

std::vector<Vertex> shared_vertices(Edge e, Edge f) {
    std::vector<Vertex> out;
    for (Vertex a : {e.u, e.v})
        if (a == f.u || a == f.v) out.push_back(a);
    return out;
}

}  // namespace

bool is_simple(const RadialDrawing& d) {
    validate_radial(d);
    const auto edges = all_edges(d.n);

    // No edge passes through a non-incident vertex.
    for (const Edge& e : edges) {
        const EdgeArc arc = edge_arc(d, e);
        for (Vertex w = 0; w < d.n; ++w) {
            if (w == e.u || w == e.v) continue;
            for (int shift = 0; shift <= 1; ++shift) {
                const Rat psi = d.theta[w] + shift;
                if (psi >= arc.a && psi <= arc.b && arc_radius(arc, psi) == d.rho[w])
                    return false;
            }
        }
    }

    std::vector<std::pair<Rat, Rat>> crossing_points;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &e = edges[i], &f = edges[j];
            const ArcMeeting m = arc_meeting(d, e, f);
            if (m.overlap) return false;
            const auto shared = shared_vertices(e, f);
            if (shared.empty()) {
                // Disjoint pair: at most one proper crossing, no touching.
                if (!m.boundary_contacts.empty()) return false;
                if (m.crossings.size() > 1) return false;
                for (const auto& c : m.crossings) crossing_points.push_back(c);
            } else {
                // Adjacent pair: only the shared endpoint.
                if (!m.crossings.empty()) return false;
                for (const auto& c : m.boundary_contacts)
                    if (!contact_is_vertex(c, d, shared.front())) return false;
            }
        }

    // Crossing points pairwise distinct (general position).
    std::sort(crossing_points.begin(), crossing_points.end(),
              [](const auto& a, const auto& b) {
                  const int c = cmp(a.first, b.first);
                  return c != 0 ? c < 0 : a.second < b.second;
              });
    for (size_t i = 1; i < crossing_points.size(); ++i)
        if (crossing_points[i] == crossing_points[i - 1]) return false;
    return true;
}

std::vector<std::pair<Edge, Edge>> radial_crossings(const RadialDrawing& d) {
    validate_radial(d);
    const auto edges = all_edges(d.n);
    std::vector<std::pair<Edge, Edge>> out;
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            if (!edges_disjoint(edges[i], edges[j])) continue;
            if (!arc_meeting(d, edges[i], edges[j]).crossings.empty())
                out.emplace_back(edges[i], edges[j]);
        }
    return out;
}

RotationSystem radial_rotation_system(const RadialDrawing& d) {
    validate_radial(d);
    // At v, an edge towards a lower-angle vertex leaves counterclockwise, one
    // towards a higher-angle vertex leaves clockwise; within each bundle the
    // tangent direction is ordered by the arc's radial slope.  Reading
    // clockwise: first the clockwise bundle by increasing slope, then the
    // counterclockwise bundle by increasing slope.
    struct Leaving {
        Vertex target;
        Rat slope;
    };
    std::vector<std::vector<Vertex>> rows(static_cast<size_t>(d.n));
    std::vector<Leaving> cw, ccw;
    for (Vertex v = 0; v < d.n; ++v) {
        cw.clear();
        ccw.clear();
        for (Vertex u = 0; u < d.n; ++u) {
            if (u == v) continue;
            if (d.theta[u] > d.theta[v])
                cw.push_back({u, (d.rho[v] - d.rho[u]) / (d.theta[v] + 1 - d.theta[u])});
            else
                ccw.push_back({u, (d.rho[u] - d.rho[v]) / (d.theta[u] + 1 - d.theta[v])});
        }
        auto by_slope = [](const Leaving& a, const Leaving& b) { return a.slope < b.slope; };
        std::sort(cw.begin(), cw.end(), by_slope);
        std::sort(ccw.begin(), ccw.end(), by_slope);
        for (size_t i = 1; i < cw.size(); ++i)
            if (cw[i].slope == cw[i - 1].slope)
                throw PreconditionError("degenerate drawing: coinciding tangent directions");
        for (size_t i = 1; i < ccw.size(); ++i)
            if (ccw[i].slope == ccw[i - 1].slope)
                throw PreconditionError("degenerate drawing: coinciding tangent directions");
        auto& row = rows[v];
        row.reserve(static_cast<size_t>(d.n) - 1);
        for (const Leaving& l : cw) row.push_back(l.target);
        for (const Leaving& l : ccw) row.push_back(l.target);
    }
    return RotationSystem::from_rows(std::move(rows));
}

namespace {
thread_local int g_last_attempts = 0;
}

int last_random_radial_attempts() { return g_last_attempts; }

RadialDrawing random_radial(int n, std::uint64_t seed, int max_attempts) {
    if (n < 3) throw PreconditionError("random_radial: n must be at least 3");
    constexpr long long kAngleDen = 1 << 20;
    constexpr long long kRadiusMax = 1'000'000;
    Rng rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        RadialDrawing d;
        d.n = n;
        std::set<long long> used;
        while (static_cast<int>(used.size()) < n)
            used.insert(rng.uniform(1, kAngleDen - 1));
        // Random assignment of the distinct angles to vertices.
        std::vector<long long> nums(used.begin(), used.end());
        for (int i = n - 1; i > 0; --i)
            std::swap(nums[i], nums[rng.uniform(0, i)]);
        for (int v = 0; v < n; ++v) {
            d.theta.push_back(rat(nums[v], kAngleDen));
            d.rho.push_back(rat(rng.uniform(1, kRadiusMax)));
        }
        if (is_simple(d)) {
            g_last_attempts = attempt;
            return d;
        }
    }
    throw GenerationError(
        "random_radial: retry budget exhausted for n = " + std::to_string(n) +
        "; use monotone_radial or an enumeration-catalog instance instead");
}

RadialDrawing monotone_radial(int n) {
    // Fixed seed: a canonical representative.  Evenly spaced angles with
    // linear radii are avoided because their symmetry makes several crossings
    // coincide in one point.
    return monotone_radial(n, 0x600dc0ffee5eedULL);
}

RadialDrawing monotone_radial(int n, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("monotone_radial: n must be at least 3");
    const long long angle_den = std::max(1LL << 20, 16LL * n);
    const long long radius_max = std::max(1'000'000LL, 16LL * n);
    Rng rng(seed);
    std::set<long long> angles;
    while (static_cast<int>(angles.size()) < n) angles.insert(rng.uniform(1, angle_den - 1));
    std::set<long long> radii;
    while (static_cast<int>(radii.size()) < n) radii.insert(rng.uniform(1, radius_max));
    RadialDrawing d;
    d.n = n;
    for (long long a : angles) d.theta.push_back(rat(a, angle_den));
    for (long long r : radii) d.rho.push_back(rat(r));
    return d;
}

}  // namespace gtwist
