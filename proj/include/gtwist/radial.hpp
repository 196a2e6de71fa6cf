#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gtwist/points.hpp"
#include "gtwist/rotation_system.hpp"

namespace gtwist {

// A generator gave up (e.g. rejection-sampling retry budget exhausted).
class GenerationError : public std::runtime_error {
public:
    explicit GenerationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Drawing in the radial model: all vertices on rays from the origin O, every
// edge drawn so that its radius is a linear function of the (lifted) angle.
// Angles are rational fractions of a full turn, strictly inside (0,1), so no
// vertex lies on the reference ray r at angle 0.  By construction every edge
// crosses r exactly once and meets every ray from O at most once; simplicity
// of the whole drawing is *verified*, not assumed (see is_simple).
struct RadialDrawing {
    int n = 0;
    std::vector<Rat> theta;  // per-vertex angle in turns, pairwise distinct, in (0,1)
    std::vector<Rat> rho;    // per-vertex radius, positive
};

// Throws PreconditionError when the drawing violates the model invariants.
void validate_radial(const RadialDrawing& d);

// An edge lifted to the angular line: domain [a, a + len] with len in (0,1),
// radius interpolating linearly between the endpoint radii.  The domain runs
// from the higher-angle endpoint through the ray (lifted angle 1) to the
// lower-angle endpoint at its angle plus one turn.
struct EdgeArc {
    Edge edge;
    Rat a, b;    // lifted domain [a, b], 0 < a < 1 < b < 2
    Rat ra, rb;  // radius at a and at b
};

EdgeArc edge_arc(const RadialDrawing& d, Edge e);

// Radius of the arc at lifted angle psi in [a, b].
Rat arc_radius(const EdgeArc& arc, const Rat& psi);

// Exact intersection analysis of two arcs over the direct and the
// one-turn-shifted domain overlaps.
struct ArcMeeting {
    bool overlap = false;  // the arcs share a whole segment (degenerate)
    // Proper crossings interior to both domains: (plane angle in [0,1), radius).
    std::vector<std::pair<Rat, Rat>> crossings;
    // Touch points at a domain boundary (an endpoint vertex of one arc).
    std::vector<std::pair<Rat, Rat>> boundary_contacts;
};

ArcMeeting arc_meeting(const RadialDrawing& d, Edge e, Edge f);

// True iff the drawing is a simple drawing in general position: disjoint
// edges cross at most once, adjacent edges meet only at the shared endpoint,
// no edge passes through a vertex, and no two crossing points coincide.
bool is_simple(const RadialDrawing& d);

// All vertex-disjoint edge pairs that cross, by exact rational solving.
std::vector<std::pair<Edge, Edge>> radial_crossings(const RadialDrawing& d);

// Clockwise rotation system read off the exact tangent directions.
// Pre: is_simple(d).
RotationSystem radial_rotation_system(const RadialDrawing& d);

// Rejection sampling over random angles and radii; accepts the first simple
// drawing.  Deterministic per (n, seed).  Throws GenerationError when the
// retry budget is exhausted (use monotone_radial or the catalog instead;
// acceptance decays rapidly beyond n = 7).
RadialDrawing random_radial(int n, std::uint64_t seed, int max_attempts = 10000);

// Number of attempts the last successful random_radial call in this thread
// needed (diagnostic).
int last_random_radial_attempts();

// Radial drawing with both angle and radius strictly increasing by label.
// Such drawings are always simple and realize the classical twisted drawing
// T_n: two disjoint edges cross exactly when one label interval nests inside
// the other.  This is the guaranteed generalized-twisted instance source for
// large n.  The seeded overload randomizes the parameters, the plain one is
// a fixed canonical choice.
RadialDrawing monotone_radial(int n);
RadialDrawing monotone_radial(int n, std::uint64_t seed);

}  // namespace gtwist
