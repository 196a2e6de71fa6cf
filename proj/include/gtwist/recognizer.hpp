#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gtwist/canonical.hpp"
#include "gtwist/rotation_system.hpp"

namespace gtwist {

// Triangle apex-y-z with y,z cyclically consecutive in the rotation of the
// apex and no edge from the apex crossing yz.  For star triangles that
// consecutiveness is exactly emptiness.
struct EmptyStarTriangle {
    Vertex apex;
    Vertex y;
    Vertex z;

    friend bool operator==(const EmptyStarTriangle&, const EmptyStarTriangle&) = default;
};

// Checkable witness that a rotation system is generalized twisted:
// {v1,v2}, A, B partition the vertices, edges inside A and inside B cross
// v1v2, edges between A and B do not, and in both rotations (cut at the other
// vertex) all of B precedes all of A.
struct GtCertificate {
    Vertex v1;
    Vertex v2;
    std::vector<Vertex> A;
    std::vector<Vertex> B;
};

// Refutation witnesses.
struct BadFiveSubset {
    std::array<Vertex, 5> subset;  // induced subsystem is not T5
};
struct StarTriangleCount {
    Vertex vertex;
    int count;  // != 2
};
struct NoValidPair {
    std::vector<std::pair<Vertex, Vertex>> tried;
};
struct ExceptionalCase {
    std::string detail;  // n=6, all five-vertex subsystems T5, bipartition search failed
};
using Witness = std::variant<BadFiveSubset, StarTriangleCount, NoValidPair, ExceptionalCase>;

struct GtDecision {
    bool gt = false;
    std::optional<GtCertificate> certificate;  // set when gt
    std::optional<Witness> witness;            // set when !gt
};

// The unique generalized twisted rotation system of K5, derived from the
// radial generator (not transcribed).
const RotationSystem& t5_rotation_system();
const CanonicalKey& t5_key();

// n must be 5.  Equivalent to canonical_key(rs) == t5_key().
bool is_t5(const RotationSystem& rs);

// Constant-time membership test for the induced subsystem on five sorted
// vertices of a larger system.
bool is_t5_subset(const RotationSystem& rs, const std::array<Vertex, 5>& sorted_subset);

// Five rotations already relabeled to 0..4 (rows[i] = cyclic order at i).
bool is_t5_rows(const std::array<std::array<Vertex, 4>, 5>& rows);

// All empty star triangles at x, one per cyclically consecutive neighbor pair
// that no star edge crosses.  O(n^2).  Throws NotRealizableError when a
// 4-subsystem touching x is not realizable.
std::vector<EmptyStarTriangle> empty_star_triangles_at(const RotationSystem& rs, Vertex x);

// Compatibility of v1 and v2: with the rotation of v1 cut at v2 written
// (v2=w1, w2, ..., w_{n-1}), returns i such that the rotation of v2 cut at v1
// is (v1, w_i, w_{i-1}, ..., w_2, w_{n-1}, w_{n-2}, ..., w_{i+1}); i = n-1
// canonically for the full-reverse case.  Linear time.
std::optional<int> compatible(const RotationSystem& rs, Vertex v1, Vertex v2);

struct Bipartition {
    std::vector<Vertex> A;
    std::vector<Vertex> B;
    // Full-reverse rotations admit both (A=all,B=empty) and (A=empty,B=all);
    // they impose identical conditions, so A=empty is emitted.
    bool degenerate_full_reverse = false;
};

// The bipartition candidate the split index i induces.  Throws
// PreconditionError if i is inconsistent with the rotations.
Bipartition bipartition_from_rotations(const RotationSystem& rs, Vertex v1, Vertex v2, int i);

// Checks all five certificate conditions.  Returns false on a violated
// condition; throws on a malformed partition or unrealizable 4-subsystem.
bool verify_certificate(const RotationSystem& rs, const GtCertificate& cert);

// O(n^2) recognizer for realizable rotation systems (star triangles at
// vertex 0, then the eight candidate pairs).  Caller asserts realizability;
// a detected K4 inconsistency raises NotRealizableError instead of a verdict.
GtDecision recognize_realizable(const RotationSystem& rs);

// O(n^5) recognizer for abstract rotation systems: every five-vertex
// subsystem must be T5 (n=6 additionally delegates to the realizable
// recognizer to separate the exceptional K6).  n >= 5.
GtDecision recognize_abstract(const RotationSystem& rs);

// The unique edge crossing every vertex-disjoint edge, if present.  Naive
// O(n^4) scan; n >= 5 and realizable.
std::optional<Edge> find_max_crossing_edge(const RotationSystem& rs);

}  // namespace gtwist
