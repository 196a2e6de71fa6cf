#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gtwist/errors.hpp"

namespace gtwist {

// Vertices are dense integers 0..n-1.
using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Throws PreconditionError if a == b.
Edge make_edge(Vertex a, Vertex b);

inline bool edges_disjoint(const Edge& e, const Edge& f) {
    return e.u != f.u && e.u != f.v && e.v != f.u && e.v != f.v;
}

// Result of checking a raw rotation table against the invariants.
// `ok()` is true when no invariant is violated; otherwise `message` names the
// first violated invariant and `vertex` the offending vertex (-1 if global).
struct ValidationReport {
    std::string message;
    Vertex vertex = -1;

    bool ok() const { return message.empty(); }
};

// Checks a candidate rotation table: n >= 3, each row a permutation of the
// other vertices, no self-references.
ValidationReport validate_rows(const std::vector<std::vector<Vertex>>& rows);

// Abstract rotation system of a complete graph: for every vertex, the
// clockwise cyclic order of all other vertices.  Rows are stored shifted so
// that each starts at its smallest entry; equality of stored rows is
// therefore equality of cyclic orders.  Immutable after construction.
class RotationSystem {
public:
    // Validates and canonicalizes; throws PreconditionError with the
    // validation message on invalid input.
    static RotationSystem from_rows(std::vector<std::vector<Vertex>> rows);

    int n() const { return n_; }
    const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
    const std::vector<std::vector<Vertex>>& rows() const { return rot_; }

    // Index of u in the rotation of v; requires u != v.
    int position(Vertex v, Vertex u) const { return pos_[static_cast<size_t>(v) * n_ + u]; }

    // Rotation of v as a linear sequence beginning at u (u first).
    std::vector<Vertex> rotation_from(Vertex v, Vertex u) const;

    friend bool operator==(const RotationSystem& a, const RotationSystem& b) {
        return a.rot_ == b.rot_;
    }

private:
    RotationSystem() = default;
    void build_positions();

    int n_ = 0;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<int> pos_;  // n*n, pos_[v*n+u] = index of u in rot_[v], -1 on diagonal
};

// Rotation system induced on `subset` (|subset| >= 3), relabeled to
// 0..|subset|-1 preserving the order of the original labels.
RotationSystem induced_subsystem(const RotationSystem& rs, std::vector<Vertex> subset);

// Every rotation reversed (mirror image).  Involution.
RotationSystem invert(const RotationSystem& rs);

// perm must be a bijection on 0..n-1; vertex v becomes perm[v].
RotationSystem relabel(const RotationSystem& rs, const std::vector<Vertex>& perm);

}  // namespace gtwist
