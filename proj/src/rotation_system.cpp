#include "gtwist/rotation_system.hpp"

#include <algorithm>

namespace gtwist {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) throw PreconditionError("edge endpoints must differ");
    return a < b ? Edge{a, b} : Edge{b, a};
}

ValidationReport validate_rows(const std::vector<std::vector<Vertex>>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n < 3) return {"vertex count must be at least 3", -1};
    std::vector<char> seen(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        const auto& row = rows[v];
        if (static_cast<int>(row.size()) != n - 1)
            return {"rotation has wrong length", v};
        std::fill(seen.begin(), seen.end(), 0);
        for (Vertex u : row) {
            if (u == v) return {"self-reference", v};
            if (u < 0 || u >= n) return {"entry out of range", v};
            if (seen[u]) return {"not a permutation", v};
            seen[u] = 1;
        }
    }
    return {};
}

namespace {

// Shift a cyclic sequence so it starts at its smallest entry.
void shift_to_min(std::vector<Vertex>& row) {
    auto it = std::min_element(row.begin(), row.end());
    std::rotate(row.begin(), it, row.end());
}

}  // namespace

RotationSystem RotationSystem::from_rows(std::vector<std::vector<Vertex>> rows) {
    ValidationReport report = validate_rows(rows);
    if (!report.ok())
        throw PreconditionError("invalid rotation system: " + report.message +
                                (report.vertex >= 0
                                     ? " (vertex " + std::to_string(report.vertex) + ")"
                                     : ""));
    RotationSystem rs;
    rs.n_ = static_cast<int>(rows.size());
    for (auto& row : rows) shift_to_min(row);
    rs.rot_ = std::move(rows);
    rs.build_positions();
    return rs;
}

void RotationSystem::build_positions() {
    pos_.assign(static_cast<size_t>(n_) * n_, -1);
    for (Vertex v = 0; v < n_; ++v)
        for (int i = 0; i < n_ - 1; ++i)
            pos_[static_cast<size_t>(v) * n_ + rot_[v][i]] = i;
}

std::vector<Vertex> RotationSystem::rotation_from(Vertex v, Vertex u) const {
    const auto& row = rot_[v];
    const int start = position(v, u);
    std::vector<Vertex> out(row.size());
    for (size_t i = 0; i < row.size(); ++i) out[i] = row[(start + i) % row.size()];
    return out;
}

RotationSystem induced_subsystem(const RotationSystem& rs, std::vector<Vertex> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    const int k = static_cast<int>(subset.size());
    if (k < 3) throw PreconditionError("induced subsystem needs at least 3 vertices");
    std::vector<int> dense(static_cast<size_t>(rs.n()), -1);
    for (int i = 0; i < k; ++i) {
        if (subset[i] < 0 || subset[i] >= rs.n())
            throw PreconditionError("subset vertex out of range");
        dense[subset[i]] = i;
    }
    std::vector<std::vector<Vertex>> rows(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
        rows[i].reserve(static_cast<size_t>(k) - 1);
        for (Vertex u : rs.rotation(subset[i]))
            if (dense[u] >= 0) rows[i].push_back(dense[u]);
    }
    return RotationSystem::from_rows(std::move(rows));
}

RotationSystem invert(const RotationSystem& rs) {
    std::vector<std::vector<Vertex>> rows = rs.rows();
    for (auto& row : rows) std::reverse(row.begin(), row.end());
    return RotationSystem::from_rows(std::move(rows));
}

RotationSystem relabel(const RotationSystem& rs, const std::vector<Vertex>& perm) {
    const int n = rs.n();
    if (static_cast<int>(perm.size()) != n)
        throw PreconditionError("permutation has wrong length");
    std::vector<char> seen(static_cast<size_t>(n));
    for (Vertex p : perm) {
        if (p < 0 || p >= n || seen[p]) throw PreconditionError("not a permutation");
        seen[p] = 1;
    }
    std::vector<std::vector<Vertex>> rows(static_cast<size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        auto& row = rows[perm[v]];
        row.reserve(static_cast<size_t>(n) - 1);
        for (Vertex u : rs.rotation(v)) row.push_back(perm[u]);
    }
    return RotationSystem::from_rows(std::move(rows));
}

}  // namespace gtwist
