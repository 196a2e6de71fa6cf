#include "gtwist/recognizer.hpp"

#include <algorithm>
#include <stdexcept>

#include "gtwist/k4.hpp"
#include "gtwist/radial.hpp"

namespace gtwist {

namespace {

// Rank code (0..5) of the cyclic order of three offsets.
int order_code(int o1, int o2, int o3) {
    const int first = (o1 < o2 && o1 < o3) ? 0 : (o2 < o3 ? 1 : 2);
    int a, b;
    if (first == 0) {
        a = o2;
        b = o3;
    } else if (first == 1) {
        a = o1;
        b = o3;
    } else {
        a = o1;
        b = o2;
    }
    return first * 2 + (a > b ? 1 : 0);
}

// Code (base 6, one digit per vertex) of the five-vertex subsystem, relabel
// invariant under order-preserving relabelings.
int five_code(const RotationSystem& rs, const std::array<Vertex, 5>& s) {
    const int modulus = rs.n() - 1;
    int code = 0;
    int mul = 1;
    for (int i = 0; i < 5; ++i) {
        Vertex others[4];
        int k = 0;
        for (int j = 0; j < 5; ++j)
            if (j != i) others[k++] = s[j];
        const Vertex v = s[i];
        const int px = rs.position(v, others[0]);
        int off[3];
        for (int t = 0; t < 3; ++t) {
            int d = rs.position(v, others[t + 1]) - px;
            off[t] = d < 0 ? d + modulus : d;
        }
        code += order_code(off[0], off[1], off[2]) * mul;
        mul *= 6;
    }
    return code;
}

int five_code_rows(const std::array<std::array<Vertex, 4>, 5>& rows) {
    int code = 0;
    int mul = 1;
    for (int i = 0; i < 5; ++i) {
        Vertex others[4];
        int k = 0;
        for (int j = 0; j < 5; ++j)
            if (j != i) others[k++] = static_cast<Vertex>(j);
        int pos[5];
        for (int t = 0; t < 4; ++t) pos[rows[i][t]] = t;
        const int px = pos[others[0]];
        int off[3];
        for (int t = 0; t < 3; ++t) {
            int d = pos[others[t + 1]] - px;
            off[t] = d < 0 ? d + 4 : d;
        }
        code += order_code(off[0], off[1], off[2]) * mul;
        mul *= 6;
    }
    return code;
}

struct T5Data {
    RotationSystem rs;
    CanonicalKey key;
    std::vector<bool> codes;  // indexed by five_code, 6^5 entries

    T5Data() : rs(radial_rotation_system(monotone_radial(5))), key(canonical_key(rs)) {
        codes.assign(6 * 6 * 6 * 6 * 6, false);
        std::array<Vertex, 5> perm = {0, 1, 2, 3, 4};
        do {
            for (int inverted = 0; inverted < 2; ++inverted) {
                RotationSystem t = relabel(rs, {perm[0], perm[1], perm[2], perm[3], perm[4]});
                if (inverted) t = invert(t);
                codes[five_code(t, {0, 1, 2, 3, 4})] = true;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
};

const T5Data& t5_data() {
    static const T5Data data;
    return data;
}

}  // namespace

const RotationSystem& t5_rotation_system() { return t5_data().rs; }
const CanonicalKey& t5_key() { return t5_data().key; }

bool is_t5(const RotationSystem& rs) {
    if (rs.n() != 5) throw PreconditionError("is_t5: rotation system must have 5 vertices");
    return t5_data().codes[five_code(rs, {0, 1, 2, 3, 4})];
}

bool is_t5_subset(const RotationSystem& rs, const std::array<Vertex, 5>& s) {
    return t5_data().codes[five_code(rs, s)];
}

bool is_t5_rows(const std::array<std::array<Vertex, 4>, 5>& rows) {
    return t5_data().codes[five_code_rows(rows)];
}

std::vector<EmptyStarTriangle> empty_star_triangles_at(const RotationSystem& rs, Vertex x) {
    const int n = rs.n();
    if (n < 4) throw PreconditionError("empty_star_triangles_at: n must be at least 4");
    if (x < 0 || x >= n) throw PreconditionError("empty_star_triangles_at: vertex out of range");
    const auto& rot = rs.rotation(x);
    std::vector<EmptyStarTriangle> out;
    for (int idx = 0; idx < n - 1; ++idx) {
        const Vertex y = rot[idx];
        const Vertex z = rot[(idx + 1) % (n - 1)];
        const Edge yz = make_edge(y, z);
        bool star = true;
        for (Vertex w = 0; w < n && star; ++w) {
            if (w == x || w == y || w == z) continue;
            if (edges_cross(rs, make_edge(x, w), yz)) star = false;
        }
        if (star) out.push_back({x, y, z});
    }
    return out;
}

std::optional<int> compatible(const RotationSystem& rs, Vertex v1, Vertex v2) {
    if (v1 == v2) throw PreconditionError("compatible: vertices must differ");
    const int len = rs.n() - 1;
    const std::vector<Vertex> w = rs.rotation_from(v1, v2);
    const std::vector<Vertex> t = rs.rotation_from(v2, v1);

    const int pos0 = [&] {
        for (int i = 1; i < len; ++i)
            if (w[i] == t[1]) return i;
        return -1;
    }();
    if (pos0 < 0) return std::nullopt;  // unreachable for complete graphs

    if (pos0 == len - 1) {
        // Full reverse, covering the split at either end.
        for (int k = 1; k < len; ++k)
            if (t[k] != w[len - k]) return std::nullopt;
        return len;  // i = n-1
    }
    for (int k = 1; k <= pos0; ++k)
        if (t[k] != w[pos0 + 1 - k]) return std::nullopt;
    for (int m = 1; m < len - pos0; ++m)
        if (t[pos0 + m] != w[len - m]) return std::nullopt;
    return pos0 + 1;  // interior split
}

Bipartition bipartition_from_rotations(const RotationSystem& rs, Vertex v1, Vertex v2, int i) {
    const int n = rs.n();
    if (i < 1 || i > n - 1)
        throw PreconditionError("bipartition_from_rotations: split index out of range");
    const auto check = compatible(rs, v1, v2);
    const std::vector<Vertex> w = rs.rotation_from(v1, v2);
    Bipartition bp;
    if (i == 1 || i == n - 1) {
        if (!check || *check != n - 1)
            throw PreconditionError("bipartition_from_rotations: split index inconsistent");
        bp.B.assign(w.begin() + 1, w.end());
        bp.degenerate_full_reverse = true;
        return bp;
    }
    if (!check || *check != i)
        throw PreconditionError("bipartition_from_rotations: split index inconsistent");
    bp.B.assign(w.begin() + 1, w.begin() + i);      // w_2 .. w_i
    bp.A.assign(w.begin() + i, w.end());            // w_{i+1} .. w_{n-1}
    return bp;
}

namespace {

// Conditions (i)-(iii): edges inside A and inside B cross v1v2, edges between
// A and B do not.
bool crossing_conditions_hold(const RotationSystem& rs, Vertex v1, Vertex v2,
                              const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
    const Edge e12 = make_edge(v1, v2);
    for (size_t i = 0; i < A.size(); ++i)
        for (size_t j = i + 1; j < A.size(); ++j)
            if (!edges_cross(rs, make_edge(A[i], A[j]), e12)) return false;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = i + 1; j < B.size(); ++j)
            if (!edges_cross(rs, make_edge(B[i], B[j]), e12)) return false;
    for (Vertex a : A)
        for (Vertex b : B)
            if (edges_cross(rs, make_edge(a, b), e12)) return false;
    return true;
}

// Conditions (iv)/(v): cutting the rotation of `at` at `other`, every vertex
// of B appears before every vertex of A.
bool order_condition_holds(const RotationSystem& rs, Vertex at, Vertex other,
                           const std::vector<Vertex>& A, const std::vector<Vertex>& B) {
    if (A.empty() || B.empty()) return true;
    const int n = rs.n();
    const int cut = rs.position(at, other);
    auto offset = [&](Vertex u) {
        int d = rs.position(at, u) - cut;
        return d < 0 ? d + (n - 1) : d;
    };
    int max_b = 0, min_a = n;
    for (Vertex b : B) max_b = std::max(max_b, offset(b));
    for (Vertex a : A) min_a = std::min(min_a, offset(a));
    return max_b < min_a;
}

}  // namespace

bool verify_certificate(const RotationSystem& rs, const GtCertificate& cert) {
    const int n = rs.n();
    if (cert.v1 == cert.v2) throw PreconditionError("certificate: v1 == v2");
    std::vector<char> seen(static_cast<size_t>(n), 0);
    auto mark = [&](Vertex v) {
        if (v < 0 || v >= n || seen[v]) throw PreconditionError("certificate: not a partition");
        seen[v] = 1;
    };
    mark(cert.v1);
    mark(cert.v2);
    for (Vertex a : cert.A) mark(a);
    for (Vertex b : cert.B) mark(b);
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw PreconditionError("certificate: not a partition");

    return crossing_conditions_hold(rs, cert.v1, cert.v2, cert.A, cert.B) &&
           order_condition_holds(rs, cert.v1, cert.v2, cert.A, cert.B) &&
           order_condition_holds(rs, cert.v2, cert.v1, cert.A, cert.B);
}

GtDecision recognize_realizable(const RotationSystem& rs) {
    const int n = rs.n();
    if (n < 5) throw PreconditionError("recognize_realizable: n must be at least 5");

    // Step 1: empty star triangles at a fixed vertex.
    const Vertex x = 0;
    const auto triangles = empty_star_triangles_at(rs, x);
    if (triangles.size() != 2) {
        return {false, std::nullopt,
                Witness{StarTriangleCount{x, static_cast<int>(triangles.size())}}};
    }

    // Step 2: candidate compatible pairs from the two triangles.
    const Vertex y = triangles[0].y, z = triangles[0].z;
    const Vertex yp = triangles[1].y, zp = triangles[1].z;
    const std::pair<Vertex, Vertex> candidates[8] = {{y, yp}, {y, zp}, {y, x}, {z, yp},
                                                     {z, zp}, {z, x},  {x, yp}, {x, zp}};
    std::vector<std::pair<Vertex, Vertex>> tried;
    for (const auto& [v1, v2] : candidates) {
        if (v1 == v2) continue;
        if (std::find(tried.begin(), tried.end(), std::make_pair(v1, v2)) != tried.end())
            continue;
        tried.emplace_back(v1, v2);
        const auto split = compatible(rs, v1, v2);
        if (!split) continue;
        Bipartition bp = bipartition_from_rotations(rs, v1, v2, *split);
        if (crossing_conditions_hold(rs, v1, v2, bp.A, bp.B)) {
            // (iv)/(v) hold by construction of the bipartition.
            return {true, GtCertificate{v1, v2, std::move(bp.A), std::move(bp.B)},
                    std::nullopt};
        }
    }
    return {false, std::nullopt, Witness{NoValidPair{std::move(tried)}}};
}

GtDecision recognize_abstract(const RotationSystem& rs) {
    const int n = rs.n();
    if (n < 5) throw PreconditionError("recognize_abstract: n must be at least 5");

    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d)
                    for (Vertex e = d + 1; e < n; ++e)
                        if (!is_t5_subset(rs, {a, b, c, d, e}))
                            return {false, std::nullopt,
                                    Witness{BadFiveSubset{{a, b, c, d, e}}}};

    // All five-vertex subsystems are T5, hence the system is realizable and
    // the quadratic recognizer applies; it also produces the certificate.
    GtDecision decision = recognize_realizable(rs);
    if (n == 6 && !decision.gt) {
        return {false, std::nullopt,
                Witness{ExceptionalCase{
                    "all six five-vertex subsystems are T5 but no bipartition exists"}}};
    }
    if (n != 6 && !decision.gt)
        throw std::logic_error(
            "recognize_abstract: all-T5 system rejected by the quadratic recognizer");
    return decision;
}

std::optional<Edge> find_max_crossing_edge(const RotationSystem& rs) {
    const int n = rs.n();
    if (n < 5) throw PreconditionError("find_max_crossing_edge: n must be at least 5");
    std::optional<Edge> found;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const Edge candidate{u, v};
            bool maximal = true;
            for (Vertex a = 0; a < n && maximal; ++a) {
                if (a == u || a == v) continue;
                for (Vertex b = a + 1; b < n && maximal; ++b) {
                    if (b == u || b == v) continue;
                    if (!edges_cross(rs, candidate, Edge{a, b})) maximal = false;
                }
            }
            if (maximal) {
                if (found)
                    throw PreconditionError(
                        "find_max_crossing_edge: two maximum crossing edges found; "
                        "input is not realizable");
                found = candidate;
            }
        }
    return found;
}

}  // namespace gtwist
