#include "gtwist/k4.hpp"

#include <algorithm>

#include "gtwist/points.hpp"

namespace gtwist {

namespace {

// True iff the positions read ascending when taken cyclically.
bool cyclically_ascending(int px, int py, int pz) {
    return (px < py && py < pz) || (py < pz && pz < px) || (pz < px && px < py);
}

int orientation_bit(const RotationSystem& rs, Vertex v, Vertex x, Vertex y, Vertex z) {
    return cyclically_ascending(rs.position(v, x), rs.position(v, y), rs.position(v, z)) ? 0 : 1;
}

}  // namespace

int k4_pattern_bits(const RotationSystem& rs, const std::array<Vertex, 4>& s) {
    int bits = 0;
    for (int i = 0; i < 4; ++i) {
        Vertex others[3];
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) others[k++] = s[j];
        bits |= orientation_bit(rs, s[i], others[0], others[1], others[2]) << i;
    }
    return bits;
}

K4Catalog::K4Catalog() {
    table_.fill(K4Outcome{K4Kind::Unrealizable, -1});

    struct Reference {
        PointSet pts;
        std::optional<std::pair<Edge, Edge>> crossing;
    };
    // Convex quadrilateral (one crossing, the diagonals) and a triangle with
    // an interior point (plane).  Crossings are computed, not transcribed.
    Reference refs[2];
    refs[0].pts.pts = {{rat(0), rat(0)}, {rat(2), rat(0)}, {rat(2), rat(2)}, {rat(0), rat(2)}};
    refs[1].pts.pts = {{rat(0), rat(0)}, {rat(4), rat(0)}, {rat(2), rat(4)}, {rat(2), rat(1)}};
    for (Reference& ref : refs) {
        auto crossings = straightline_crossings(ref.pts);
        if (crossings.size() > 1)
            throw std::logic_error("K4 reference drawing has more than one crossing");
        if (!crossings.empty()) ref.crossing = crossings.front();
    }

    std::array<Vertex, 4> perm = {0, 1, 2, 3};
    do {
        for (int inverted = 0; inverted < 2; ++inverted) {
            for (const Reference& ref : refs) {
                RotationSystem base = straightline_rotation_system(ref.pts);
                RotationSystem t = relabel(base, {perm[0], perm[1], perm[2], perm[3]});
                if (inverted) t = invert(t);
                const int bits = k4_pattern_bits(t, {0, 1, 2, 3});
                K4Outcome outcome{K4Kind::NoCrossing, -1};
                if (ref.crossing) {
                    // Map the crossing pair through the relabeling; the
                    // matching index is the partner of the smallest vertex.
                    const Edge e1 = make_edge(perm[ref.crossing->first.u], perm[ref.crossing->first.v]);
                    const Edge e2 = make_edge(perm[ref.crossing->second.u], perm[ref.crossing->second.v]);
                    const Edge with0 = (e1.u == 0) ? e1 : e2;
                    outcome = K4Outcome{K4Kind::Crossing, with0.v - 1};
                }
                K4Outcome& slot = table_[bits];
                if (slot.kind != K4Kind::Unrealizable && slot != outcome)
                    throw std::logic_error("K4 catalog: conflicting outcomes for one pattern");
                slot = outcome;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

const K4Catalog& K4Catalog::instance() {
    static const K4Catalog catalog;
    return catalog;
}

int K4Catalog::realizable_pattern_count() const {
    int count = 0;
    for (const K4Outcome& o : table_)
        if (o.kind != K4Kind::Unrealizable) ++count;
    return count;
}

K4Outcome classify_k4(const RotationSystem& r4) {
    if (r4.n() != 4) throw PreconditionError("classify_k4: rotation system must have 4 vertices");
    return K4Catalog::instance().by_pattern(k4_pattern_bits(r4, {0, 1, 2, 3}));
}

bool edges_cross(const RotationSystem& rs, Edge e, Edge f) {
    if (!edges_disjoint(e, f))
        throw PreconditionError("edges_cross: edges share an endpoint");
    std::array<Vertex, 4> s = {e.u, e.v, f.u, f.v};
    std::sort(s.begin(), s.end());
    const K4Outcome outcome = K4Catalog::instance().by_pattern(k4_pattern_bits(rs, s));
    switch (outcome.kind) {
        case K4Kind::NoCrossing:
            return false;
        case K4Kind::Unrealizable:
            throw NotRealizableError(
                "4-subsystem {" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                    std::to_string(s[2]) + "," + std::to_string(s[3]) + "} is not realizable",
                {s[0], s[1], s[2], s[3]});
        case K4Kind::Crossing:
            break;
    }
    // The crossing matching pairs s[0] with s[matching+1]; e and f cross iff
    // they are exactly that matching.
    const Vertex partner = s[outcome.matching + 1];
    const Edge containing0 = (e.u == s[0] || e.v == s[0]) ? e : f;
    return containing0.u == partner || containing0.v == partner;
}

std::vector<std::array<Vertex, 4>> unrealizable_four_subsets(const RotationSystem& rs) {
    std::vector<std::array<Vertex, 4>> bad;
    const int n = rs.n();
    const auto& catalog = K4Catalog::instance();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                for (Vertex d = c + 1; d < n; ++d) {
                    const std::array<Vertex, 4> s = {a, b, c, d};
                    if (catalog.by_pattern(k4_pattern_bits(rs, s)).kind == K4Kind::Unrealizable)
                        bad.push_back(s);
                }
    return bad;
}

}  // namespace gtwist
