#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gtwist/canonical.hpp"
#include "gtwist/geometry_io.hpp"
#include "gtwist/k4.hpp"
#include "gtwist/points.hpp"
#include "gtwist/radial.hpp"
#include "gtwist/recognizer.hpp"
#include "gtwist/svg.hpp"

using namespace gtwist;

TEST_CASE("radial crossing counts at small n") {
    auto d3 = random_radial(3, 11);
    CHECK(radial_crossings(d3).empty());

    auto d4 = random_radial(4, 12);
    CHECK(radial_crossings(d4).size() == 1);

    auto d5 = random_radial(5, 13);
    CHECK(radial_crossings(d5).size() == 5);
}

TEST_CASE("is_simple holds for accepted samples and the monotone family") {
    for (int seed : {1, 2, 3}) CHECK(is_simple(random_radial(5, seed)));
    for (int n = 3; n <= 12; ++n) {
        CHECK(is_simple(monotone_radial(n)));
        CHECK(is_simple(monotone_radial(n, 1000 + n)));
    }
}

TEST_CASE("constructed double-overlap instance is rejected") {
    // Two long arcs whose angular domains overlap both directly and shifted
    // by one turn, with radii chosen so both overlap pieces change sign.
    RadialDrawing d;
    d.n = 4;
    d.theta = {rat(1, 8), rat(3, 8), rat(5, 8), rat(7, 8)};
    d.rho = {rat(1), rat(10), rat(8), rat(3)};
    auto meeting = arc_meeting(d, Edge{0, 1}, Edge{2, 3});
    CHECK(meeting.crossings.size() == 2);
    CHECK_FALSE(is_simple(d));
}

TEST_CASE("edge through a vertex and adjacent-arc crossings are rejected") {
    // Vertex 2 sits exactly on the arc of edge 0-1.
    RadialDrawing d;
    d.n = 3;
    d.theta = {rat(1, 4), rat(3, 4), rat(1, 8)};
    d.rho = {rat(4), rat(8), rat(5)};
    CHECK_FALSE(is_simple(d));

    // Slightly further out, the arcs of 0-1 and 0-2 cross properly beyond
    // their shared endpoint.
    d.rho[2] = rat(6);
    CHECK(arc_meeting(d, Edge{0, 1}, Edge{0, 2}).crossings.size() == 1);
    CHECK_FALSE(is_simple(d));

    d.rho[2] = rat(3);
    CHECK(is_simple(d));
}

TEST_CASE("degenerate parameters are rejected at validation") {
    RadialDrawing d;
    d.n = 3;
    d.theta = {rat(1, 4), rat(1, 4), rat(3, 4)};
    d.rho = {rat(1), rat(2), rat(3)};
    CHECK_THROWS_AS(validate_radial(d), PreconditionError);
    d.theta = {rat(0), rat(1, 4), rat(3, 4)};  // on the ray
    CHECK_THROWS_AS(validate_radial(d), PreconditionError);
    d.theta = {rat(1, 8), rat(1, 4), rat(3, 4)};
    d.rho = {rat(0), rat(2), rat(3)};
    CHECK_THROWS_AS(validate_radial(d), PreconditionError);
}

TEST_CASE("radial rotation systems: T5, validation, oracle agreement") {
    for (int seed : {21, 22, 23}) {
        auto rs = radial_rotation_system(random_radial(5, seed));
        CHECK(canonical_key(rs) == t5_key());
    }
    auto rs = radial_rotation_system(monotone_radial(10));
    CHECK(validate_rows(rs.rows()).ok());
    CHECK(unrealizable_four_subsets(rs).empty());
}

TEST_CASE("rotating all angles by a common offset preserves the system") {
    auto d = monotone_radial(6);
    auto rs0 = radial_rotation_system(d);
    int tested = 0;
    for (int k = 1; k < 23; ++k) {
        RadialDrawing r = d;
        for (auto& t : r.theta) {
            t += rat(k, 23);
            if (t >= 1) t -= 1;
        }
        // Offsets that break simplicity are outside the model's contract.
        if (!is_simple(r)) continue;
        ++tested;
        CHECK(canonical_key(radial_rotation_system(r)) == canonical_key(rs0));
    }
    CHECK(tested >= 3);
}

TEST_CASE("monotone family: crossings are exactly the nested label pairs") {
    for (int n : {5, 6, 8, 11}) {
        auto d = monotone_radial(n, 40 + n);
        std::set<std::pair<Edge, Edge>> got;
        for (auto& pr : radial_crossings(d)) got.insert(pr);
        std::set<std::pair<Edge, Edge>> expect;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j)
                for (Vertex k = i + 1; k < n; ++k)
                    for (Vertex l = k + 1; l < n; ++l)
                        if (l < j) {  // i < k < l < j nests
                            Edge a{i, j}, b{k, l};
                            expect.insert(a < b ? std::make_pair(a, b) : std::make_pair(b, a));
                        }
        CHECK(got == expect);
    }
}

TEST_CASE("random_radial determinism and retry reporting") {
    auto a = random_radial(5, 77);
    auto b = random_radial(5, 77);
    CHECK(a.theta == b.theta);
    CHECK(a.rho == b.rho);
    CHECK(last_random_radial_attempts() >= 1);
    CHECK_THROWS_AS(random_radial(9, 1, 3), GenerationError);
}

TEST_CASE("straight-line generators") {
    auto quad = convex_points(4);
    auto rs = straightline_rotation_system(quad);
    CHECK(edges_cross(rs, Edge{0, 2}, Edge{1, 3}));
    CHECK_FALSE(edges_cross(rs, Edge{0, 1}, Edge{2, 3}));

    auto a = random_points(7, 9);
    auto b = random_points(7, 9);
    for (int i = 0; i < 7; ++i) CHECK(a.pts[i] == b.pts[i]);
    CHECK_NOTHROW(require_general_position(a));

    PointSet collinear;
    collinear.pts = {{rat(0), rat(0)}, {rat(1), rat(1)}, {rat(2), rat(2)}, {rat(0), rat(1)}};
    CHECK_THROWS_AS(straightline_rotation_system(collinear), PreconditionError);
}

TEST_CASE("convex point sets are in hull order and never generalized twisted") {
    auto ps = convex_points(5);
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5, k = (i + 2) % 5;
        CHECK(orient(ps.pts[i], ps.pts[j], ps.pts[k]) > 0);
    }
    CHECK_FALSE(recognize_abstract(straightline_rotation_system(convex_points(7))).gt);
}

TEST_CASE("drawing parameter files round trip") {
    auto d = random_radial(5, 3);
    auto back = parse_radial(serialize_radial(d));
    CHECK(back.theta == d.theta);
    CHECK(back.rho == d.rho);

    auto ps = random_points(6, 4);
    auto ps2 = parse_points(serialize_points(ps));
    for (int i = 0; i < 6; ++i) CHECK(ps.pts[i] == ps2.pts[i]);

    CHECK_THROWS_AS(parse_radial("n 3\n0 1/4 1\n1 1/4 2\n2 3/4 3\n"), ParseError);
    CHECK_THROWS_AS(parse_points("n 3\n0 0 0\n1 1 1\n2 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_radial("n 3\n0 x 1\n"), ParseError);
}

TEST_CASE("svg output is deterministic and structured") {
    auto d = random_radial(5, 8);
    auto svg1 = render_svg(d);
    auto svg2 = render_svg(d);
    CHECK(svg1 == svg2);
    CHECK(svg1.find("<svg") != std::string::npos);
    CHECK(svg1.find("polyline") != std::string::npos);
    CHECK(svg1.find(">O<") != std::string::npos);  // origin label
    CHECK(svg1.find(">r<") != std::string::npos);  // ray label

    auto svg3 = render_svg(convex_points(5));
    CHECK(svg3.find("<line") != std::string::npos);
    CHECK(render_svg(convex_points(5)) == svg3);
}
