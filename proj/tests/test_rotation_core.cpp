#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gtwist/canonical.hpp"
#include "gtwist/io.hpp"
#include "gtwist/points.hpp"
#include "gtwist/radial.hpp"
#include "gtwist/recognizer.hpp"
#include "gtwist/rotation_system.hpp"
#include "test_util.hpp"

using namespace gtwist;

TEST_CASE("validate accepts generator output") {
    for (int n : {4, 6, 9}) {
        auto rs = straightline_rotation_system(random_points(n, 7 * n));
        CHECK(validate_rows(rs.rows()).ok());
    }
}

TEST_CASE("validate rejects constructed violations") {
    auto rep = validate_rows({{1, 1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
    CHECK_FALSE(rep.ok());
    CHECK(rep.message == "not a permutation");
    CHECK(rep.vertex == 0);

    rep = validate_rows({{0, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
    CHECK_FALSE(rep.ok());
    CHECK(rep.message == "self-reference");
    CHECK(rep.vertex == 0);

    CHECK_FALSE(validate_rows({{1}, {0}}).ok());
    CHECK_FALSE(validate_rows({{1, 2}, {0, 2}, {0}}).ok());

    CHECK_THROWS_AS(RotationSystem::from_rows({{1, 1, 2}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}),
                    PreconditionError);
}

TEST_CASE("rotations compare up to cyclic shift") {
    auto a = RotationSystem::from_rows({{1, 2, 3}, {2, 3, 0}, {3, 0, 1}, {0, 1, 2}});
    auto b = RotationSystem::from_rows({{2, 3, 1}, {0, 2, 3}, {1, 3, 0}, {1, 2, 0}});
    CHECK(a == b);
}

TEST_CASE("induced subsystem: full subset is the identity") {
    auto rs = straightline_rotation_system(random_points(7, 123));
    std::vector<Vertex> all(7);
    for (int i = 0; i < 7; ++i) all[i] = i;
    CHECK(induced_subsystem(rs, all) == rs);
}

TEST_CASE("induced subsystem of convex hexagon matches pentagon oracle") {
    auto hexagon = convex_points(6);
    auto sub = induced_subsystem(straightline_rotation_system(hexagon), {0, 1, 2, 3, 4});
    PointSet first_five;
    first_five.pts.assign(hexagon.pts.begin(), hexagon.pts.begin() + 5);
    CHECK(sub == straightline_rotation_system(first_five));
}

TEST_CASE("every 5-subset of a radial instance is T5") {
    auto rs = radial_rotation_system(monotone_radial(8));
    CHECK(canonical_key(induced_subsystem(rs, {0, 2, 3, 5, 7})) == t5_key());
    CHECK(canonical_key(induced_subsystem(rs, {1, 2, 4, 6, 7})) == t5_key());
}

TEST_CASE("induced subsystem rejects bad subsets") {
    auto rs = straightline_rotation_system(convex_points(6));
    CHECK_THROWS_AS(induced_subsystem(rs, {0, 1}), PreconditionError);
    CHECK_THROWS_AS(induced_subsystem(rs, {0, 1, 99}), PreconditionError);
}

TEST_CASE("invert is an involution and preserves the canonical key") {
    Rng rng(99);
    for (int n : {4, 5, 7}) {
        auto rs = straightline_rotation_system(random_points(n, rng.u64()));
        CHECK(invert(invert(rs)) == rs);
        CHECK(canonical_key(invert(rs)) == canonical_key(rs));
    }
}

TEST_CASE("invert equals the rotation system of the mirrored point set") {
    auto pentagon = convex_points(5);
    auto mirrored = test::reflect_x(pentagon);
    CHECK(invert(straightline_rotation_system(pentagon)) ==
          straightline_rotation_system(mirrored));
}

TEST_CASE("relabel basics") {
    auto rs = straightline_rotation_system(random_points(6, 5));
    std::vector<Vertex> identity = {0, 1, 2, 3, 4, 5};
    CHECK(relabel(rs, identity) == rs);

    Rng rng(17);
    for (int round = 0; round < 10; ++round) {
        auto p = test::random_perm(6, rng);
        std::vector<Vertex> p_inv(6);
        for (int i = 0; i < 6; ++i) p_inv[p[i]] = i;
        CHECK(relabel(relabel(rs, p), p_inv) == rs);
        CHECK(canonical_key(relabel(rs, p)) == canonical_key(rs));
    }
    CHECK_THROWS_AS(relabel(rs, {0, 0, 1, 2, 3, 4}), PreconditionError);
}

TEST_CASE("induced subsystem commutes with relabeling") {
    Rng rng(31);
    auto rs = straightline_rotation_system(random_points(7, 2024));
    for (int round = 0; round < 10; ++round) {
        auto p = test::random_perm(7, rng);
        std::vector<Vertex> subset = {0, 2, 3, 6};
        std::vector<Vertex> mapped;
        for (Vertex v : subset) mapped.push_back(p[v]);
        // Rank map of p restricted to the subset.
        std::vector<Vertex> sorted_mapped = mapped;
        std::sort(sorted_mapped.begin(), sorted_mapped.end());
        std::vector<Vertex> rank(subset.size());
        for (size_t i = 0; i < subset.size(); ++i)
            rank[i] = static_cast<Vertex>(
                std::find(sorted_mapped.begin(), sorted_mapped.end(), p[subset[i]]) -
                sorted_mapped.begin());
        CHECK(induced_subsystem(relabel(rs, p), mapped) ==
              relabel(induced_subsystem(rs, subset), rank));
    }
}

TEST_CASE("canonical key: radial n=5 instances coincide, pentagon differs") {
    auto a = canonical_key(radial_rotation_system(random_radial(5, 1)));
    auto b = canonical_key(radial_rotation_system(random_radial(5, 2)));
    CHECK(a == b);

    // Brute-force non-isomorphism oracle: no transform of the pentagon
    // matches the radial representative.
    auto pentagon = straightline_rotation_system(convex_points(5));
    auto radial = radial_rotation_system(random_radial(5, 3));
    std::vector<Vertex> perm = {0, 1, 2, 3, 4};
    bool any_match = false;
    do {
        for (int inv = 0; inv < 2; ++inv) {
            RotationSystem t = relabel(pentagon, perm);
            if (inv) t = invert(t);
            if (t == radial) any_match = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK_FALSE(any_match);
    CHECK(canonical_key(pentagon) != canonical_key(radial));
}

TEST_CASE("canonical key refuses large n") {
    auto rs = straightline_rotation_system(convex_points(10));
    CHECK_THROWS_AS(canonical_key(rs), PreconditionError);
}

TEST_CASE("canonical key is the class invariant over all transforms") {
    Rng rng(4242);
    auto rs = radial_rotation_system(random_radial(6, 77));
    auto key = canonical_key(rs);
    for (int round = 0; round < 20; ++round) {
        RotationSystem t = relabel(rs, test::random_perm(6, rng));
        if (rng.uniform(0, 1)) t = invert(t);
        CHECK(canonical_key(t) == key);
    }
}

TEST_CASE("parse/serialize round trip") {
    auto rs = straightline_rotation_system(random_points(6, 88));
    auto text = serialize(rs);
    auto parsed = parse_rotation_system(text);
    CHECK(parsed.rs == rs);
    CHECK(serialize(parsed.rs) == text);
}

TEST_CASE("parse densifies arbitrary labels") {
    const char* text =
        "# sparse labels\n"
        "n 3\n"
        "10: 20 30\n"
        "20: 10 30\n"
        "30: 10 20\n";
    auto parsed = parse_rotation_system(text);
    CHECK(parsed.rs.n() == 3);
    CHECK(parsed.original_labels == std::vector<long long>{10, 20, 30});
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_rotation_system("n 5\n0: 1 2 3 4\n1: 0 2 3 4\n2: 0 1 3 4\n3: 0 1 2 4\n"),
                         doctest::Contains("missing rotation"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_rotation_system("n 4\n0: 1 2 2\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n"),
        doctest::Contains("not a permutation"), ParseError);
    CHECK_THROWS_AS(parse_rotation_system("m 4\n"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_rotation_system(
            "n 3\n0: 1 2\n1: 0 2\n2: 0 1\n3: 0 1\n"),
        doctest::Contains("more than"), ParseError);
    CHECK_THROWS_AS(parse_rotation_system("n 4\n0: 1 2 9\n1: 0 2 3\n2: 0 1 3\n3: 0 1 2\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_rotation_system(""), ParseError);
    try {
        parse_rotation_system("n 4\n0: 1 2 3\n0: 1 2 3\n2: 0 1 3\n3: 0 1 2\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(doctest::Contains("duplicate").checkWith(e.what()));
    }
}
