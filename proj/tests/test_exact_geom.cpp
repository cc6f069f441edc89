#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"
#include "untangle/rat.hpp"

using namespace untangle;

namespace {
Pt pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }
}  // namespace

TEST_CASE("rational parsing and serialization round-trip in lowest terms") {
    CHECK(rat_to_string(parse_rat("4/6")) == "2/3");
    CHECK(rat_to_string(parse_rat("-4/6")) == "-2/3");
    CHECK(rat_to_string(parse_rat("7")) == "7");
    CHECK(rat_to_string(parse_rat("0/5")) == "0");
    CHECK(parse_rat("1/3") + parse_rat("1/6") == parse_rat("1/2"));
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
}

TEST_CASE("orient distinguishes left, right, and collinear exactly") {
    CHECK(orient(pt("0", "0"), pt("1", "0"), pt("0", "1")) == 1);
    CHECK(orient(pt("0", "0"), pt("1", "0"), pt("0", "-1")) == -1);
    CHECK(orient(pt("0", "0"), pt("1", "1"), pt("2", "2")) == 0);
    // Near-degenerate case a double evaluation cannot resolve.
    Pt a = pt("0", "0");
    Pt b = pt("1000000000000", "1000000000001");
    Pt c = pt("2000000000000", "2000000000003");
    CHECK(orient(a, b, c) == 1);
    // Tiny rational perturbation below double resolution.
    Pt p = pt("1/3", "1/3");
    Pt q = pt("2/3", "2/3");
    Pt r = pt("1", "3000000000000000001/3000000000000000000");
    CHECK(orient(p, q, r) == 1);
    CHECK(orient(p, q, pt("1", "1")) == 0);
}

TEST_CASE("segment predicates") {
    CHECK(on_segment(pt("0", "0"), pt("2", "2"), pt("1", "1")));
    CHECK(on_segment(pt("0", "0"), pt("2", "2"), pt("0", "0")));
    CHECK_FALSE(on_segment(pt("0", "0"), pt("2", "2"), pt("3", "3")));
    CHECK(on_open_segment(pt("0", "0"), pt("2", "2"), pt("1/2", "1/2")));
    CHECK_FALSE(on_open_segment(pt("0", "0"), pt("2", "2"), pt("2", "2")));

    // Proper crossing.
    CHECK(segments_cross(pt("0", "0"), pt("2", "2"), pt("0", "2"), pt("2", "0")));
    // Shared endpoint only: not a crossing.
    CHECK_FALSE(segments_cross(pt("0", "0"), pt("1", "1"), pt("1", "1"), pt("2", "0")));
    // Endpoint in the interior of the other segment: a crossing.
    CHECK(segments_cross(pt("0", "0"), pt("2", "0"), pt("1", "0"), pt("1", "1")));
    // Collinear overlap of positive length: a crossing.
    CHECK(segments_cross(pt("0", "0"), pt("2", "0"), pt("1", "0"), pt("3", "0")));
    // Collinear but disjoint.
    CHECK_FALSE(segments_cross(pt("0", "0"), pt("1", "0"), pt("2", "0"), pt("3", "0")));
    // Identical segments.
    CHECK(segments_cross(pt("0", "0"), pt("1", "0"), pt("0", "0"), pt("1", "0")));
}

TEST_CASE("crossing report on a drawn K4") {
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    // Convex position: diagonals 0-2 and 1-3 cross once.
    Drawing d = {pt("0", "0"), pt("2", "0"), pt("2", "2"), pt("0", "2")};
    auto rep = crossing_pairs(g, d);
    CHECK(rep.edge_pairs.size() == 1);
    CHECK(rep.vertex_on_edge.empty());
    CHECK(rep.coincident_vertices.empty());
    CHECK_FALSE(is_plane(g, d));

    // One vertex pulled inside the triangle: plane.
    Drawing d2 = {pt("0", "0"), pt("4", "0"), pt("2", "3"), pt("2", "1")};
    CHECK(is_plane(g, d2));

    // Vertex 3 on the interior of edge 0-1.
    Drawing d3 = {pt("0", "0"), pt("4", "0"), pt("2", "3"), pt("2", "0")};
    auto rep3 = crossing_pairs(g, d3);
    CHECK_FALSE(rep3.clean());
    CHECK_FALSE(rep3.vertex_on_edge.empty());

    // Coincident vertices.
    Drawing d4 = {pt("0", "0"), pt("4", "0"), pt("2", "3"), pt("0", "0")};
    CHECK_FALSE(crossing_pairs(g, d4).coincident_vertices.empty());
}

TEST_CASE("polygon kernel of a star-shaped polygon") {
    // Non-convex "arrow" polygon, star-shaped from near the base.
    std::vector<Pt> poly = {pt("0", "0"), pt("4", "0"), pt("4", "4"),
                            pt("2", "1"), pt("0", "4")};
    auto ker = polygon_kernel(poly);
    REQUIRE(ker.has_value());
    CHECK(ker->size() >= 3);
    Pt c = kernel_interior_point(poly);
    auto hs = kernel_halfplanes(poly);
    CHECK(strictly_inside_all(c, hs));
    Pt s = simplify_point(c, hs);
    CHECK(strictly_inside_all(s, hs));

    // A spiral-ish polygon with empty kernel.
    std::vector<Pt> bad = {pt("0", "0"), pt("6", "0"), pt("6", "6"), pt("2", "6"),
                           pt("2", "2"), pt("4", "2"), pt("4", "4"), pt("3", "4"),
                           pt("3", "3"), pt("1", "3"), pt("1", "7"), pt("0", "7")};
    CHECK_FALSE(polygon_kernel(bad).has_value());
    CHECK_THROWS_AS(kernel_interior_point(bad), EmptyKernelError);
}

TEST_CASE("x-monotone paths and below_path") {
    std::vector<Pt> path = {pt("0", "0"), pt("1", "2"), pt("3", "-1"), pt("5", "0")};
    CHECK(is_x_monotone(path));
    CHECK(below_path(path, pt("1", "0")));
    CHECK_FALSE(below_path(path, pt("1", "2")));
    CHECK_FALSE(below_path(path, pt("1", "3")));
    CHECK_THROWS_AS(below_path(path, pt("9", "0")), OutOfRangeError);
    std::vector<Pt> zig = {pt("0", "0"), pt("2", "0"), pt("1", "1")};
    CHECK_FALSE(is_x_monotone(zig));
    CHECK_THROWS_AS(below_path(zig, pt("1", "-1")), NotAPathError);
}

TEST_CASE("plane faces of a drawn triangle with a center vertex") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    Drawing d = {pt("0", "0"), pt("4", "0"), pt("2", "3"), pt("2", "1")};
    auto faces = plane_faces(g, d);
    CHECK(faces.walks.size() == 4);  // 3 bounded triangles + outer
    CHECK(faces.walks[faces.outer].size() == 3);
}
