#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"
#include "untangle/instances.hpp"
#include "untangle/oracles.hpp"
#include "untangle/pipeline.hpp"

using namespace untangle;

namespace {
Pt pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }
}  // namespace

TEST_CASE("guarantee_value is the exact integer ceiling of the square root") {
    CHECK(guarantee_value(0, 1) == 0);
    CHECK(guarantee_value(1, 1) == 1);
    CHECK(guarantee_value(9, 1) == 3);
    CHECK(guarantee_value(10, 1) == 4);
    CHECK(guarantee_value(7, 2) == 2);   // ceil(sqrt(7/2))
    CHECK(guarantee_value(8, 2) == 2);
    CHECK(guarantee_value(9, 2) == 3);
    CHECK_THROWS_AS(guarantee_value(4, 0), Error);
}

TEST_CASE("untangle on a crossed K4") {
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Drawing d = {pt("0", "0"), pt("4", "0"), pt("2", "3"), pt("3", "4")};
    REQUIRE_FALSE(is_plane(g, d));
    auto res = ::untangle::untangle(g, d);
    CHECK(is_plane(g, res.d));
    CHECK(res.report.fixed_count >= 1);
    CHECK(res.report.fixed_count + res.report.moved_count == 4);
    for (int v : res.fixed) CHECK(res.d[v] == d[v]);
    CHECK(res.report.fixed_count == fixed_count(d, res.d));
    CHECK(res.report.fixed_count >= guarantee_value(res.report.guarantee_num,
                                                    res.report.guarantee_den_sq));
}

TEST_CASE("plane inputs are returned unchanged with everything fixed") {
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Drawing d = {pt("0", "0"), pt("4", "0"), pt("2", "3"), pt("2", "1")};
    auto res = ::untangle::untangle(g, d);
    CHECK(res.d == d);
    CHECK(res.report.fixed_count == 4);
    CHECK(res.report.strategy == "plane");
}

TEST_CASE("explicit strategies both produce plane drawings") {
    Rng rng(53);
    Graph g = random_triangulation(40, rng);
    Drawing d = random_drawing(40, rng);
    for (const char* strat : {"auto", "fan"}) {
        auto res = ::untangle::untangle(g, d, strat);
        CHECK(is_plane(g, res.d));
        CHECK(res.report.fixed_count >=
              guarantee_value(res.report.guarantee_num, res.report.guarantee_den_sq));
    }
    try {
        auto res = ::untangle::untangle(g, d, "diameter");
        CHECK(is_plane(g, res.d));
    } catch (const SideConditionViolated&) {
        // legitimate on instances whose diameter path fails the side condition
    }
    CHECK_THROWS_AS(::untangle::untangle(g, d, "nonsense"), Error);
}

TEST_CASE("input validation") {
    Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    Drawing short_d = {pt("0", "0"), pt("1", "0")};
    CHECK_THROWS_AS(::untangle::untangle(g, short_d), VertexMismatchError);
    Drawing dup = {pt("0", "0"), pt("0", "0"), pt("1", "0"), pt("2", "0")};
    CHECK_THROWS_AS(::untangle::untangle(g, dup), DuplicatePointsError);
    std::vector<std::pair<int, int>> k5e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5e.push_back({i, j});
    Rng rng(1);
    CHECK_THROWS_AS(::untangle::untangle(Graph(5, k5e), random_drawing(5, rng)), NonPlanarError);
}

TEST_CASE("small graphs are handled directly") {
    // Three collinear points on a triangle: not plane, n <= 3 path.
    Graph g(3, {{0, 1}, {1, 2}, {2, 0}});
    Drawing d = {pt("0", "0"), pt("1", "0"), pt("2", "0")};
    auto res = ::untangle::untangle(g, d);
    CHECK(is_plane(g, res.d));
    CHECK(res.report.fixed_count >= 2);
}

TEST_CASE("untangle_outerplanar certifies ceil(sqrt(n/2))") {
    Rng rng(59);
    for (int t = 0; t < 10; ++t) {
        const int n = 8 + static_cast<int>(rng() % 40);
        Graph g = random_maximal_outerplanar(n, rng);
        Drawing d = random_drawing(n, rng);
        auto res = untangle_outerplanar(g, d);
        CHECK(is_plane(g, res.d));
        CHECK(res.report.fixed_count >= guarantee_value(n, 2));
    }
    // Non-outerplanar input is rejected.
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK_THROWS_AS(untangle_outerplanar(k4, random_drawing(4, rng)), NotOuterplanarError);
}

TEST_CASE("reports are reproducible apart from the timer") {
    Rng rng(61);
    Graph g = random_triangulation(25, rng);
    Drawing d = random_drawing(25, rng);
    auto r1 = ::untangle::untangle(g, d);
    auto r2 = ::untangle::untangle(g, d);
    CHECK(r1.d == r2.d);
    CHECK(r1.fixed == r2.fixed);
    CHECK(r1.report.max_coord_bits == r2.report.max_coord_bits);
}
