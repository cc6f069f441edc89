#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "untangle/embed.hpp"
#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"
#include "untangle/instances.hpp"
#include "untangle/path_strategy.hpp"
#include "untangle/star_fill.hpp"
#include "untangle/untangle_core.hpp"

using namespace untangle;

namespace {
Pt pt(const char* x, const char* y) { return {parse_rat(x), parse_rat(y)}; }
}  // namespace

TEST_CASE("place_apex sees every path vertex") {
    std::vector<Pt> path = {pt("0", "0"), pt("1", "4"), pt("2", "-3"), pt("4", "1")};
    Pt u = place_apex(path);
    CHECK(u.x == (path.front().x + path.back().x) / 2);
    // The apex is above every line through two path vertices, so it sees the
    // path vertices in x-order: the orientation to consecutive path vertices
    // never flips.
    for (size_t i = 0; i + 1 < path.size(); ++i) CHECK(orient(u, path[i], path[i + 1]) > 0);
    for (const auto& p : path) CHECK(u.y > p.y);
}

TEST_CASE("decompose_regions partitions the off-path vertices") {
    Rng rng(41);
    for (int t = 0; t < 15; ++t) {
        Graph g = random_triangulation(20 + static_cast<int>(rng() % 20), rng);
        auto emb = planar_embed(g);
        auto pd = fan_path(g, emb);
        auto tasks = decompose_regions(g, emb, pd.path, pd.u, pd.chords);
        std::set<int> off;
        std::set<int> on(pd.path.begin(), pd.path.end());
        on.insert(pd.u);
        for (int v = 0; v < g.n; ++v)
            if (!on.count(v)) off.insert(v);
        std::set<int> seen;
        for (const auto& task : tasks) {
            CHECK(task.boundary.size() >= 3);
            for (int v : task.interior) {
                CHECK(off.count(v) == 1);
                CHECK(seen.insert(v).second);  // no vertex in two regions
            }
            for (const auto& f : task.faces)
                for (int v : f) CHECK((on.count(v) || off.count(v)));
        }
        CHECK(seen == off);
    }
}

TEST_CASE("fill_star_polygon places interiors without touching the boundary") {
    Rng rng(43);
    for (int t = 0; t < 60; ++t) {
        auto inst = random_star_fill_instance(30, rng);
        Drawing before = inst.d;
        Drawing d = inst.d;
        fill_star_polygon(inst.g, d, inst.task);
        for (int v : inst.task.boundary) CHECK(d[v] == before[v]);
        CHECK(is_plane(inst.g, d));
    }
}

TEST_CASE("fill fails cleanly when the region is not star-shaped") {
    // Quadrilateral boundary collapsed to a degenerate (self-touching) shape
    // leaves an empty kernel for the interior vertex.
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    RegionTask task;
    task.boundary = {0, 1, 2, 3};
    task.interior = {4};
    task.faces = {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}};
    Drawing d(5);
    d[0] = pt("0", "0");
    d[1] = pt("4", "0");
    d[2] = pt("2", "2");
    d[3] = pt("2", "-1");  // boundary is self-crossing: no kernel
    d[4] = pt("0", "0");
    CHECK_THROWS_AS(fill_star_polygon(g, d, task), FillFailureError);
}

TEST_CASE("untangle_assemble returns a plane completion") {
    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        const int n = 15 + static_cast<int>(rng() % 25);
        Graph g = random_triangulation(n, rng);
        Drawing din = random_drawing(n, rng);
        auto emb = planar_embed(g);
        auto pd = fan_path(g, emb);
        auto sheared = distinctify(din);
        const int l = static_cast<int>(pd.path.size());
        auto iset = greedy_independent_set(l, pd.chords);
        auto mono = monotone_fix(sheared.d, pd.path, iset);
        if (mono.reversed) {
            pd.path = mono.path;
            for (auto& [a, b] : pd.chords) {
                a = l - 1 - a;
                b = l - 1 - b;
                std::swap(a, b);
            }
            std::sort(iset.begin(), iset.end(), [](int, int) { return false; });
        }
        std::set<int> keep;
        if (!mono.reversed)
            keep.insert(iset.begin(), iset.end());
        else
            for (int i : iset) keep.insert(l - 1 - i);
        std::vector<int> vstar;
        for (int i = 0; i < l; ++i)
            if (!keep.count(i)) vstar.push_back(i);
        auto low = lower_chords(mono.d, pd.path, pd.chords, vstar);
        Drawing out = untangle_assemble(g, emb, pd, low.d);
        CHECK(is_plane(g, out));
        // Path vertices keep their lowered positions.
        for (int v : pd.path) CHECK(out[v] == low.d[v]);
    }
}
