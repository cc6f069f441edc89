#include "untangle/instances.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "untangle/geometry.hpp"
#include "untangle/path_strategy.hpp"

namespace untangle {

Graph random_triangulation(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 2, 1}};
    for (int v = 3; v < n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        size_t f = pick(rng);
        auto [a, b, c] = faces[f];
        edges.push_back({a, v});
        edges.push_back({b, v});
        edges.push_back({c, v});
        faces[f] = {a, b, v};
        faces.push_back({b, c, v});
        faces.push_back({c, a, v});
    }
    return Graph(n, std::move(edges));
}

namespace {

void triangulate_polygon(int i, int j, Rng& rng, std::vector<std::pair<int, int>>& edges) {
    if (j - i < 2) return;
    std::uniform_int_distribution<int> pick(i + 1, j - 1);
    int k = pick(rng);
    if (k > i + 1) edges.push_back({i, k});
    if (k < j - 1) edges.push_back({k, j});
    triangulate_polygon(i, k, rng, edges);
    triangulate_polygon(k, j, rng, edges);
}

}  // namespace

Graph random_maximal_outerplanar(int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    triangulate_polygon(0, n - 1, rng, edges);
    return Graph(n, std::move(edges));
}

Drawing random_drawing(int n, Rng& rng) {
    long range = 4L * n + 8;
    std::uniform_int_distribution<long> num(-range, range);
    std::uniform_int_distribution<long> den(1, 4);
    Drawing d;
    std::set<std::pair<std::string, std::string>> used;
    while (static_cast<int>(d.size()) < n) {
        Pt p{Rat(num(rng), den(rng)), Rat(num(rng), den(rng))};
        p.x.canonicalize();
        p.y.canonicalize();
        if (used.insert({rat_to_string(p.x), rat_to_string(p.y)}).second) d.push_back(p);
    }
    return d;
}

namespace {

void laminar_chords(int a, int b, Rng& rng, std::vector<std::pair<int, int>>& chords) {
    if (b - a < 2) return;
    if (std::uniform_int_distribution<int>(0, 1)(rng)) chords.push_back({a, b});
    std::uniform_int_distribution<int> pick(a + 1, b - 1);
    int k = pick(rng);
    laminar_chords(a, k, rng, chords);
    laminar_chords(k, b, rng, chords);
}

}  // namespace

ChordInstance random_chord_instance(int l, Rng& rng) {
    ChordInstance inst;
    inst.path.resize(l);
    for (int i = 0; i < l; ++i) inst.path[i] = i;
    std::uniform_int_distribution<long> y(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    for (int i = 0; i < l; ++i) {
        Pt p{Rat(i), Rat(y(rng), den(rng))};
        p.y.canonicalize();
        inst.d.push_back(p);
    }
    laminar_chords(0, l - 1, rng, inst.chords);
    // Chords must span at least two path edges; the recursion may emit the
    // closing chord over a short path, so filter defensively.
    std::erase_if(inst.chords, [](const std::pair<int, int>& c) { return c.second - c.first < 2; });
    std::sort(inst.chords.begin(), inst.chords.end());
    inst.chords.erase(std::unique(inst.chords.begin(), inst.chords.end()), inst.chords.end());
    // A chord-graph independent set misses at least one endpoint of every
    // chord, so its complement is a cover.
    std::vector<int> is = greedy_independent_set(l, inst.chords);
    std::vector<bool> keep(l, false);
    for (int i : is) keep[i] = true;
    for (int i = 0; i < l; ++i)
        if (!keep[i]) inst.vstar.push_back(i);
    return inst;
}

StarFillInstance random_star_fill_instance(int max_n, Rng& rng) {
    std::uniform_int_distribution<int> bsize(4, std::min(10, max_n - 1));
    int b = bsize(rng);
    int interior_budget = std::uniform_int_distribution<int>(1, max_n - b)(rng);

    // Wheel: chordless boundary cycle plus a hub, then vertex-in-face
    // refinement of internal faces only.
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 3>> faces;
    int hub = b;
    for (int i = 0; i < b; ++i) {
        edges.push_back({i, (i + 1) % b});
        edges.push_back({i, hub});
        faces.push_back({i, (i + 1) % b, hub});
    }
    int n = b + 1;
    for (int k = 1; k < interior_budget; ++k) {
        std::uniform_int_distribution<size_t> pick(0, faces.size() - 1);
        size_t f = pick(rng);
        auto [x, y, z] = faces[f];
        int v = n++;
        edges.push_back({x, v});
        edges.push_back({y, v});
        edges.push_back({z, v});
        faces[f] = {x, y, v};
        faces.push_back({y, z, v});
        faces.push_back({z, x, v});
    }

    StarFillInstance inst;
    inst.g = Graph(n, std::move(edges));
    inst.task.faces = faces;
    for (int i = 0; i < b; ++i) inst.task.boundary.push_back(i);
    for (int v = b; v < n; ++v) inst.task.interior.push_back(v);

    // Star polygon: spread b direction vectors from a fixed counterclockwise
    // ring of rational directions (gaps stay below a half turn, so the origin
    // lies strictly in the kernel), scale each by a random radius, and read
    // the boundary off in circular order.
    static const std::vector<std::pair<long, long>> ring = {
        {5, 0},  {4, 2},  {3, 4},   {1, 5},   {-1, 5},  {-3, 4},  {-4, 2},
        {-5, 0}, {-4, -2}, {-3, -4}, {-1, -5}, {1, -5},  {3, -4},  {4, -2}};
    std::vector<Pt> dirs;
    for (int i = 0; i < b; ++i) {
        size_t idx = (static_cast<size_t>(i) * ring.size()) / b;
        dirs.push_back(Pt{Rat(ring[idx].first), Rat(ring[idx].second)});
    }
    inst.d.assign(n, Pt{Rat(0), Rat(0)});
    std::uniform_int_distribution<long> radius(2, 9);
    for (int i = 0; i < b; ++i) {
        long r = radius(rng);
        inst.d[i] = Pt{dirs[i].x * r, dirs[i].y * r};
    }
    return inst;
}

}  // namespace untangle
