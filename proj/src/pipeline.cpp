#include "untangle/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "untangle/embed.hpp"
#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"
#include "untangle/path_strategy.hpp"
#include "untangle/star_fill.hpp"
#include "untangle/untangle_core.hpp"

namespace untangle {

long guarantee_value(long num, long den_sq) {
    if (den_sq <= 0) throw Error("guarantee denominator must be positive");
    long k = 0;
    while (k * k * den_sq < num) ++k;
    return k;
}

namespace {

// `verified` marks drawings whose planarity has already been established
// (untangle_assemble checks the sheared drawing, and unshearing is an
// affine bijection, so re-checking would only repeat the same work on
// coordinates of twice the bit length).
UntangleResult finish(const Graph& g, const Drawing& din, Drawing dout, FixReport rep,
                      std::chrono::steady_clock::time_point start, bool verified = false) {
    UntangleResult res;
    res.d = std::move(dout);
    for (int v = 0; v < g.n; ++v)
        if (res.d[v] == din[v]) res.fixed.push_back(v);
    rep.n = g.n;
    rep.m = g.m();
    rep.fixed_count = static_cast<long>(res.fixed.size());
    rep.moved_count = g.n - rep.fixed_count;
    rep.max_coord_bits = drawing_bits(res.d);
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    res.report = rep;
    if (!verified && !is_plane(g, res.d)) throw Error("untangled drawing is not plane");
    if (rep.fixed_count < guarantee_value(rep.guarantee_num, rep.guarantee_den_sq))
        throw Error("fixed count fell below the certified guarantee");
    return res;
}

void validate_input(const Graph& g, const Drawing& d) {
    if (static_cast<int>(d.size()) != g.n) throw VertexMismatchError();
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (d[i] == d[j]) throw DuplicatePointsError();
}

// Shared tail of the pipeline once a triangulation and a path decomposition
// in sheared coordinates are available.
Drawing run_decomposition(const Graph& gtri, const Embedding& emb, PathDecomposition pd,
                          const Drawing& dshear, FixReport& rep) {
    const int l = static_cast<int>(pd.path.size());
    auto iset = greedy_independent_set(l, pd.chords);
    rep.l = l;
    rep.i_size = static_cast<long>(iset.size());
    auto mono = monotone_fix(dshear, pd.path, iset);
    if (mono.reversed) {
        pd.path = mono.path;
        for (auto& [a, b] : pd.chords) {
            a = l - 1 - a;
            b = l - 1 - b;
            std::swap(a, b);
        }
        for (auto& i : iset) i = l - 1 - i;
        std::sort(iset.begin(), iset.end());
    }
    std::set<int> iset_s(iset.begin(), iset.end());
    std::vector<int> vstar;
    for (int i = 0; i < l; ++i)
        if (!iset_s.count(i)) vstar.push_back(i);
    auto lowered = lower_chords(mono.d, pd.path, pd.chords, vstar);
    return untangle_assemble(gtri, emb, pd, lowered.d);
}

UntangleResult untangle_triangulated(const Graph& g, const Drawing& din,
                                     const TriangulationResult& tri, const std::string& strategy,
                                     FixReport rep,
                                     std::chrono::steady_clock::time_point start) {
    auto sheared = distinctify(din);
    PathDecomposition pd;
    if (strategy == "fan") {
        pd = fan_path(tri.g, tri.emb);
    } else if (strategy == "diameter") {
        pd = diameter_path(tri.g, tri.emb);
    } else if (strategy == "auto") {
        if (choose_strategy(tri.g) == Strategy::Fan) {
            pd = fan_path(tri.g, tri.emb);
        } else {
            try {
                pd = diameter_path(tri.g, tri.emb);
            } catch (const SideConditionViolated&) {
                pd = fan_path(tri.g, tri.emb);  // fan always satisfies the side condition
            }
        }
    } else {
        throw Error("unknown strategy '" + strategy + "'");
    }
    rep.strategy = pd.strategy;
    rep.guarantee_num = pd.guarantee_num;
    rep.guarantee_den_sq = pd.guarantee_den_sq;
    Drawing out = run_decomposition(tri.g, tri.emb, pd, sheared.d, rep);
    for (auto& p : out) p = unshear(p, sheared.eps);
    return finish(g, din, std::move(out), rep, start, /*verified=*/true);
}

}  // namespace

UntangleResult untangle(const Graph& g, const Drawing& d, const std::string& strategy) {
    auto start = std::chrono::steady_clock::now();
    validate_input(g, d);
    if (!is_planar(g)) throw NonPlanarError();
    FixReport rep;
    if (is_plane(g, d)) {
        rep.strategy = "plane";
        rep.guarantee_num = static_cast<long>(g.n) * g.n;
        rep.guarantee_den_sq = 1;
        return finish(g, d, d, rep, start, /*verified=*/true);
    }
    if (g.n <= 3) {
        // Keep two vertices; move the rest off every spanned line.
        Drawing out = d;
        rep.strategy = "small";
        rep.guarantee_num = std::min(2, g.n);
        rep.guarantee_num *= rep.guarantee_num;
        rep.guarantee_den_sq = 1;
        Rat x = d[0].x, y = d[0].y;
        for (const auto& p : d) {
            x = std::min(x, p.x);
            y = std::min(y, p.y);
        }
        for (int v = 2; v < g.n; ++v) {
            out[v] = {x - 1 - v, y - 1};
            while (!is_plane(g, out)) out[v].x -= 1;
        }
        return finish(g, d, std::move(out), rep, start, /*verified=*/true);
    }
    auto tri = triangulate(g);
    return untangle_triangulated(g, d, tri, strategy, rep, start);
}

UntangleResult untangle_outerplanar(const Graph& g, const Drawing& d) {
    auto start = std::chrono::steady_clock::now();
    validate_input(g, d);
    FixReport rep;
    // Outerplanarity gate even on the fast paths.
    {
        Graph test(g.n + 1, g.edges);
        for (int v = 0; v < g.n; ++v) test.add_edge(v, g.n);
        if (!is_planar(test)) throw NotOuterplanarError();
    }
    if (is_plane(g, d)) {
        rep.strategy = "plane";
        rep.guarantee_num = static_cast<long>(g.n) * g.n;
        rep.guarantee_den_sq = 1;
        return finish(g, d, d, rep, start, /*verified=*/true);
    }
    if (g.n <= 3) return untangle(g, d);
    auto tri = triangulate_outerplanar_fan(g, 0);
    auto res = untangle_triangulated(g, d, tri, "fan", rep, start);
    // Fan over a universal apex certifies ceil(sqrt(n/2)).
    res.report.guarantee_num = g.n;
    res.report.guarantee_den_sq = 2;
    res.report.strategy = "outerplanar-fan";
    if (res.report.fixed_count < guarantee_value(g.n, 2))
        throw Error("outerplanar guarantee violated");
    return res;
}

}  // namespace untangle
