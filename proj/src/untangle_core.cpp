#include "untangle/untangle_core.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "untangle/errors.hpp"

namespace untangle {

ShearResult distinctify(const Drawing& d) {
    const int n = static_cast<int>(d.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d[i] == d[j]) throw DuplicatePointsError();
    bool distinct_x = true;
    for (int i = 0; i < n && distinct_x; ++i)
        for (int j = i + 1; j < n && distinct_x; ++j)
            if (d[i].x == d[j].x) distinct_x = false;
    ShearResult res;
    res.eps = 0;
    if (!distinct_x) {
        Rat best = 0;
        bool have = false;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Rat dx = d[i].x - d[j].x, dy = d[i].y - d[j].y;
                if (dx != 0 && dy != 0) {
                    Rat r = abs(dx / dy);
                    if (!have || r < best) {
                        best = r;
                        have = true;
                    }
                }
            }
        res.eps = have ? best / 2 : Rat(1);
    }
    res.d = d;
    for (auto& p : res.d) p.x += res.eps * p.y;
    return res;
}

Pt unshear(const Pt& p, const Rat& eps) { return {p.x - eps * p.y, p.y}; }

namespace {
// Longest strictly increasing subsequence (O(n^2) DP, deterministic:
// leftmost-ending optimum). Returns positions into vals.
std::vector<int> lis_positions(const std::vector<Rat>& vals) {
    const int n = static_cast<int>(vals.size());
    std::vector<int> len(n, 1), prev(n, -1);
    int best = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (vals[j] < vals[i] && len[j] + 1 > len[i]) {
                len[i] = len[j] + 1;
                prev[i] = j;
            }
        if (best == -1 || len[i] > len[best]) best = i;
    }
    std::vector<int> out;
    for (int i = best; i != -1; i = prev[i]) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
}

mpz_class isqrt_ceil(long v) {
    mpz_class r, x(v);
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    if (r * r < v) r += 1;
    return r;
}
}  // namespace

MonotoneFixResult monotone_fix(const Drawing& d, const std::vector<int>& path,
                               const std::vector<int>& independent_set) {
    const int l = static_cast<int>(path.size());
    for (size_t t = 1; t < independent_set.size(); ++t)
        if (independent_set[t] <= independent_set[t - 1])
            throw Error("independent set indices must increase");
    std::vector<Rat> vals;
    for (int idx : independent_set) {
        if (idx < 0 || idx >= l) throw Error("independent set index out of range");
        vals.push_back(d[path[idx]].x);
    }
    auto inc = lis_positions(vals);
    std::vector<Rat> neg;
    for (const Rat& v : vals) neg.push_back(-v);
    auto dec = lis_positions(neg);

    MonotoneFixResult res;
    res.reversed = dec.size() > inc.size();
    res.path = path;
    std::vector<int> iset = independent_set;
    const auto& chosen_pos = res.reversed ? dec : inc;
    std::vector<int> fixed;  // indices into the (possibly reversed) path
    for (int p : chosen_pos) fixed.push_back(iset[p]);
    if (res.reversed) {
        std::reverse(res.path.begin(), res.path.end());
        for (int& f : fixed) f = l - 1 - f;
        std::reverse(fixed.begin(), fixed.end());
    }
    res.fixed_set = fixed;
    if (isqrt_ceil(static_cast<long>(independent_set.size())) >
        static_cast<long>(fixed.size()))
        throw Error("monotone subsequence below ceil(sqrt(|I|))");

    // Re-place the non-kept path vertices on y = 0 with x strictly increasing.
    res.d = d;
    std::vector<char> keep(l, 0);
    for (int f : fixed) keep[f] = 1;
    int i = 0;
    while (i < l) {
        if (keep[i]) {
            ++i;
            continue;
        }
        int run_start = i;
        while (i < l && !keep[i]) ++i;
        // run [run_start, i) of moved vertices, bounded by kept neighbors.
        bool has_left = run_start > 0, has_right = i < l;
        if (has_left && has_right) {
            Rat lo = res.d[res.path[run_start - 1]].x;
            const Rat hi = res.d[res.path[i]].x;
            for (int t = run_start; t < i; ++t) {
                Rat x = (lo + hi) / 2;
                res.d[res.path[t]] = {x, 0};
                lo = x;
            }
        } else if (has_right) {
            Rat hi = res.d[res.path[i]].x;
            for (int t = run_start; t < i; ++t)
                res.d[res.path[t]] = {hi - (i - t), 0};
        } else if (has_left) {
            Rat lo = res.d[res.path[run_start - 1]].x;
            for (int t = run_start; t < i; ++t)
                res.d[res.path[t]] = {lo + (t - run_start + 1), 0};
        } else {
            for (int t = run_start; t < i; ++t) res.d[res.path[t]] = {Rat(t), 0};
        }
    }
    std::vector<Pt> pts;
    for (int v : res.path) pts.push_back(res.d[v]);
    if (!is_x_monotone(pts)) throw Error("monotone_fix produced a non-monotone path");
    return res;
}

namespace {
struct SkeletonChecker {
    const std::vector<Pt>& p;  // path vertex positions by path index
    int l;

    bool plane_and_valid(const std::vector<std::pair<int, int>>& chords) const {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i + 1 < l; ++i) es.push_back({i, i + 1});
        for (auto c : chords) es.push_back(c);
        Graph sk(l, es);
        if (!is_plane(sk, p)) return false;
        // Every processed chord strictly below the path.
        for (auto [a, b] : chords)
            for (int k = a + 1; k < b; ++k)
                if (orient(p[a], p[b], p[k]) <= 0) return false;
        // Every bounded face star-shaped.
        if (!chords.empty()) {
            auto faces = plane_faces(sk, p);
            for (int f = 0; f < static_cast<int>(faces.walks.size()); ++f) {
                if (f == faces.outer) continue;
                const auto& w = faces.walks[f];
                std::set<int> uniq(w.begin(), w.end());
                if (uniq.size() != w.size()) return false;  // bounded face must be a cycle
                std::vector<Pt> poly;
                for (int v : w) poly.push_back(p[v]);
                if (!polygon_kernel(poly)) return false;
            }
        }
        return true;
    }

    // Check only what a single move can break.  Path x-coordinates are
    // strictly increasing, so vertices never coincide and only the geometry
    // involving the moved vertex v differs from the last accepted state;
    // everything else was verified then.  The caller still runs the full
    // plane_and_valid once at the end as the binding postcondition.
    bool valid_move(const std::vector<std::pair<int, int>>& chords, int v) const {
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i + 1 < l; ++i) es.push_back({i, i + 1});
        for (auto c : chords) es.push_back(c);
        std::vector<std::pair<int, int>> moved;
        for (auto e : es)
            if (e.first == v || e.second == v) moved.push_back(e);
        // x-coordinates increase strictly with path index, so an edge's
        // x-range is its index interval: edges whose index intervals do not
        // properly overlap can meet at a shared endpoint at most.
        for (auto e : moved)
            for (auto f : es) {
                if (f == e) continue;
                if (std::max(e.first, f.first) >= std::min(e.second, f.second)) continue;
                if (segments_cross(p[e.first], p[e.second], p[f.first], p[f.second]))
                    return false;
            }
        for (auto e : moved)
            for (int k = e.first + 1; k < e.second; ++k)
                if (on_open_segment(p[e.first], p[e.second], p[k]))
                    return false;
        for (auto f : es)
            if (f.first < v && v < f.second &&
                on_open_segment(p[f.first], p[f.second], p[v]))
                return false;
        // Below-path condition: chords incident to v changed shape; chords
        // spanning v kept their shape but their test point v moved.
        for (auto [a, b] : chords) {
            if (a == v || b == v) {
                for (int k = a + 1; k < b; ++k)
                    if (orient(p[a], p[b], p[k]) <= 0) return false;
            } else if (a < v && v < b) {
                if (orient(p[a], p[b], p[v]) <= 0) return false;
            }
        }
        // Star-shapedness can only change for bounded faces touching v.
        Graph sk(l, es);
        auto faces = plane_faces(sk, p);
        for (int f = 0; f < static_cast<int>(faces.walks.size()); ++f) {
            if (f == faces.outer) continue;
            const auto& w = faces.walks[f];
            if (std::find(w.begin(), w.end(), v) == w.end()) continue;
            std::set<int> uniq(w.begin(), w.end());
            if (uniq.size() != w.size()) return false;
            std::vector<Pt> poly;
            for (int u : w) poly.push_back(p[u]);
            if (!polygon_kernel(poly)) return false;
        }
        return true;
    }
};
}  // namespace

LowerChordsResult lower_chords(const Drawing& d, const std::vector<int>& path,
                               const std::vector<std::pair<int, int>>& chords,
                               const std::vector<int>& vstar) {
    const int l = static_cast<int>(path.size());
    std::vector<Pt> p;
    for (int v : path) p.push_back(d[v]);
    if (!is_x_monotone(p)) throw NotAPathError("lower_chords needs an x-monotone path");
    std::set<int> cover(vstar.begin(), vstar.end());
    for (auto [a, b] : chords) {
        if (a < 0 || b >= l || b <= a + 1) throw Error("invalid chord index pair");
        if (!cover.count(a) && !cover.count(b)) throw CoverViolationError();
    }

    // Shift so every path vertex sits strictly below y = 0.
    Rat maxy = p[0].y;
    for (const auto& q : p) maxy = std::max(maxy, q.y);
    const Rat shift = maxy + 1;
    for (auto& q : p) q.y -= shift;

    // R_x = longest / shortest horizontal distance between path vertices.
    Rat min_gap = p[1].x - p[0].x;
    for (int i = 1; i + 1 < l; ++i) min_gap = std::min(min_gap, Rat(p[i + 1].x - p[i].x));
    const Rat rx = std::max(Rat(1), Rat((p[l - 1].x - p[0].x) / min_gap));

    // Innermost chords first: sort by span length, ties by left endpoint.
    // The closing chord (0, l-1) has maximal span and sorts last.
    std::vector<std::pair<int, int>> order = chords;
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        int sa = a.second - a.first, sb = b.second - b.first;
        return sa != sb ? sa < sb : a.first < b.first;
    });

    SkeletonChecker check{p, l};
    LowerChordsResult res;
    std::vector<std::pair<int, int>> done;
    for (size_t ci = 0; ci < order.size(); ++ci) {
        auto [a, b] = order[ci];
        int v;
        if (cover.count(a) && cover.count(b)) {
            // Lower the endpoint interior to fewer unprocessed chord spans;
            // ties go to the smaller index.
            auto spans = [&](int e) {
                int c = 0;
                for (size_t cj = ci + 1; cj < order.size(); ++cj)
                    if (order[cj].first < e && e < order[cj].second) ++c;
                return c;
            };
            v = spans(a) <= spans(b) ? a : b;
        } else {
            v = cover.count(a) ? a : b;
        }
        // Only geometry inside the chord's span has to be cleared, so the
        // floor is taken over [a, b] rather than the whole path, and the
        // target is rounded down to a negative power of two to keep later
        // arithmetic on these coordinates cheap.  Both choices only push the
        // endpoint lower than strictly required; the doubling loop and the
        // final full check still decide acceptance.
        Rat yfloor = p[a].y;
        for (int k = a; k <= b; ++k) yfloor = std::min(yfloor, p[k].y);
        done.push_back({a, b});
        const Rat raw = 2 * rx * yfloor;
        const size_t nb = mpz_sizeinbase(mpz_class(abs(raw.get_num())).get_mpz_t(), 2);
        const size_t db = mpz_sizeinbase(raw.get_den().get_mpz_t(), 2);
        Rat target = -Rat(mpz_class(1) << (nb >= db ? nb - db + 1 : 1));
        bool ok = false;
        for (int iter = 0; iter < 200; ++iter) {
            p[v].y = target;
            if (check.valid_move(done, v)) {
                ok = true;
                break;
            }
            target *= 2;  // defensive doubling
        }
        if (!ok) throw Error("chord lowering failed to stabilize");
        res.moves.push_back({v, p[v].y + shift});
    }
    if (!check.plane_and_valid(done)) throw Error("chord lowering postcondition failed");

    res.d = d;
    for (int i = 0; i < l; ++i) res.d[path[i]] = {p[i].x, p[i].y + shift};
    return res;
}

PathologicalInstance pathological_instance(int k) {
    if (k < 1) throw TooSmallError("pathological instance needs k >= 1");
    PathologicalInstance inst;
    const int n = 2 * k + 2;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    for (int i = 0; i < k; ++i) {
        inst.chords.push_back({i, n - 1 - i});
        es.push_back({i, n - 1 - i});
    }
    inst.g = Graph(n, es);
    for (int i = 0; i < n; ++i) {
        inst.d.push_back({Rat(i), 0});
        inst.path.push_back(i);
    }
    for (int i = k + 2; i < n; ++i) inst.vstar.push_back(i);
    return inst;
}

}  // namespace untangle
