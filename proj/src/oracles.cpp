#include "untangle/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"

namespace untangle {

namespace {

// Orders values along the requested direction so everything below can think
// in "increasing" terms.
inline bool before(long long a, long long b, Direction dir) {
    return dir == Direction::Increasing ? a < b : a > b;
}

}  // namespace

MonotoneResult longest_monotone(const std::vector<long long>& seq, Direction dir) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> len(n, 1), parent(n, -1);
    int best = 0, best_at = -1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (before(seq[j], seq[i], dir) && len[j] + 1 > len[i]) {
                len[i] = len[j] + 1;
                parent[i] = j;
            }
        if (len[i] > best) {
            best = len[i];
            best_at = i;
        }
    }
    MonotoneResult res;
    res.length = best;
    for (int i = best_at; i >= 0; i = parent[i]) res.witness.push_back(i);
    std::reverse(res.witness.begin(), res.witness.end());
    return res;
}

int longest_monotone_patience(const std::vector<long long>& seq, Direction dir) {
    // Pile tops; strictly monotone subsequences, so replace the first top
    // that is not strictly before the new value.
    std::vector<long long> tops;
    for (long long v : seq) {
        auto it = std::find_if(tops.begin(), tops.end(),
                               [&](long long t) { return !before(t, v, dir); });
        if (it == tops.end())
            tops.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tops.size());
}

SeparatedResult max_separated_pair(const std::vector<long long>& seq, Direction dir) {
    const int n = static_cast<int>(seq.size());
    SeparatedResult best;
    if (n == 0) return best;
    if (n == 1) {
        best.size = 1;
        best.first = {0};
        return best;
    }
    // Separated = disjoint position ranges and disjoint value ranges. Try
    // every position split p and value threshold t; the first subsequence
    // lives in positions <= p, the second in positions > p, with one of them
    // taking the values <= t and the other the rest.
    std::vector<long long> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    auto restricted = [&](int pos_lo, int pos_hi, long long val_lo, long long val_hi) {
        // Longest monotone subsequence among positions [pos_lo, pos_hi] with
        // values in [val_lo, val_hi], as indices into seq.
        std::vector<int> ids;
        for (int i = pos_lo; i <= pos_hi; ++i)
            if (seq[i] >= val_lo && seq[i] <= val_hi) ids.push_back(i);
        std::vector<long long> sub;
        for (int i : ids) sub.push_back(seq[i]);
        MonotoneResult mr = longest_monotone(sub, dir);
        std::vector<int> witness;
        for (int w : mr.witness) witness.push_back(ids[w]);
        return witness;
    };
    const long long lo = sorted.front(), hi = sorted.back();
    int best_p = -1, best_t = -1, best_flip = 0;
    for (int t = 0; t + 1 < n; ++t) {
        for (int flip = 0; flip < 2; ++flip) {
            // First subsequence takes values <= sorted[t] (or the complement
            // when flipped), second takes the rest. O(n^2) per pass.
            auto in_first = [&](long long v) { return flip ? v > sorted[t] : v <= sorted[t]; };
            std::vector<int> len(n, 0), pre(n, 0), suf(n + 1, 0);
            for (int i = 0; i < n; ++i) {
                if (in_first(seq[i])) {
                    len[i] = 1;
                    for (int j = 0; j < i; ++j)
                        if (len[j] && before(seq[j], seq[i], dir))
                            len[i] = std::max(len[i], len[j] + 1);
                }
                pre[i] = std::max(i ? pre[i - 1] : 0, len[i]);
            }
            std::fill(len.begin(), len.end(), 0);
            for (int i = n - 1; i >= 0; --i) {
                if (!in_first(seq[i])) {
                    len[i] = 1;
                    for (int j = i + 1; j < n; ++j)
                        if (len[j] && before(seq[i], seq[j], dir))
                            len[i] = std::max(len[i], len[j] + 1);
                }
                suf[i] = std::max(suf[i + 1], len[i]);
            }
            for (int p = 0; p + 1 < n; ++p)
                if (pre[p] > 0 && suf[p + 1] > 0 && pre[p] + suf[p + 1] > best.size) {
                    best.size = pre[p] + suf[p + 1];
                    best_p = p;
                    best_t = t;
                    best_flip = flip;
                }
        }
    }
    if (best_p >= 0) {
        best.first = best_flip ? restricted(0, best_p, sorted[best_t + 1], hi)
                               : restricted(0, best_p, lo, sorted[best_t]);
        best.second = best_flip ? restricted(best_p + 1, n - 1, lo, sorted[best_t])
                                : restricted(best_p + 1, n - 1, sorted[best_t + 1], hi);
    }
    if (best.size == 0) {
        // No nonempty separated pair (e.g. constant-direction degeneracies);
        // fall back to the best single subsequence.
        best.first = longest_monotone(seq, dir).witness;
        best.size = static_cast<int>(best.first.size());
    }
    return best;
}

int max_separated_pair_exhaustive(const std::vector<long long>& seq, Direction dir) {
    const int n = static_cast<int>(seq.size());
    if (n > 12) throw TooLargeError("exhaustive separated-pair check limited to n <= 12");
    if (n == 0) return 0;
    if (n == 1) return 1;
    auto monotone = [&](const std::vector<int>& ids) {
        for (size_t i = 1; i < ids.size(); ++i)
            if (!before(seq[ids[i - 1]], seq[ids[i]], dir)) return false;
        return true;
    };
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> ids;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) ids.push_back(i);
        // Try every positional cut: both parts monotone, and the value
        // ranges disjoint (separated in position and in value).
        for (size_t cut = 1; cut < ids.size(); ++cut) {
            std::vector<int> first(ids.begin(), ids.begin() + cut);
            std::vector<int> second(ids.begin() + cut, ids.end());
            if (!monotone(first) || !monotone(second)) continue;
            long long fmin = seq[first[0]], fmax = fmin;
            for (int i : first) {
                fmin = std::min(fmin, seq[i]);
                fmax = std::max(fmax, seq[i]);
            }
            long long smin = seq[second[0]], smax = smin;
            for (int i : second) {
                smin = std::min(smin, seq[i]);
                smax = std::max(smax, seq[i]);
            }
            if (fmax < smin || smax < fmin) {
                best = std::max(best, static_cast<int>(ids.size()));
                break;
            }
        }
    }
    return best;
}

bool erdos_szekeres_check(int n, int s, int r, long samples, std::uint64_t seed) {
    if (n < s * r + 1)
        throw OutOfRangeError("erdos_szekeres_check requires n >= s*r + 1");
    std::vector<long long> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto holds = [&]() {
        return longest_monotone(perm, Direction::Increasing).length >= s + 1 ||
               longest_monotone(perm, Direction::Decreasing).length >= r + 1;
    };
    if (samples == 0) {
        if (n > 8) throw TooLargeError("exhaustive permutation check limited to n <= 8");
        std::sort(perm.begin(), perm.end());
        do {
            if (!holds()) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    }
    std::mt19937_64 rng(seed);
    for (long i = 0; i < samples; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        if (!holds()) return false;
    }
    return true;
}

int fixed_count(const Drawing& before, const Drawing& after) {
    if (before.size() != after.size())
        throw VertexMismatchError("drawings have " + std::to_string(before.size()) + " and " +
                                  std::to_string(after.size()) + " vertices");
    int fixed = 0;
    for (size_t v = 0; v < before.size(); ++v)
        if (before[v] == after[v]) ++fixed;
    return fixed;
}

namespace {

// Places moved vertices on grid points one at a time, pruning as soon as a
// partial placement breaks planarity.
struct GridSearch {
    const Graph& g;
    const Drawing& base;
    const std::vector<Pt>& grid_pts;
    std::vector<int> moved;  // vertices to place, in order
    Drawing current;
    std::vector<bool> placed;

    bool vertex_ok(int v) const {
        for (int u = 0; u < g.n; ++u)
            if (u != v && placed[u] && current[u] == current[v]) return false;
        for (const auto& [a, b] : g.edges) {
            if (!placed[a] || !placed[b]) continue;
            if (a != v && b != v && on_open_segment(current[a], current[b], current[v]))
                return false;
            if ((a == v || b == v) &&
                [&] {
                    for (int u = 0; u < g.n; ++u)
                        if (placed[u] && u != a && u != b &&
                            on_open_segment(current[a], current[b], current[u]))
                            return true;
                    return false;
                }())
                return false;
        }
        return true;
    }

    bool edges_ok(int v) const {
        for (const auto& [a, b] : g.edges) {
            if ((a != v && b != v) || !placed[a] || !placed[b]) continue;
            for (const auto& [c, e] : g.edges) {
                if (!placed[c] || !placed[e]) continue;
                if (c == a || c == b || e == a || e == b) continue;
                if (segments_cross(current[a], current[b], current[c], current[e])) return false;
            }
        }
        return true;
    }

    bool place(size_t i) {
        if (i == moved.size()) return true;
        int v = moved[i];
        for (const Pt& p : grid_pts) {
            current[v] = p;
            placed[v] = true;
            if (vertex_ok(v) && edges_ok(v) && place(i + 1)) return true;
            placed[v] = false;
        }
        return false;
    }
};

}  // namespace

FixSearchResult small_fix_search(const Graph& g, const Drawing& d, int max_n, int grid) {
    if (g.n > max_n)
        throw TooLargeError("small_fix_search limited to " + std::to_string(max_n) + " vertices");
    FixSearchResult res;
    res.heuristic = true;
    if (is_plane(g, d)) {
        res.best_fixed = g.n;
        res.drawing = d;
        res.fixed.resize(g.n);
        std::iota(res.fixed.begin(), res.fixed.end(), 0);
        return res;
    }

    // Grid over the bounding box (degenerate boxes widened by one unit).
    Rat minx = d[0].x, maxx = d[0].x, miny = d[0].y, maxy = d[0].y;
    for (const Pt& p : d) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    if (minx == maxx) maxx = minx + 1;
    if (miny == maxy) maxy = miny + 1;
    std::vector<Pt> grid_pts;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j)
            grid_pts.push_back(Pt{minx + (maxx - minx) * i / (grid - 1),
                                  miny + (maxy - miny) * j / (grid - 1)});

    // Fixed subsets largest-first; the first planar completion is the best
    // grid-certified lower bound.
    for (int k = g.n - 1; k >= 0; --k) {
        std::vector<int> pick(g.n, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        std::sort(pick.begin(), pick.end(), std::greater<int>());
        do {
            GridSearch gs{g, d, grid_pts, {}, d, std::vector<bool>(g.n, false)};
            std::vector<int> fixed;
            for (int v = 0; v < g.n; ++v) {
                if (pick[v]) {
                    gs.placed[v] = true;
                    fixed.push_back(v);
                } else {
                    gs.moved.push_back(v);
                }
            }
            bool base_ok = true;
            for (int v : fixed)
                if (!gs.vertex_ok(v) || !gs.edges_ok(v)) {
                    base_ok = false;
                    break;
                }
            if (base_ok && gs.place(0)) {
                res.best_fixed = k;
                res.drawing = gs.current;
                res.fixed = fixed;
                return res;
            }
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    res.best_fixed = 0;
    res.drawing = d;
    return res;
}

}  // namespace untangle
