#include "untangle/path_strategy.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "untangle/errors.hpp"

namespace untangle {

namespace {

void check_path(const Graph& g, const std::vector<int>& path) {
    if (path.size() < 2) throw NotAPathError("path needs at least 2 vertices");
    std::set<int> seen(path.begin(), path.end());
    if (seen.size() != path.size()) throw NotAPathError("path repeats a vertex");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) throw NotAPathError("missing path edge");
}

std::vector<std::pair<int, int>> path_chords(const Graph& g, const std::vector<int>& path) {
    std::vector<std::pair<int, int>> out;
    const int l = static_cast<int>(path.size());
    for (int i = 0; i < l; ++i)
        for (int j = i + 2; j < l; ++j)
            if (g.has_edge(path[i], path[j])) out.push_back({i, j});
    return out;
}

// Dual components of the embedding faces, where crossing a wall edge is
// forbidden. Returns the component id per face.
std::vector<int> face_components(const Graph& g, const std::vector<std::vector<int>>& faces,
                                 const std::set<std::pair<int, int>>& walls) {
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& w = faces[f];
        for (size_t i = 0; i < w.size(); ++i) {
            int a = w[i], b = w[(i + 1) % w.size()];
            by_edge[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    std::vector<int> comp(faces.size(), -1);
    int c = 0;
    for (int f0 = 0; f0 < static_cast<int>(faces.size()); ++f0) {
        if (comp[f0] != -1) continue;
        std::queue<int> q;
        q.push(f0);
        comp[f0] = c;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            const auto& w = faces[f];
            for (size_t i = 0; i < w.size(); ++i) {
                int a = w[i], b = w[(i + 1) % w.size()];
                std::pair<int, int> e{std::min(a, b), std::max(a, b)};
                if (walls.count(e)) continue;
                for (int f2 : by_edge[e])
                    if (comp[f2] == -1) {
                        comp[f2] = c;
                        q.push(f2);
                    }
            }
        }
        ++c;
    }
    return comp;
}

std::set<std::pair<int, int>> path_edge_set(const std::vector<int>& path) {
    std::set<std::pair<int, int>> s;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        s.insert({std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])});
    return s;
}

}  // namespace

ChordSides chords_of_path(const Graph& g, const Embedding& emb, const std::vector<int>& path) {
    check_path(g, path);
    const int l = static_cast<int>(path.size());
    std::vector<int> idx_of(g.n, -1);
    for (int i = 0; i < l; ++i) idx_of[path[i]] = i;
    ChordSides out;

    // side at an interior path vertex: +1 left, -1 right, relative to walking
    // w_1 -> w_l with counterclockwise rotations.
    auto side_at = [&](int i, int other) {
        int v = path[i];
        const auto& rot = emb.rot[v];
        int sz = static_cast<int>(rot.size());
        int p_prev = -1, p_next = -1, p_oth = -1;
        for (int p = 0; p < sz; ++p) {
            if (rot[p] == path[i - 1]) p_prev = p;
            if (rot[p] == path[i + 1]) p_next = p;
            if (rot[p] == other) p_oth = p;
        }
        // Walk counterclockwise from the forward path edge; edges met before
        // the backward path edge are on the left.
        for (int step = 1; step < sz; ++step) {
            int p = (p_next + step) % sz;
            if (p == p_oth) return +1;
            if (p == p_prev) break;
        }
        return -1;
    };

    for (auto [i, j] : path_chords(g, path)) {
        int si = 0, sj = 0;
        if (i > 0 && i < l - 1) si = side_at(i, path[j]);
        if (j > 0 && j < l - 1) sj = side_at(j, path[i]);
        int side;
        if (si != 0 && sj != 0) {
            if (si != sj) {
                out.inconsistent.push_back({i, j});
                continue;
            }
            side = si;
        } else if (si != 0 || sj != 0) {
            side = si != 0 ? si : sj;
        } else {
            // Chord between the two path endpoints. Without a designated
            // outer face the side of the enclosed region is a convention;
            // report it on the right, matching counterclockwise rotations
            // with the free side of the path above.
            side = -1;
        }
        (side > 0 ? out.left : out.right).push_back({i, j});
    }
    return out;
}

std::vector<int> greedy_independent_set(int l, const std::vector<std::pair<int, int>>& chords) {
    std::vector<std::set<int>> adj(l);
    for (auto [i, j] : chords) {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    std::vector<char> alive(l, 1);
    std::vector<int> chosen;
    for (;;) {
        int best = -1;
        for (int v = 0; v < l; ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (int w : adj[v])
                if (alive[w]) ++deg;
            if (best == -1) {
                best = v;
            } else {
                int bdeg = 0;
                for (int w : adj[best])
                    if (alive[w]) ++bdeg;
                if (deg < bdeg || (deg == bdeg && v < best)) best = v;
            }
        }
        if (best == -1) break;
        chosen.push_back(best);
        alive[best] = 0;
        for (int w : adj[best]) alive[w] = 0;
    }
    std::sort(chosen.begin(), chosen.end());
    if (static_cast<int>(chosen.size()) * 2 < l + 1)
        throw Error("greedy independent set below (l+1)/2 (chords not laminar?)");
    return chosen;
}

bool side_condition_holds(const Graph& g, const Embedding& emb, const std::vector<int>& path,
                          int u) {
    check_path(g, path);
    const int l = static_cast<int>(path.size());
    int s = path[0], t = path[l - 1];
    if (!g.has_edge(u, s) || !g.has_edge(u, t) || !g.has_edge(s, t)) return false;
    auto faces = embedding_faces(g, emb);
    int outer = -1;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (faces[f].size() == 3 && std::set<int>(faces[f].begin(), faces[f].end()) ==
                                        std::set<int>{u, s, t})
            outer = f;
    if (outer == -1) return false;  // (u, s, t) is not a face
    std::set<std::pair<int, int>> walls = path_edge_set(path);
    walls.insert({std::min(u, s), std::max(u, s)});
    walls.insert({std::min(u, t), std::max(u, t)});
    auto comp = face_components(g, faces, walls);
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& w = faces[f];
        for (size_t i = 0; i < w.size(); ++i) {
            int a = w[i], b = w[(i + 1) % w.size()];
            by_edge[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    for (auto [i, j] : path_chords(g, path)) {
        std::pair<int, int> e{std::min(path[i], path[j]), std::max(path[i], path[j])};
        for (int f : by_edge[e])
            if (f != outer && comp[f] != comp[outer]) return false;
    }
    return true;
}

PathDecomposition fan_path(const Graph& g, const Embedding& emb) {
    if (g.m() != 3 * g.n - 6) throw NotTriangulatedError();
    auto deg = g.degrees();
    int u = 0;
    for (int v = 1; v < g.n; ++v)
        if (deg[v] > deg[u]) u = v;
    std::vector<int> path = emb.rot[u];
    // Deterministic cut: start the fan at u's smallest-id neighbor.
    auto it = std::min_element(path.begin(), path.end());
    std::rotate(path.begin(), it, path.end());
    PathDecomposition pd;
    pd.path = path;
    pd.u = u;
    pd.chords = path_chords(g, path);
    pd.guarantee_num = deg[u] + 1;
    pd.guarantee_den_sq = 2;
    pd.strategy = "fan";
    check_path(g, path);
    if (!side_condition_holds(g, emb, path, u)) throw SideConditionViolated();
    return pd;
}

PathDecomposition diameter_path(const Graph& g, const Embedding& emb) {
    if (g.m() != 3 * g.n - 6) throw NotTriangulatedError();
    auto diam = bfs_diameter(g);
    const int d = diam.dist;
    // BFS tree from a diameter endpoint.
    auto adj = g.adjacency();
    std::vector<int> par(g.n, -1), depth(g.n, -1);
    {
        std::queue<int> q;
        q.push(diam.s);
        depth[diam.s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (depth[w] == -1) {
                    depth[w] = depth[v] + 1;
                    par[w] = v;
                    q.push(w);
                }
        }
    }
    auto tree_path_up = [&](int v) {
        std::vector<int> p{v};
        while (par[p.back()] != -1) p.push_back(par[p.back()]);
        return p;
    };
    auto faces = embedding_faces(g, emb);
    PathDecomposition best;
    bool found = false;
    for (const auto& f : faces) {
        if (f.size() != 3) continue;
        for (int r = 0; r < 3; ++r) {
            int u = f[r], s = f[(r + 1) % 3], t = f[(r + 2) % 3];
            auto ps = tree_path_up(s), pt = tree_path_up(t);
            std::set<int> in_t(pt.begin(), pt.end());
            // Splice at the first vertex of pi_s that also lies on pi_t.
            std::vector<int> path;
            int m = -1;
            for (int v : ps) {
                path.push_back(v);
                if (in_t.count(v)) {
                    m = v;
                    break;
                }
            }
            auto itm = std::find(pt.begin(), pt.end(), m);
            std::vector<int> tail(pt.begin(), itm);
            std::reverse(tail.begin(), tail.end());
            path.insert(path.end(), tail.begin(), tail.end());
            if (static_cast<int>(path.size()) < std::max(2, 2 * d)) continue;
            // The apex must lie off the path (it closes a face with the
            // path's endpoints); small graphs can splice it into the path.
            if (std::find(path.begin(), path.end(), u) != path.end()) continue;
            if (!side_condition_holds(g, emb, path, u)) continue;
            if (!found || path.size() > best.path.size()) {
                best.path = path;
                best.u = u;
                found = true;
            }
        }
    }
    if (!found)
        throw SideConditionViolated("no diameter path of length >= 2d with chords on one side");
    best.chords = path_chords(g, best.path);
    best.guarantee_num = d;
    best.guarantee_den_sq = 1;
    best.strategy = "diameter";
    return best;
}

Strategy choose_strategy(const Graph& g) {
    long delta = g.max_degree();
    if (delta < 2) return Strategy::Diameter;
    mpz_class pow2 = mpz_class(1) << (delta - 2);
    return pow2 >= g.n ? Strategy::Fan : Strategy::Diameter;
}

bool moore_bound_holds(long n, long max_degree, long diameter) {
    if (max_degree <= 1) return n <= 2;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(max_degree - 1),
                  static_cast<unsigned long>(diameter));
    return 2 * p >= n;
}

namespace {
// Does (log2 n)^m * 2 >= n hold? Exact via rational bracketing of log2 n.
bool log_pow_ge(long n, long m) {
    mpz_class N(n);
    long j = static_cast<long>(mpz_sizeinbase(N.get_mpz_t(), 2)) - 1;  // floor(log2 n)
    mpz_class pow2j = mpz_class(1) << j;
    auto int_pow = [](const mpz_class& b, long e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
        return r;
    };
    if (pow2j == N) return 2 * int_pow(mpz_class(j), m) >= N;  // log2 n integral
    if (2 * int_pow(mpz_class(j), m) >= N) return true;        // lower bound suffices
    if (2 * int_pow(mpz_class(j + 1), m) < N) return false;    // upper bound refutes
    for (long p = 2; p <= 12; ++p) {
        mpz_class Np = int_pow(N, 1L << p);
        long a = static_cast<long>(mpz_sizeinbase(Np.get_mpz_t(), 2)) - 1;
        // a/2^p <= log2 n < (a+1)/2^p
        mpz_class scale = mpz_class(1) << (p * m);
        if (2 * int_pow(mpz_class(a), m) >= N * scale) return true;
        if (2 * int_pow(mpz_class(a + 1), m) < N * scale) return false;
    }
    throw Error("log2 bracketing did not converge");
}
}  // namespace

int theorem_fixed_lower_bound(long n) {
    if (n < 4) return 1;
    for (int k = 1; k <= 64; ++k)
        if (log_pow_ge(n, static_cast<long>(k) * k)) return k;
    throw Error("theorem bound iteration overflow");
}

}  // namespace untangle
