#include "untangle/star_fill.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "untangle/errors.hpp"

namespace untangle {

Pt place_apex(const std::vector<Pt>& path_points) {
    const int l = static_cast<int>(path_points.size());
    if (l < 2) throw NotAPathError("apex placement needs at least 2 path vertices");
    Pt u;
    u.x = (path_points.front().x + path_points.back().x) / 2;
    Rat besty = path_points[0].y;
    for (const auto& p : path_points) besty = std::max(besty, p.y);
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            const Pt &a = path_points[i], &b = path_points[j];
            if (a.x == b.x) continue;  // path x's are distinct, defensive
            Rat y = a.y + (b.y - a.y) * (u.x - a.x) / (b.x - a.x);
            besty = std::max(besty, y);
        }
    u.y = besty + 1;
    // The apex must see every path vertex.
    for (int k = 0; k < l; ++k)
        for (int i = 0; i + 1 < l; ++i) {
            if (i == k || i + 1 == k) continue;
            if (segments_cross(u, path_points[k], path_points[i], path_points[i + 1]))
                throw Error("apex does not see the whole path");
        }
    return u;
}

namespace {
using EdgeKey = std::pair<int, int>;
EdgeKey ek(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Orders a set of boundary edges into a simple cycle; empty result if the
// edge set is not a single cycle.
std::vector<int> trace_cycle(const std::set<EdgeKey>& edges) {
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [v, nb] : adj)
        if (nb.size() != 2) return {};
    std::vector<int> cyc{adj.begin()->first};
    int prev = -1;
    while (true) {
        int cur = cyc.back();
        int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        if (nxt == cyc.front()) break;
        prev = cur;
        cyc.push_back(nxt);
        if (cyc.size() > edges.size()) return {};
    }
    return cyc.size() == edges.size() ? cyc : std::vector<int>{};
}
}  // namespace

std::vector<RegionTask> decompose_regions(const Graph& g, const Embedding& emb,
                                          const std::vector<int>& path, int u,
                                          const std::vector<std::pair<int, int>>& chords) {
    const int l = static_cast<int>(path.size());
    std::set<EdgeKey> separators;
    for (int i = 0; i + 1 < l; ++i) separators.insert(ek(path[i], path[i + 1]));
    for (auto [i, j] : chords) separators.insert(ek(path[i], path[j]));
    for (int i = 0; i < l; ++i)
        if (g.has_edge(u, path[i])) separators.insert(ek(u, path[i]));

    auto faces = embedding_faces(g, emb);
    int outer = -1;
    std::set<int> ust{u, path[0], path[l - 1]};
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (faces[f].size() == 3 && std::set<int>(faces[f].begin(), faces[f].end()) == ust)
            outer = f;
    if (outer == -1) throw Error("(u, s, t) is not a face");

    std::map<EdgeKey, std::vector<int>> by_edge;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (size_t i = 0; i < faces[f].size(); ++i)
            by_edge[ek(faces[f][i], faces[f][(i + 1) % faces[f].size()])].push_back(f);

    std::vector<int> comp(faces.size(), -1);
    comp[outer] = -2;
    int nc = 0;
    for (int f0 = 0; f0 < static_cast<int>(faces.size()); ++f0) {
        if (comp[f0] != -1) continue;
        std::queue<int> q;
        q.push(f0);
        comp[f0] = nc;
        while (!q.empty()) {
            int f = q.front();
            q.pop();
            for (size_t i = 0; i < faces[f].size(); ++i) {
                EdgeKey e = ek(faces[f][i], faces[f][(i + 1) % faces[f].size()]);
                if (separators.count(e)) continue;
                for (int f2 : by_edge[e])
                    if (comp[f2] == -1) {
                        comp[f2] = nc;
                        q.push(f2);
                    }
            }
        }
        ++nc;
    }

    std::set<int> placed(path.begin(), path.end());
    placed.insert(u);
    std::vector<RegionTask> tasks(nc);
    std::vector<std::set<EdgeKey>> bedges(nc);
    std::vector<std::set<int>> verts(nc);
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        if (comp[f] < 0) continue;
        RegionTask& t = tasks[comp[f]];
        t.faces.push_back({faces[f][0], faces[f][1], faces[f][2]});
        for (size_t i = 0; i < faces[f].size(); ++i) {
            verts[comp[f]].insert(faces[f][i]);
            EdgeKey e = ek(faces[f][i], faces[f][(i + 1) % faces[f].size()]);
            if (separators.count(e)) bedges[comp[f]].insert(e);
        }
    }
    std::set<int> seen_interior;
    for (int c = 0; c < nc; ++c) {
        tasks[c].boundary = trace_cycle(bedges[c]);
        if (tasks[c].boundary.empty())
            throw Error("region boundary is not a simple cycle");
        std::set<int> bset(tasks[c].boundary.begin(), tasks[c].boundary.end());
        for (int v : verts[c])
            if (!bset.count(v)) {
                if (placed.count(v)) throw Error("placed vertex strictly inside a region");
                tasks[c].interior.push_back(v);
                if (!seen_interior.insert(v).second)
                    throw Error("interior vertex in two regions");
            }
        // Chordless boundary: no g-edge between non-consecutive cycle vertices
        // realized by a face of this region.
        const auto& cyc = tasks[c].boundary;
        for (size_t i = 0; i < cyc.size(); ++i)
            for (size_t j = i + 1; j < cyc.size(); ++j) {
                if (j == i + 1 || (i == 0 && j + 1 == cyc.size())) continue;
                if (!g.has_edge(cyc[i], cyc[j])) continue;
                for (int f : by_edge[ek(cyc[i], cyc[j])])
                    if (comp[f] >= 0 && comp[f] == c) throw ChordedBoundaryError();
            }
    }
    // The interiors plus path plus apex must cover every vertex exactly once.
    if (static_cast<int>(seen_interior.size()) + l + 1 != g.n)
        throw Error("region interiors do not partition the remaining vertices");
    return tasks;
}

namespace {

void fill_recursive(const Graph& g, Drawing& d, const std::vector<int>& boundary,
                    const std::vector<int>& interior,
                    const std::vector<std::array<int, 3>>& faces, int depth) {
    if (depth > g.n + 8) throw FillFailureError("fill recursion too deep");
    if (interior.empty()) return;
    std::vector<Pt> poly;
    for (int v : boundary) poly.push_back(d[v]);
    auto hs = kernel_halfplanes(poly);
    if (!polygon_kernel(poly)) throw FillFailureError("region kernel interior is empty");

    // Inner triangle of the first boundary edge gives the vertex to place.
    int b0 = boundary[0], b1 = boundary[1], w = -1;
    for (const auto& f : faces) {
        for (int r = 0; r < 3; ++r) {
            int a = f[r], b = f[(r + 1) % 3], c = f[(r + 2) % 3];
            if ((a == b0 && b == b1) || (a == b1 && b == b0)) {
                w = c;
                break;
            }
        }
        if (w != -1) break;
    }
    if (w == -1) throw FillFailureError("boundary edge has no region face");
    if (std::find(interior.begin(), interior.end(), w) == interior.end())
        throw FillFailureError("inner triangle vertex is not interior (chorded boundary?)");

    std::set<int> bset(boundary.begin(), boundary.end());
    // w's neighbors on the boundary, in boundary cycle order.
    std::vector<int> anchors;
    for (int v : boundary)
        if (g.has_edge(w, v)) anchors.push_back(v);
    if (anchors.size() < 2) throw FillFailureError("placed vertex has fewer than 2 anchors");

    Pt exact = kernel_interior_point(poly);
    for (int attempt = 0; attempt < 2; ++attempt) {
        Pt kappa = attempt == 0 ? simplify_point(exact, hs) : exact;
        d[w] = kappa;
        // Split the faces along boundary edges and w-anchor edges.
        std::set<EdgeKey> seps;
        for (size_t i = 0; i < boundary.size(); ++i)
            seps.insert(ek(boundary[i], boundary[(i + 1) % boundary.size()]));
        for (int a : anchors) seps.insert(ek(w, a));
        std::map<EdgeKey, std::vector<int>> by_edge;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            for (int r = 0; r < 3; ++r) by_edge[ek(faces[f][r], faces[f][(r + 1) % 3])].push_back(f);
        std::vector<int> comp(faces.size(), -1);
        int nc = 0;
        for (int f0 = 0; f0 < static_cast<int>(faces.size()); ++f0) {
            if (comp[f0] != -1) continue;
            std::queue<int> q;
            q.push(f0);
            comp[f0] = nc;
            while (!q.empty()) {
                int f = q.front();
                q.pop();
                for (int r = 0; r < 3; ++r) {
                    EdgeKey e = ek(faces[f][r], faces[f][(r + 1) % 3]);
                    if (seps.count(e)) continue;
                    for (int f2 : by_edge[e])
                        if (comp[f2] == -1) {
                            comp[f2] = nc;
                            q.push(f2);
                        }
                }
            }
            ++nc;
        }
        // Sub-boundary per component: w plus the contiguous boundary arc the
        // component touches.
        std::vector<int> bpos(g.n, -1);
        for (size_t i = 0; i < boundary.size(); ++i) bpos[boundary[i]] = static_cast<int>(i);
        struct Sub {
            std::vector<int> boundary, interior;
            std::vector<std::array<int, 3>> faces;
        };
        std::vector<Sub> subs(nc);
        std::vector<std::set<int>> svb(nc);
        bool ok = true;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            subs[comp[f]].faces.push_back(faces[f]);
            for (int r = 0; r < 3; ++r)
                if (bpos[faces[f][r]] != -1) svb[comp[f]].insert(bpos[faces[f][r]]);
        }
        const int B = static_cast<int>(boundary.size());
        std::set<int> apos;
        for (int a : anchors) apos.insert(bpos[a]);
        for (int c = 0; c < nc && ok; ++c) {
            // The boundary positions touched must form an arc between two
            // anchors (cyclically contiguous).
            std::vector<int> ps(svb[c].begin(), svb[c].end());
            if (ps.empty()) {
                ok = false;
                break;
            }
            // Find the arc start: the unique touched anchor whose successor
            // arc covers all touched positions.
            int start = -1;
            for (int p : ps)
                if (apos.count(p)) {
                    bool covers = true;
                    std::set<int> arc;
                    for (int t = p;; t = (t + 1) % B) {
                        arc.insert(t);
                        if (t != p && apos.count(t)) break;
                        if (static_cast<int>(arc.size()) > B) {
                            covers = false;
                            break;
                        }
                    }
                    for (int q2 : ps)
                        if (!arc.count(q2)) covers = false;
                    if (covers) {
                        start = p;
                        break;
                    }
                }
            if (start == -1) {
                ok = false;
                break;
            }
            std::vector<int>& sb = subs[c].boundary;
            sb.push_back(w);
            for (int t = start;; t = (t + 1) % B) {
                sb.push_back(boundary[t]);
                if (t != start && apos.count(t)) break;
            }
            std::set<int> sbset(sb.begin(), sb.end());
            for (const auto& f : subs[c].faces)
                for (int r = 0; r < 3; ++r)
                    if (!sbset.count(f[r]) && bpos[f[r]] == -1 && f[r] != w &&
                        std::find(subs[c].interior.begin(), subs[c].interior.end(), f[r]) ==
                            subs[c].interior.end())
                        subs[c].interior.push_back(f[r]);
            // Sub-kernel must have interior before we recurse.
            std::vector<Pt> sp;
            for (int v : sb) sp.push_back(d[v]);
            if (!polygon_kernel(sp)) ok = false;
        }
        if (!ok) {
            if (attempt == 0) continue;  // retry with the exact kernel point
            throw FillFailureError("sub-region kernel interior is empty");
        }
        // The placed vertex's edges to its anchors must not cross the
        // boundary (local plane check for this call).
        for (int a : anchors)
            for (size_t i = 0; i < boundary.size(); ++i) {
                int p = boundary[i], q = boundary[(i + 1) % boundary.size()];
                if (p == a || q == a) continue;
                if (segments_cross(d[w], d[a], d[p], d[q]))
                    throw FillFailureError("anchor edge crosses the region boundary");
            }
        for (int c = 0; c < nc; ++c)
            fill_recursive(g, d, subs[c].boundary, subs[c].interior, subs[c].faces, depth + 1);
        return;
    }
}

}  // namespace

void fill_star_polygon(const Graph& g, Drawing& d, const RegionTask& task) {
    Drawing before = d;
    fill_recursive(g, d, task.boundary, task.interior, task.faces, 0);
    for (int v : task.boundary)
        if (!(d[v] == before[v])) throw FillFailureError("boundary position changed");
    // Whole-region planarity check on the induced subdrawing.
    std::set<int> verts(task.boundary.begin(), task.boundary.end());
    for (int v : task.interior) verts.insert(v);
    std::vector<int> ids(verts.begin(), verts.end());
    std::map<int, int> local;
    for (size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
    // Keep only edges realized inside this region (its face edges), not
    // edges between region vertices that live elsewhere in the drawing.
    std::set<EdgeKey> realized;
    for (const auto& f : task.faces)
        for (int r = 0; r < 3; ++r) realized.insert(ek(f[r], f[(r + 1) % 3]));
    for (size_t i = 0; i < task.boundary.size(); ++i)
        realized.insert(
            ek(task.boundary[i], task.boundary[(i + 1) % task.boundary.size()]));
    std::vector<std::pair<int, int>> es2;
    for (auto [a, b] : g.edges)
        if (local.count(a) && local.count(b) && realized.count(ek(a, b)))
            es2.push_back({local[a], local[b]});
    Graph sub(static_cast<int>(ids.size()), es2);
    Drawing dd;
    for (int v : ids) dd.push_back(d[v]);
    if (!is_plane(sub, dd)) throw FillFailureError("filled region is not plane");
}

Drawing untangle_assemble(const Graph& g, const Embedding& emb, const PathDecomposition& pd,
                          const Drawing& d_lowered) {
    Drawing d = d_lowered;
    std::vector<Pt> ppts;
    for (int v : pd.path) ppts.push_back(d[v]);
    d[pd.u] = place_apex(ppts);
    auto tasks = decompose_regions(g, emb, pd.path, pd.u, pd.chords);
    for (const auto& t : tasks) fill_star_polygon(g, d, t);
    if (!is_plane(g, d)) throw Error("assembled drawing is not plane");
    return d;
}

}  // namespace untangle
