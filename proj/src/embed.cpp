#include "untangle/embed.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#include <algorithm>
#include <map>
#include <set>

#include "untangle/errors.hpp"

namespace untangle {

namespace {
using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.n);
    for (auto [u, v] : g.edges) boost::add_edge(u, v, bg);
    return bg;
}
}  // namespace

bool is_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

Embedding planar_embed(const Graph& g) {
    if (!g.connected()) throw DisconnectedError();
    BoostGraph bg = to_boost(g);
    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> emb_storage(g.n);
    auto emb_map = boost::make_iterator_property_map(emb_storage.begin(),
                                                     boost::get(boost::vertex_index, bg));
    if (!boost::boyer_myrvold_planarity_test(
            boost::boyer_myrvold_params::graph = bg,
            boost::boyer_myrvold_params::embedding = emb_map))
        throw NonPlanarError();
    Embedding out;
    out.rot.resize(g.n);
    for (int v = 0; v < g.n; ++v)
        for (const Edge& e : emb_storage[v]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            out.rot[v].push_back(a == v ? b : a);
        }
    return out;
}

std::vector<std::vector<int>> embedding_faces(const Graph& g, const Embedding& emb) {
    // pos[{v,u}] = index of u in rot[v]; parallel edges are absent by Graph
    // normalization, so the map is well defined.
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < emb.rot[v].size(); ++i) pos[{v, emb.rot[v][i]}] = static_cast<int>(i);
    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> faces;
    for (auto [u0, v0] : g.edges)
        for (auto [u, v] : {std::pair{u0, v0}, std::pair{v0, u0}}) {
            if (used.count({u, v})) continue;
            std::vector<int> walk;
            int cu = u, cv = v;
            while (!used.count({cu, cv})) {
                used.insert({cu, cv});
                walk.push_back(cu);
                int p = pos.at({cv, cu});
                int sz = static_cast<int>(emb.rot[cv].size());
                int w = emb.rot[cv][(p + 1) % sz];
                cu = cv;
                cv = w;
            }
            faces.push_back(std::move(walk));
        }
    return faces;
}

namespace {
// Adds one chord inside an over-long face; returns false if the face needed
// none (length 3 walk of distinct vertices).
bool add_chord_in_face(Graph& g, const std::vector<int>& walk,
                       std::vector<std::pair<int, int>>& added) {
    const int L = static_cast<int>(walk.size());
    std::set<int> distinct(walk.begin(), walk.end());
    if (L == 3 && distinct.size() == 3) return false;
    std::pair<int, int> best{-1, -1};
    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) {
            int a = walk[i], b = walk[j];
            if (a == b || g.has_edge(a, b)) continue;
            auto cand = std::minmax(a, b);
            std::pair<int, int> c{cand.first, cand.second};
            if (best.first == -1 || c < best) best = c;
        }
    if (best.first == -1)
        throw Error("face cannot be triangulated without parallel edges");
    g.add_edge(best.first, best.second);
    added.push_back(best);
    return true;
}
}  // namespace

TriangulationResult triangulate(const Graph& g) {
    if (g.n < 3) throw TooSmallError("triangulation needs at least 3 vertices");
    if (!is_planar(g)) throw NonPlanarError();
    TriangulationResult res;
    res.g = g;
    auto comps = g.components();
    for (size_t i = 1; i < comps.size(); ++i) {
        res.g.add_edge(comps[0][0], comps[i][0]);
        res.added_edges.push_back({std::min(comps[0][0], comps[i][0]),
                                   std::max(comps[0][0], comps[i][0])});
    }
    for (;;) {
        Embedding emb = planar_embed(res.g);
        auto faces = embedding_faces(res.g, emb);
        bool changed = false;
        for (const auto& f : faces)
            if (add_chord_in_face(res.g, f, res.added_edges)) {
                changed = true;
                break;
            }
        if (!changed) {
            res.emb = emb;
            break;
        }
    }
    if (res.g.m() != 3 * res.g.n - 6)
        throw Error("triangulation postcondition m = 3n-6 failed");
    return res;
}

TriangulationResult triangulate_outerplanar_fan(const Graph& h, int apex) {
    if (h.n < 3) throw TooSmallError("fan triangulation needs at least 3 vertices");
    // h is outerplanar iff h plus a universal vertex is planar.
    Graph test(h.n + 1, h.edges);
    for (int v = 0; v < h.n; ++v) test.add_edge(v, h.n);
    if (!is_planar(test)) throw NotOuterplanarError();
    TriangulationResult res;
    res.g = h;
    for (int v = 0; v < h.n; ++v)
        if (v != apex && !res.g.has_edge(apex, v)) {
            res.g.add_edge(apex, v);
            res.added_edges.push_back({std::min(apex, v), std::max(apex, v)});
        }
    if (!is_planar(res.g))
        throw NotOuterplanarError("outerplanar graph plus apex star is not planar");
    for (;;) {
        Embedding emb = planar_embed(res.g);
        auto faces = embedding_faces(res.g, emb);
        bool changed = false;
        for (const auto& f : faces)
            if (add_chord_in_face(res.g, f, res.added_edges)) {
                changed = true;
                break;
            }
        if (!changed) {
            res.emb = emb;
            break;
        }
    }
    if (res.g.m() != 3 * res.g.n - 6)
        throw Error("fan triangulation postcondition m = 3n-6 failed");
    auto deg = res.g.degrees();
    if (deg[apex] != res.g.n - 1)
        throw Error("fan triangulation postcondition deg(apex) = n-1 failed");
    return res;
}

bool is_triconnected(const Graph& g) {
    if (g.n < 4) throw TooSmallError("triconnectivity needs at least 4 vertices");
    if (!g.connected()) return false;
    auto connected_without = [&](int a, int b) {
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : g.edges)
            if (u != a && v != a && u != b && v != b) es.push_back({u, v});
        // BFS over remaining vertices.
        Graph sub(g.n, es);
        auto adj = sub.adjacency();
        int start = -1, want = 0;
        for (int v = 0; v < g.n; ++v)
            if (v != a && v != b) {
                if (start == -1) start = v;
                ++want;
            }
        if (start == -1) return true;
        std::vector<char> seen(g.n, 0);
        std::vector<int> st{start};
        seen[start] = 1;
        int cnt = 0;
        while (!st.empty()) {
            int u = st.back();
            st.pop_back();
            ++cnt;
            for (int w : adj[u])
                if (!seen[w] && w != a && w != b) {
                    seen[w] = 1;
                    st.push_back(w);
                }
        }
        return cnt == want;
    };
    for (int a = 0; a < g.n; ++a)
        for (int b = a; b < g.n; ++b)
            if (!connected_without(a, b)) return false;
    return true;
}

}  // namespace untangle
