#include "untangle/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "untangle/errors.hpp"

namespace untangle {

Graph::Graph(int n_, std::vector<std::pair<int, int>> es) : n(n_) {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : es) {
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw DanglingEdgeError("edge endpoint out of range");
        if (seen.insert({u, v}).second) edges.push_back({u, v});
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end();
}

void Graph::add_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    if (u == v || has_edge(u, v)) return;
    edges.push_back({u, v});
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
        d[u]++;
        d[v]++;
    }
    return d;
}

int Graph::max_degree() const {
    auto d = degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

std::vector<std::vector<int>> Graph::components() const {
    auto adj = adjacency();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size()) - 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            out.back().push_back(u);
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    q.push(w);
                }
        }
    }
    return out;
}

bool Graph::connected() const { return n <= 1 || components().size() == 1; }

namespace {
// BFS returning (dist, parent).
std::pair<std::vector<int>, std::vector<int>> bfs(const std::vector<std::vector<int>>& adj, int s) {
    std::vector<int> dist(adj.size(), -1), par(adj.size(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj[u])
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                par[w] = u;
                q.push(w);
            }
    }
    return {dist, par};
}
}  // namespace

DiameterResult bfs_diameter(const Graph& g) {
    if (!g.connected()) throw DisconnectedError();
    if (g.n == 0) throw TooSmallError("diameter of empty graph");
    auto adj = g.adjacency();
    int bs = 0, bt = 0, bd = 0;
    for (int s = 0; s < g.n; ++s) {
        auto [dist, par] = bfs(adj, s);
        for (int t = 0; t < g.n; ++t)
            if (dist[t] > bd) {
                bd = dist[t];
                bs = s;
                bt = t;
            }
    }
    auto [dist, par] = bfs(adj, bs);
    std::vector<int> path;
    for (int v = bt; v != -1; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return {bs, bt, bd, path};
}

}  // namespace untangle
