#pragma once

#include <utility>
#include <vector>

namespace untangle {

// Simple undirected graph on vertices 0..n-1. Edges stored with u < v,
// no duplicates, no self-loops (normalized by the constructor helpers).
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> es);

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    int max_degree() const;
    bool connected() const;
    // Connected components as lists of vertices.
    std::vector<std::vector<int>> components() const;
    void add_edge(int u, int v);
};

// BFS eccentricity sweep: returns (s, t, dist) where dist is the eccentricity
// of s realized at t, with s a vertex of maximum eccentricity found by a
// double sweep followed by exact all-pairs verification at this scale.
struct DiameterResult {
    int s, t, dist;
    std::vector<int> path;  // a shortest s-t path realizing dist
};
DiameterResult bfs_diameter(const Graph& g);

}  // namespace untangle
