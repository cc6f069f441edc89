#pragma once

#include <vector>

#include "untangle/graph.hpp"

namespace untangle {

// Combinatorial planar embedding: rot[v] lists the neighbors of v in cyclic
// order around v.
struct Embedding {
    std::vector<std::vector<int>> rot;
};

// Planar embedding via Boyer-Myrvold. Throws NonPlanarError if g has a
// K5/K3,3 subdivision, DisconnectedError if g is disconnected.
Embedding planar_embed(const Graph& g);

bool is_planar(const Graph& g);

// Faces of a combinatorial embedding, each as a closed walk of vertices.
std::vector<std::vector<int>> embedding_faces(const Graph& g, const Embedding& emb);

struct TriangulationResult {
    Graph g;
    Embedding emb;
    std::vector<std::pair<int, int>> added_edges;
};

// Augments g to a maximal planar graph (every face a triangle, m = 3n-6).
// Disconnected inputs are first joined by bridge edges; all additions are
// recorded in added_edges. Throws TooSmallError for n < 3, NonPlanarError if
// g is not planar.
TriangulationResult triangulate(const Graph& g);

// Triangulates an outerplanar graph so that vertex `apex` (default 0) is
// adjacent to every other vertex. Throws NotOuterplanarError.
TriangulationResult triangulate_outerplanar_fan(const Graph& h, int apex = 0);

// True iff g is 3-connected (brute-force 1- and 2-cut scan). Throws
// TooSmallError for n < 4.
bool is_triconnected(const Graph& g);

}  // namespace untangle
