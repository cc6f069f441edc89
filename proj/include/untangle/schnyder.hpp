#pragma once

#include <vector>

#include "untangle/embed.hpp"
#include "untangle/graph.hpp"

namespace untangle {

// Schnyder wood of a maximal planar graph (n >= 4): every interior edge is
// directed and colored into one of three trees rooted at the three outer
// vertices r1, r2, r3. parentK[v] is v's parent in tree K (-1 for the root
// and for the other two outer vertices).
struct SchnyderWood {
    int r1, r2, r3;
    std::vector<int> order;  // canonical order position of each vertex (1-based)
    std::vector<int> parent1, parent2, parent3;
};

// Throws NotTriangulatedError if g is not a maximal planar graph,
// TooSmallError for n < 4.
SchnyderWood schnyder_wood(const Graph& g);

// The path from v to the root of tree K (1, 2, or 3), starting at v.
std::vector<int> schnyder_path(const SchnyderWood& w, int v, int tree);

}  // namespace untangle
