#pragma once

#include <vector>

#include "untangle/graph.hpp"
#include "untangle/rat.hpp"

namespace untangle {

// The interleaving permutation of {0..q^2-1}: blocks i = 0..q-1, block i
// listing ((q-1)q+i, (q-2)q+i, ..., q+i, i). sigma(2) = (2,0,3,1).
std::vector<int> sigma(int q);

struct WorstcaseInstance {
    Graph g;
    Drawing d;
};

// Path 0..q^2-1 drawn on x = 0 in sigma order (vertex at position p gets
// y = q^2 - p), plus two universal vertices a = q^2 at (0,-1) and b = q^2+1
// at (0,-2), with edge ab. Any plane drawing fixes at most q+1 vertices.
WorstcaseInstance planar_worstcase(int q);

// Path 0..q^2-1 drawn on y = 0 in sigma order (vertex at position p gets
// x = p), plus one universal vertex c = q^2 at (q^2, 0). Any plane drawing
// fixes at most 2q-2 vertices.
WorstcaseInstance outerplanar_worstcase(int q);

struct WitnessDrawing {
    Graph g;
    Drawing original;
    Drawing untangled;
    std::vector<int> fixed;  // exactly the vertices left at their originals
};

// Plane drawing of planar_worstcase(q) fixing exactly
// {0, q, ..., (q-1)q, (q-1)q+2} (q+1 vertices). Requires q >= 3: for q = 2
// no plane drawing can keep three originals (all six original positions are
// collinear and the universal vertices force overlapping edges).
WitnessDrawing planar_witness(int q);

// Plane drawing of outerplanar_worstcase(q) fixing exactly
// {0..q-1} union {2q, 3q, ..., (q-1)q} (2q-2 vertices). q >= 2.
WitnessDrawing outerplanar_witness(int q);

}  // namespace untangle
