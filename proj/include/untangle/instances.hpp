#pragma once

#include <random>
#include <utility>
#include <vector>

#include "untangle/graph.hpp"
#include "untangle/rat.hpp"
#include "untangle/star_fill.hpp"

namespace untangle {

using Rng = std::mt19937_64;

// Maximal planar graph (m = 3n-6) grown by repeated vertex-in-face
// insertion from a triangle. n >= 3.
Graph random_triangulation(int n, Rng& rng);

// Maximal outerplanar graph: polygon 0..n-1 plus a random triangulation of
// its interior. n >= 3.
Graph random_maximal_outerplanar(int n, Rng& rng);

// n pairwise distinct random rational points (small denominators).
Drawing random_drawing(int n, Rng& rng);

// An x-monotone path drawing with a random laminar chord family and a cover
// of the chords by movable path vertices.
struct ChordInstance {
    Drawing d;                                // path vertex i at index i
    std::vector<int> path;                    // 0..l-1
    std::vector<std::pair<int, int>> chords;  // laminar index pairs, span >= 2
    std::vector<int> vstar;                   // complement of a chord IS
};
ChordInstance random_chord_instance(int l, Rng& rng);

// An internally triangulated disk with chordless boundary, its boundary laid
// out on a random star-shaped polygon (interior positions left to the fill).
struct StarFillInstance {
    Graph g;
    Drawing d;
    RegionTask task;
};
StarFillInstance random_star_fill_instance(int max_n, Rng& rng);

}  // namespace untangle
