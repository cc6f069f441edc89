#pragma once

#include <string>
#include <vector>

#include "untangle/embed.hpp"
#include "untangle/graph.hpp"

namespace untangle {

// A path w_1..w_l in a triangulation together with an apex u such that
// (u, w_1, w_l) is a face and all chords of the path lie on the non-apex side.
struct PathDecomposition {
    std::vector<int> path;  // vertex ids w_1..w_l
    int u;                  // apex
    // Chords as index pairs (i, j) into path, j > i + 1; includes the closing
    // edge (0, l-1) between the endpoints, which always exists here.
    std::vector<std::pair<int, int>> chords;
    // Squared untangling guarantee num/den of the producing strategy.
    long guarantee_num = 0, guarantee_den_sq = 1;
    std::string strategy;
};

// All chords of `path` in g, classified by embedding side. A chord is an edge
// of g between non-consecutive path vertices. Side naming: "left" is the side
// seen to the left when walking the path from w_1 to w_l, with rotations
// counterclockwise. The chord joining the two path endpoints (if present) is
// reported on the right by convention. Chords whose two endpoint-local
// classifications disagree are reported in `inconsistent`.
struct ChordSides {
    std::vector<std::pair<int, int>> left, right, inconsistent;
};
ChordSides chords_of_path(const Graph& g, const Embedding& emb, const std::vector<int>& path);

// Greedy maximum independent set in the chord graph (vertices = path indices
// 0..l-1, edges = chords): repeatedly takes the vertex of minimum degree
// (ties: minimum index) and deletes it with its neighbors. Returns the chosen
// path indices in increasing order; size >= (l+1)/2 because the chords are
// laminar.
std::vector<int> greedy_independent_set(int l, const std::vector<std::pair<int, int>>& chords);

// True iff all chords of the path lie on the non-apex side when the face
// (u, w_1, w_l) is taken as outer face.
bool side_condition_holds(const Graph& g, const Embedding& emb, const std::vector<int>& path,
                          int u);

// Fan strategy: u = maximum-degree vertex, path = u's neighbors in rotation
// order. Guarantee squared = (deg(u)+1)/2. Input must be a planar
// triangulation with its embedding.
PathDecomposition fan_path(const Graph& g, const Embedding& emb);

// Diameter strategy: BFS from a diameter endpoint r; the path is the union of
// the two BFS-tree branches pi_s and pi_t from a face (u, s, t), spliced at
// their lowest common tree vertex. Picks the face maximizing the path length;
// requires length >= 2*diam(g) vertices and the side condition, else throws
// SideConditionViolated. Guarantee squared = diam(g).
PathDecomposition diameter_path(const Graph& g, const Embedding& emb);

enum class Strategy { Fan, Diameter };

// Fan iff deg >= log2(n) + 2, decided exactly as 2^(deg-2) >= n.
Strategy choose_strategy(const Graph& g);

// Exact integer form of the Moore bound d >= (log2 n - 1)/log2(deg-1):
// holds iff 2*(deg-1)^d >= n.
bool moore_bound_holds(long n, long max_degree, long diameter);

// Smallest k with k^2 * log2(log2 n) >= log2 n - 1, evaluated exactly as
// (log2 n)^(k^2) * 2 >= n via rational bracketing of log2 n. n >= 2.
int theorem_fixed_lower_bound(long n);

}  // namespace untangle
