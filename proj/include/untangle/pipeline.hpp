#pragma once

#include <string>
#include <vector>

#include "untangle/graph.hpp"
#include "untangle/rat.hpp"

namespace untangle {

struct FixReport {
    long n = 0, m = 0;
    std::string strategy;
    long l = 0;            // path length (vertices)
    long i_size = 0;       // independent set size in the chord graph
    long fixed_count = 0;  // vertices bit-identical to the input drawing
    long moved_count = 0;
    long guarantee_num = 0, guarantee_den_sq = 1;  // squared guarantee num/den
    long max_coord_bits = 0;
    long runtime_ms = 0;
};

struct UntangleResult {
    Drawing d;
    std::vector<int> fixed;  // vertex ids at their exact input positions
    FixReport report;
};

// Smallest k whose square is at least num/den_sq: the number of fixed
// vertices certified by a squared guarantee. Exact integer arithmetic.
long guarantee_value(long num, long den_sq);

// Untangles a straight-line drawing of a planar graph into a plane drawing,
// keeping as many vertices as the chosen strategy certifies at their exact
// input positions. strategy: "auto" (fan if max degree >= log2 n + 2, else
// diameter, falling back to fan if the diameter path fails its side
// condition), "fan", or "diameter". Throws NonPlanarError,
// DuplicatePointsError.
UntangleResult untangle(const Graph& g, const Drawing& d, const std::string& strategy = "auto");

// Untangling specialized to outerplanar graphs via a fan triangulation;
// certifies ceil(sqrt(n/2)) fixed vertices. Throws NotOuterplanarError,
// DuplicatePointsError.
UntangleResult untangle_outerplanar(const Graph& g, const Drawing& d);

}  // namespace untangle
