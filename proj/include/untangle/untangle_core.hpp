#pragma once

#include <utility>
#include <vector>

#include "untangle/geometry.hpp"
#include "untangle/graph.hpp"
#include "untangle/rat.hpp"

namespace untangle {

// Shear (x, y) -> (x + eps*y, y) making all x coordinates pairwise distinct.
// eps = 0 when the x's are already distinct, otherwise half the smallest
// |dx/dy| over point pairs (so no pair collapses). Throws
// DuplicatePointsError if two points coincide.
struct ShearResult {
    Drawing d;
    Rat eps;
};
ShearResult distinctify(const Drawing& d);

// Inverse of the shear: recovers the original point.
Pt unshear(const Pt& p, const Rat& eps);

// Keeps a longest x-monotone subsequence F of the path vertices listed in
// I (indices into path, increasing) at their exact positions; reverses the
// path if the decreasing direction wins (ties prefer increasing). All other
// path vertices are re-placed on y = 0 with x chosen strictly increasing
// along the path: sequential midpoints between the surrounding kept values,
// unit steps beyond the first/last kept vertex. |F| >= ceil(sqrt(|I|)).
struct MonotoneFixResult {
    Drawing d;
    std::vector<int> path;       // possibly reversed copy of the input path
    std::vector<int> fixed_set;  // indices into the (output) path
    bool reversed;
};
MonotoneFixResult monotone_fix(const Drawing& d, const std::vector<int>& path,
                               const std::vector<int>& independent_set);

// Lowers each chord's cover endpoint far enough below the path that the
// partial skeleton (path edges plus processed chords) stays plane, every
// processed chord lies strictly below the path, and every bounded face is
// star-shaped. Chords are processed innermost first (span length, then left
// endpoint); the closing chord (0, l-1) sorts last. vstar lists the path
// indices allowed to move; it must cover all chords (CoverViolationError).
// Works in the frame shifted so all path y < 0; each move sets
// y = 2 * R_x * y_floor there, doubling defensively until the checks pass.
struct LowerChordsResult {
    Drawing d;
    // (path index, final y) per processed chord, in processing order.
    std::vector<std::pair<int, Rat>> moves;
};
LowerChordsResult lower_chords(const Drawing& d, const std::vector<int>& path,
                               const std::vector<std::pair<int, int>>& chords,
                               const std::vector<int>& vstar);

// Nested-chord instance on 2k+2 path vertices whose chord lowering performs
// exactly k moves with doubly-exponentially growing |y|.
struct PathologicalInstance {
    Graph g;
    Drawing d;
    std::vector<int> path;                    // 0..2k+1
    std::vector<std::pair<int, int>> chords;  // (i, 2k+1-i), i = 0..k-1
    std::vector<int> vstar;                   // right endpoints k+2..2k+1
};
PathologicalInstance pathological_instance(int k);

}  // namespace untangle
