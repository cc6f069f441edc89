#pragma once

#include <cstdint>
#include <vector>

#include "untangle/graph.hpp"
#include "untangle/rat.hpp"

namespace untangle {

enum class Direction { Increasing, Decreasing };

struct MonotoneResult {
    int length = 0;
    std::vector<int> witness;  // indices into the sequence
};

// Longest monotone subsequence by O(n^2) dynamic programming, with a witness.
MonotoneResult longest_monotone(const std::vector<long long>& seq, Direction dir);

// Independent patience-sorting computation of the same length (no witness),
// used to cross-check the DP.
int longest_monotone_patience(const std::vector<long long>& seq, Direction dir);

struct SeparatedResult {
    int size = 0;                    // |first| + |second|
    std::vector<int> first, second;  // witness index sets
};

// Maximum |S ∪ S'| over pairs of same-direction monotone subsequences that
// are separated: disjoint position ranges and disjoint value ranges.
// Elements must be distinct. DP over position split and value threshold;
// O(n^3).
SeparatedResult max_separated_pair(const std::vector<long long>& seq, Direction dir);

// Exhaustive subset enumeration of the same quantity. Throws TooLargeError
// for n > 12.
int max_separated_pair_exhaustive(const std::vector<long long>& seq, Direction dir);

// Checks that every tested permutation of {0..n-1} has an increasing
// subsequence of s+1 terms or a decreasing one of r+1 terms (requires
// n >= s*r + 1). samples == 0 runs all n! permutations (n <= 8 only,
// else TooLargeError); otherwise tests `samples` seeded random permutations.
bool erdos_szekeres_check(int n, int s, int r, long samples, std::uint64_t seed);

// Number of vertices drawn at bit-identical positions in both drawings.
// Throws VertexMismatchError if the drawings have different sizes.
int fixed_count(const Drawing& before, const Drawing& after);

struct FixSearchResult {
    int best_fixed = 0;
    Drawing drawing;
    std::vector<int> fixed;      // vertex ids left at their input positions
    bool heuristic = true;       // lower-bound witness, never an exact fix
};

// Heuristic lower-bound witness for fix(g, d): enumerates fixed subsets
// largest-first and places the moved vertices on a grid over the bounding
// box until a plane drawing appears. Throws TooLargeError if n > max_n.
FixSearchResult small_fix_search(const Graph& g, const Drawing& d, int max_n = 8, int grid = 5);

}  // namespace untangle
