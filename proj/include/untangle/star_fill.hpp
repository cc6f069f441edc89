#pragma once

#include <array>
#include <vector>

#include "untangle/embed.hpp"
#include "untangle/geometry.hpp"
#include "untangle/graph.hpp"
#include "untangle/path_strategy.hpp"

namespace untangle {

// Apex position: x midway between the path endpoints, y one above every line
// through two path vertices (so the apex sees the whole path).
Pt place_apex(const std::vector<Pt>& path_points);

// One region of the drawing still to be filled: a placed boundary cycle, the
// unplaced vertices inside it, and the triangulation faces it consists of.
struct RegionTask {
    std::vector<int> boundary;
    std::vector<int> interior;
    std::vector<std::array<int, 3>> faces;
};

// Splits the triangulation along path edges, chords, and apex-path edges.
// Upper regions are delimited by consecutive apex neighbors on the path,
// lower regions by the chords. Boundaries are verified chordless
// (ChordedBoundaryError) and the interiors partition V minus the path and
// apex. `chords` are index pairs into `path`.
std::vector<RegionTask> decompose_regions(const Graph& g, const Embedding& emb,
                                          const std::vector<int>& path, int u,
                                          const std::vector<std::pair<int, int>>& chords);

// Places all interior vertices of a star-shaped region by recursive kernel
// splitting: puts one interior vertex at a (dyadically simplified) kernel
// point, splits the region along its boundary edges, and recurses. Boundary
// positions are never touched. Throws FillFailureError if a (sub)region's
// kernel interior is empty.
void fill_star_polygon(const Graph& g, Drawing& d, const RegionTask& task);

// Places the apex and fills every region; returns the completed drawing.
// Verifies the result is plane.
Drawing untangle_assemble(const Graph& g, const Embedding& emb, const PathDecomposition& pd,
                          const Drawing& d_lowered);

}  // namespace untangle
