#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "untangle/graph.hpp"
#include "untangle/rat.hpp"

namespace untangle {

// Sign of the cross product (b-a) x (c-a): +1 if a,b,c make a left turn
// (counterclockwise), -1 for a right turn, 0 if collinear.
int orient(const Pt& a, const Pt& b, const Pt& c);

// True if p lies on the closed segment [a,b].
bool on_segment(const Pt& a, const Pt& b, const Pt& p);

// True if p lies in the relative interior of segment [a,b].
bool on_open_segment(const Pt& a, const Pt& b, const Pt& p);

// Two segments cross if they share a point lying in the relative interior of
// at least one of them. Collinear overlap of positive length counts as a
// crossing; segments that meet only at a shared endpoint do not.
bool segments_cross(const Pt& p1, const Pt& q1, const Pt& p2, const Pt& q2);

struct CrossingReport {
    // Pairs of edge indices (i < j) whose segments cross.
    std::vector<std::pair<int, int>> edge_pairs;
    // (vertex, edge index) where the vertex lies in the edge's relative
    // interior without being one of its endpoints.
    std::vector<std::pair<int, int>> vertex_on_edge;
    // Pairs of distinct vertices drawn at the same point.
    std::vector<std::pair<int, int>> coincident_vertices;
    bool clean() const {
        return edge_pairs.empty() && vertex_on_edge.empty() && coincident_vertices.empty();
    }
};

// Exhaustive quadratic crossing scan of a straight-line drawing.
CrossingReport crossing_pairs(const Graph& g, const Drawing& d);

// True iff the drawing is plane: vertices pairwise distinct, no edge crossings,
// no vertex in the relative interior of a non-incident edge.
bool is_plane(const Graph& g, const Drawing& d);

// Kernel (locus of points seeing the whole boundary) of a simple polygon,
// as a convex polygon in counterclockwise order. nullopt if the kernel has
// empty interior.
std::optional<std::vector<Pt>> polygon_kernel(const std::vector<Pt>& poly);

// Deterministic point strictly inside the kernel. Starts from the average of
// the kernel's vertices and refines if that lands on the boundary. Throws
// EmptyKernelError when the kernel interior is empty.
Pt kernel_interior_point(const std::vector<Pt>& poly);

// Strictly increasing x along the sequence.
bool is_x_monotone(const std::vector<Pt>& pts);

// True iff p lies strictly below the x-monotone polyline at x(p).
// Throws OutOfRangeError if x(p) is outside the polyline's x-range,
// NotAPathError if the polyline is not x-monotone or has fewer than 2 points.
bool below_path(const std::vector<Pt>& path, const Pt& p);

// --- helpers shared by higher layers ---

// Twice the signed area of a polygon (positive for counterclockwise).
Rat polygon_area2(const std::vector<Pt>& poly);

// Closed half-plane {p : orient(a,b,p) >= 0}; strict interior uses > 0.
struct HalfPlane {
    Pt a, b;
};

// Intersection of half-planes clipped to a bounding box; empty vector if the
// intersection has empty interior.
std::vector<Pt> clip_halfplanes(std::vector<Pt> region, const std::vector<HalfPlane>& hs);

bool strictly_inside_all(const Pt& p, const std::vector<HalfPlane>& hs);

// Half-planes whose strict intersection is the kernel interior of poly
// (poly in either orientation).
std::vector<HalfPlane> kernel_halfplanes(std::vector<Pt> poly);

// Replaces p by a nearby point with dyadic coordinates (denominator a power of
// two) that still satisfies all half-planes strictly. p itself must be strict.
Pt simplify_point(const Pt& p, const std::vector<HalfPlane>& hs);

// True iff p is strictly inside the convex polygon (counterclockwise).
bool inside_convex(const std::vector<Pt>& convex, const Pt& p);

// Exact comparison of direction vectors by angle in [0, 2*pi), counterclockwise
// starting from the positive x-axis. Vectors must be nonzero.
bool angle_less(const Pt& u, const Pt& v);

// Faces of a plane straight-line drawing of a connected graph.
struct PlaneFaces {
    // Each face as a closed walk of vertices (no repeated terminal vertex).
    std::vector<std::vector<int>> walks;
    int outer;  // index of the unbounded face walk
};
PlaneFaces plane_faces(const Graph& g, const Drawing& d);

}  // namespace untangle
