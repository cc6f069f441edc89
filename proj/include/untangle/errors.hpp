#pragma once

#include <stdexcept>
#include <string>

namespace untangle {

// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPlanarError : Error {
    explicit NonPlanarError(const std::string& w = "graph is not planar") : Error(w) {}
};
struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& w = "graph is disconnected") : Error(w) {}
};
struct TooSmallError : Error {
    explicit TooSmallError(const std::string& w = "graph is too small") : Error(w) {}
};
struct NotOuterplanarError : Error {
    explicit NotOuterplanarError(const std::string& w = "graph is not outerplanar") : Error(w) {}
};
struct NotAPathError : Error {
    explicit NotAPathError(const std::string& w = "vertex sequence is not a path") : Error(w) {}
};
struct NotTriangulatedError : Error {
    explicit NotTriangulatedError(const std::string& w = "graph is not a triangulation") : Error(w) {}
};
struct SideConditionViolated : Error {
    explicit SideConditionViolated(const std::string& w = "path side condition violated") : Error(w) {}
};
struct EmptyKernelError : Error {
    explicit EmptyKernelError(const std::string& w = "polygon kernel has empty interior") : Error(w) {}
};
struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& w = "query point outside path x-range") : Error(w) {}
};
struct CoverViolationError : Error {
    explicit CoverViolationError(const std::string& w = "vertex set does not cover all chords") : Error(w) {}
};
struct ChordedBoundaryError : Error {
    explicit ChordedBoundaryError(const std::string& w = "region boundary has a chord") : Error(w) {}
};
struct FillFailureError : Error {
    explicit FillFailureError(const std::string& w = "star polygon fill failed") : Error(w) {}
};
struct DuplicatePointsError : Error {
    explicit DuplicatePointsError(const std::string& w = "drawing has duplicate points") : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
    ParseError(int line_, const std::string& w)
        : Error("line " + std::to_string(line_) + ": " + w), line(line_) {}
    int line = 0;
};
struct DuplicateVertexError : Error {
    explicit DuplicateVertexError(const std::string& w) : Error(w) {}
};
struct DanglingEdgeError : Error {
    explicit DanglingEdgeError(const std::string& w) : Error(w) {}
};
struct LayoutInconsistentError : Error {
    explicit LayoutInconsistentError(const std::string& w = "clause layout is inconsistent") : Error(w) {}
};
struct AuditFailureError : Error {
    explicit AuditFailureError(const std::string& w = "structural audit failed") : Error(w) {}
};
struct UnsatisfiedError : Error {
    explicit UnsatisfiedError(const std::string& w = "assignment does not satisfy the formula") : Error(w) {}
};
struct PlacementBlockedError : Error {
    explicit PlacementBlockedError(const std::string& w = "gadget placement blocked") : Error(w) {}
};
struct VertexMismatchError : Error {
    explicit VertexMismatchError(const std::string& w = "drawings disagree on vertex set") : Error(w) {}
};
struct TooLargeError : Error {
    explicit TooLargeError(const std::string& w = "instance too large for exhaustive search") : Error(w) {}
};

}  // namespace untangle
