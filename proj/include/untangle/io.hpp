#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "untangle/graph.hpp"
#include "untangle/pipeline.hpp"
#include "untangle/rat.hpp"

namespace untangle {

// On-disk form of a graph plus drawing. UTF-8 lines:
//   "# comment"        (canonical files keep comments at the top)
//   "n <count>"
//   "v <id> <x> <y>"   exact rationals "p" or "p/q", ids dense 0..n-1
//   "e <u> <v>"
//   "a <id> mobile"    optional annotation
struct GraphFile {
    Graph g;
    Drawing d;
    std::vector<bool> mobile;  // per vertex; may be empty if no annotations
    std::vector<std::string> comments;
};

// Throws ParseError (with line number), DuplicateVertexError,
// DanglingEdgeError.
GraphFile parse_graph_file(std::istream& in);
GraphFile load_graph_file(const std::string& path);

// Canonical form: comments, header, vertices by id, edges sorted with
// u < v, mobile annotations by id. parse(serialize(x)) == x.
void serialize_graph_file(const GraphFile& gf, std::ostream& out);
void save_graph_file(const GraphFile& gf, const std::string& path);

struct SvgOptions {
    int precision = 6;        // decimal digits; display only, never read back
    std::vector<bool> fixed;  // filled disks; others drawn as open circles
};

// SVG 1.1 document, viewBox fitted to the bounding box with a 5% margin.
std::string render_svg(const Graph& g, const Drawing& d, const SvgOptions& opt = {});

std::string report_to_json(const FixReport& report);

}  // namespace untangle
