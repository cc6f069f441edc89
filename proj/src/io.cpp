#include "untangle/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "untangle/errors.hpp"

namespace untangle {

GraphFile parse_graph_file(std::istream& in) {
    GraphFile gf;
    int n = -1;
    std::vector<bool> seen;
    std::vector<std::pair<int, int>> edges;
    Drawing d;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head[0] == '#') {
            std::string rest = line.substr(line.find('#') + 1);
            if (!rest.empty() && rest[0] == ' ') rest.erase(0, 1);
            gf.comments.push_back(rest);
            continue;
        }
        if (head == "n") {
            if (n >= 0) throw ParseError(lineno, "duplicate header");
            if (!(ls >> n) || n < 0) throw ParseError(lineno, "bad vertex count");
            seen.assign(n, false);
            d.assign(n, Pt{Rat(0), Rat(0)});
            gf.mobile.assign(n, false);
            continue;
        }
        if (n < 0) throw ParseError(lineno, "'" + head + "' line before the 'n' header");
        if (head == "v") {
            int id;
            std::string xs, ys;
            if (!(ls >> id >> xs >> ys)) throw ParseError(lineno, "malformed vertex line");
            if (id < 0 || id >= n) throw ParseError(lineno, "vertex id out of range");
            if (seen[id])
                throw DuplicateVertexError("line " + std::to_string(lineno) + ": vertex " +
                                           std::to_string(id) + " defined twice");
            try {
                d[id] = Pt{parse_rat(xs), parse_rat(ys)};
            } catch (const ParseError& e) {
                throw ParseError(lineno, e.what());
            }
            seen[id] = true;
        } else if (head == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 0 || u >= n || v < 0 || v >= n || u == v)
                throw DanglingEdgeError("line " + std::to_string(lineno) + ": edge " +
                                        std::to_string(u) + "-" + std::to_string(v) +
                                        " references no valid vertex pair");
            edges.emplace_back(u, v);
        } else if (head == "a") {
            int id;
            std::string tag;
            if (!(ls >> id >> tag) || tag != "mobile")
                throw ParseError(lineno, "malformed annotation line");
            if (id < 0 || id >= n) throw ParseError(lineno, "annotation id out of range");
            gf.mobile[id] = true;
        } else {
            throw ParseError(lineno, "unknown line type '" + head + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'n' header");
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw ParseError(lineno, "vertex " + std::to_string(v) + " never defined");
    gf.g = Graph(n, std::move(edges));
    gf.d = std::move(d);
    return gf;
}

GraphFile load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_graph_file(in);
}

void serialize_graph_file(const GraphFile& gf, std::ostream& out) {
    for (const auto& c : gf.comments) out << "# " << c << "\n";
    out << "n " << gf.g.n << "\n";
    for (int v = 0; v < gf.g.n; ++v)
        out << "v " << v << " " << rat_to_string(gf.d[v].x) << " " << rat_to_string(gf.d[v].y)
            << "\n";
    auto edges = gf.g.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << "e " << u << " " << v << "\n";
    for (int v = 0; v < static_cast<int>(gf.mobile.size()); ++v)
        if (gf.mobile[v]) out << "a " << v << " mobile\n";
}

void save_graph_file(const GraphFile& gf, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    serialize_graph_file(gf, out);
}

namespace {

// Display-only decimal conversion: the exact core never reads these back.
std::string dec(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

}  // namespace

std::string render_svg(const Graph& g, const Drawing& d, const SvgOptions& opt) {
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (!d.empty()) {
        minx = maxx = d[0].x.get_d();
        miny = maxy = d[0].y.get_d();
        for (const Pt& p : d) {
            minx = std::min(minx, p.x.get_d());
            maxx = std::max(maxx, p.x.get_d());
            miny = std::min(miny, p.y.get_d());
            maxy = std::max(maxy, p.y.get_d());
        }
    }
    double w = maxx - minx, h = maxy - miny;
    if (w <= 0) w = 1;
    if (h <= 0) h = 1;
    double mx = 0.05 * w, my = 0.05 * h;
    double dim = std::max(w, h);
    double r = dim / 100.0, stroke = dim / 200.0;
    // Flip y so the drawing appears with y increasing upward.
    auto X = [&](const Pt& p) { return dec(p.x.get_d(), opt.precision); };
    auto Y = [&](const Pt& p) { return dec(maxy + miny - p.y.get_d(), opt.precision); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << dec(minx - mx, opt.precision) << " " << dec(miny - my, opt.precision) << " "
        << dec(w + 2 * mx, opt.precision) << " " << dec(h + 2 * my, opt.precision) << "\">\n";
    for (const auto& [u, v] : g.edges)
        svg << "  <line x1=\"" << X(d[u]) << "\" y1=\"" << Y(d[u]) << "\" x2=\"" << X(d[v])
            << "\" y2=\"" << Y(d[v]) << "\" stroke=\"black\" stroke-width=\""
            << dec(stroke, opt.precision) << "\"/>\n";
    for (int v = 0; v < g.n; ++v) {
        bool fixed = v < static_cast<int>(opt.fixed.size()) ? opt.fixed[v] : true;
        svg << "  <circle cx=\"" << X(d[v]) << "\" cy=\"" << Y(d[v]) << "\" r=\""
            << dec(r, opt.precision) << "\" ";
        if (fixed)
            svg << "fill=\"black\"";
        else
            svg << "fill=\"white\" stroke=\"black\" stroke-width=\""
                << dec(stroke, opt.precision) << "\"";
        svg << "/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string report_to_json(const FixReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["m"] = report.m;
    j["strategy"] = report.strategy;
    j["l"] = report.l;
    j["i_size"] = report.i_size;
    j["fixed_count"] = report.fixed_count;
    j["moved_count"] = report.moved_count;
    j["guarantee_num"] = report.guarantee_num;
    j["guarantee_den_sq"] = report.guarantee_den_sq;
    j["max_coord_bits"] = report.max_coord_bits;
    j["runtime_ms"] = report.runtime_ms;
    return j.dump(2) + "\n";
}

}  // namespace untangle
