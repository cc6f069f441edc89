#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "untangle/geometry.hpp"
#include "untangle/io.hpp"
#include "untangle/oracles.hpp"
#include "untangle/pipeline.hpp"
#include "untangle/worstcase.hpp"

namespace py = pybind11;
using namespace untangle;

namespace {

Drawing to_drawing(const std::vector<std::pair<std::string, std::string>>& coords) {
    Drawing d;
    for (const auto& [x, y] : coords) d.push_back(Pt{parse_rat(x), parse_rat(y)});
    return d;
}

std::vector<std::pair<std::string, std::string>> from_drawing(const Drawing& d) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Pt& p : d) out.emplace_back(rat_to_string(p.x), rat_to_string(p.y));
    return out;
}

}  // namespace

PYBIND11_MODULE(_untangle, m) {
    m.doc() = "exact planar drawing untangling";

    m.def(
        "untangle",
        [](int n, const std::vector<std::pair<int, int>>& edges,
           const std::vector<std::pair<std::string, std::string>>& coords,
           const std::string& strategy) {
            Graph g(n, edges);
            UntangleResult res = ::untangle::untangle(g, to_drawing(coords), strategy);
            py::dict report;
            report["n"] = res.report.n;
            report["m"] = res.report.m;
            report["strategy"] = res.report.strategy;
            report["fixed_count"] = res.report.fixed_count;
            report["moved_count"] = res.report.moved_count;
            report["guarantee_num"] = res.report.guarantee_num;
            report["guarantee_den_sq"] = res.report.guarantee_den_sq;
            py::dict out;
            out["coords"] = from_drawing(res.d);
            out["fixed"] = res.fixed;
            out["report"] = report;
            return out;
        },
        py::arg("n"), py::arg("edges"), py::arg("coords"), py::arg("strategy") = "auto");

    m.def("crossing_count",
          [](int n, const std::vector<std::pair<int, int>>& edges,
             const std::vector<std::pair<std::string, std::string>>& coords) {
              Graph g(n, edges);
              return crossing_pairs(g, to_drawing(coords)).edge_pairs.size();
          });

    m.def("is_plane", [](int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<std::pair<std::string, std::string>>& coords) {
        Graph g(n, edges);
        return is_plane(g, to_drawing(coords));
    });

    m.def("sigma", &sigma, py::arg("q"));

    m.def(
        "longest_monotone",
        [](const std::vector<long long>& seq, const std::string& direction) {
            MonotoneResult r = longest_monotone(
                seq, direction == "dec" ? Direction::Decreasing : Direction::Increasing);
            return std::make_pair(r.length, r.witness);
        },
        py::arg("seq"), py::arg("direction") = "inc");

    m.def("guarantee_value", &guarantee_value, py::arg("num"), py::arg("den_sq"));
}
