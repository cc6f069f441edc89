#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"
#include "untangle/hardness.hpp"
#include "untangle/instances.hpp"
#include "untangle/io.hpp"
#include "untangle/oracles.hpp"
#include "untangle/pipeline.hpp"
#include "untangle/star_fill.hpp"
#include "untangle/untangle_core.hpp"
#include "untangle/worstcase.hpp"

namespace {

using namespace untangle;

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << text;
}

std::vector<long long> load_sequence(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<long long> seq;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        long long v;
        while (ls >> v) seq.push_back(v);
    }
    return seq;
}

int cmd_untangle(const std::string& input, const std::string& output, const std::string& report,
                 const std::string& strategy, const std::string& svg_before,
                 const std::string& svg_after) {
    GraphFile gf = load_graph_file(input);
    UntangleResult res = ::untangle::untangle(gf.g, gf.d, strategy);
    std::vector<bool> fixed(gf.g.n, false);
    for (int v : res.fixed) fixed[v] = true;
    if (!output.empty()) {
        GraphFile out = gf;
        out.d = res.d;
        save_graph_file(out, output);
    }
    if (!report.empty()) write_text(report, report_to_json(res.report));
    if (!svg_before.empty()) write_text(svg_before, render_svg(gf.g, gf.d, {6, fixed}));
    if (!svg_after.empty()) write_text(svg_after, render_svg(gf.g, res.d, {6, fixed}));
    std::cout << "n=" << res.report.n << " strategy=" << res.report.strategy
              << " fixed=" << res.report.fixed_count << " moved=" << res.report.moved_count
              << "\n";
    return 0;
}

int cmd_generate(const std::string& family, int q, const std::string& formula_path,
                 const std::string& layout_path, const std::string& output) {
    std::ostringstream out;
    if (family == "sigma") {
        out << "# family: sigma q=" << q << "\n";
        for (int v : sigma(q)) out << v << "\n";
        write_text(output, out.str());
        return 0;
    }
    GraphFile gf;
    if (family == "planar-worstcase") {
        WorstcaseInstance wi = planar_worstcase(q);
        gf.g = wi.g;
        gf.d = wi.d;
        gf.comments = {"family: planar-worstcase q=" + std::to_string(q)};
    } else if (family == "outerplanar-worstcase") {
        WorstcaseInstance wi = outerplanar_worstcase(q);
        gf.g = wi.g;
        gf.d = wi.d;
        gf.comments = {"family: outerplanar-worstcase q=" + std::to_string(q)};
    } else if (family == "pathological") {
        PathologicalInstance pi = pathological_instance(q);
        gf.g = pi.g;
        gf.d = pi.d;
        gf.comments = {"family: pathological k=" + std::to_string(q)};
    } else if (family == "hardness") {
        if (formula_path.empty() || layout_path.empty())
            throw CLI::ValidationError("generate", "--family hardness needs --formula and --layout");
        std::ifstream fin(formula_path), lin(layout_path);
        if (!fin) throw ParseError("cannot open '" + formula_path + "'");
        if (!lin) throw ParseError("cannot open '" + layout_path + "'");
        Formula3SAT f = parse_formula(fin);
        CombLayout layout = parse_layout(lin, static_cast<int>(f.clauses.size()));
        GadgetInstance inst = build_instance(f, layout);
        gf.g = inst.g;
        gf.d = inst.d;
        gf.mobile = inst.mobile;
        gf.comments = {"family: hardness clauses=" + std::to_string(inst.num_clauses)};
    } else {
        throw CLI::ValidationError("generate", "unknown family '" + family + "'");
    }
    std::ofstream fout(output);
    if (!fout) throw ParseError("cannot open '" + output + "' for writing");
    serialize_graph_file(gf, fout);
    return 0;
}

int fail(const std::string& msg) {
    std::cerr << "verify: " << msg << "\n";
    return 1;
}

int verify_geom() {
    if (orient(Pt{Rat(0), Rat(0)}, Pt{Rat(1), Rat(0)}, Pt{Rat(0), Rat(1)}) != 1)
        return fail("orient sign convention");
    if (!segments_cross(Pt{Rat(0), Rat(0)}, Pt{Rat(2), Rat(2)}, Pt{Rat(0), Rat(2)},
                        Pt{Rat(2), Rat(0)}))
        return fail("proper crossing not detected");
    if (segments_cross(Pt{Rat(0), Rat(0)}, Pt{Rat(1), Rat(0)}, Pt{Rat(1), Rat(0)},
                       Pt{Rat(2), Rat(1)}))
        return fail("shared endpoint counted as crossing");
    std::vector<Pt> poly = {Pt{Rat(0), Rat(0)}, Pt{Rat(4), Rat(0)}, Pt{Rat(4), Rat(4)},
                            Pt{Rat(0), Rat(4)}};
    if (!polygon_kernel(poly)) return fail("square kernel missing");
    std::cout << "geom checks passed\n";
    return 0;
}

int verify_sigma(int qmax) {
    for (int q = 1; q <= qmax; ++q) {
        std::vector<int> s = sigma(q);
        std::vector<long long> seq(s.begin(), s.end());
        if (longest_monotone(seq, Direction::Increasing).length != q)
            return fail("LIS(sigma_" + std::to_string(q) + ") != q");
        if (longest_monotone(seq, Direction::Decreasing).length != q)
            return fail("LDS(sigma_" + std::to_string(q) + ") != q");
        if (q <= 12) {
            for (Direction dir : {Direction::Increasing, Direction::Decreasing})
                if (max_separated_pair(seq, dir).size > q + 1)
                    return fail("separated pair bound violated at q=" + std::to_string(q));
        }
    }
    std::cout << "sigma observations hold for q <= " << qmax << "\n";
    return 0;
}

int verify_chords(long cases, std::uint64_t seed) {
    Rng rng(seed);
    for (long i = 0; i < cases; ++i) {
        int l = std::uniform_int_distribution<int>(4, 40)(rng);
        ChordInstance ci = random_chord_instance(l, rng);
        LowerChordsResult res = lower_chords(ci.d, ci.path, ci.chords, ci.vstar);
        std::vector<std::pair<int, int>> es;
        for (int j = 0; j + 1 < l; ++j) es.push_back({j, j + 1});
        for (auto c : ci.chords) es.push_back(c);
        Graph sk(l, es);
        if (!is_plane(sk, res.d)) return fail("chord lowering left a crossing");
    }
    std::cout << cases << " chord-lowering cases passed\n";
    return 0;
}

int verify_starfill(long cases, std::uint64_t seed) {
    Rng rng(seed);
    for (long i = 0; i < cases; ++i) {
        StarFillInstance si = random_star_fill_instance(30, rng);
        Drawing d = si.d;
        fill_star_polygon(si.g, d, si.task);
        if (!is_plane(si.g, d)) return fail("star fill left a crossing");
        for (int v : si.task.boundary)
            if (d[v] != si.d[v]) return fail("star fill moved a boundary vertex");
    }
    std::cout << cases << " star-fill cases passed\n";
    return 0;
}

int verify_pipeline(long cases, std::uint64_t seed) {
    Rng rng(seed);
    for (long i = 0; i < cases; ++i) {
        int n = std::uniform_int_distribution<int>(6, 60)(rng);
        Graph g = random_triangulation(n, rng);
        Drawing d = random_drawing(n, rng);
        UntangleResult res = ::untangle::untangle(g, d);
        if (!is_plane(g, res.d)) return fail("untangle output not plane");
        long k = guarantee_value(res.report.guarantee_num, res.report.guarantee_den_sq);
        if (res.report.fixed_count < k) return fail("fixed count below certified guarantee");
    }
    std::cout << cases << " pipeline cases passed\n";
    return 0;
}

int verify_hardness() {
    Formula3SAT f;
    f.num_vars = 9;
    f.clauses = {{1, -2, 3}, {4, 5, -6}, {-7, 8, 9}};
    for (int c = 1; c <= 3; ++c) {
        Formula3SAT sub;
        sub.num_vars = f.num_vars;
        sub.clauses.assign(f.clauses.begin(), f.clauses.begin() + c);
        CombLayout layout;
        for (int i = 0; i < c; ++i) layout.clauses.push_back({i % 2 == 0, 0});
        GadgetInstance inst = build_instance(sub, layout);
        AuditReport rep = structural_audit(inst);
        if (rep.crossings != 26L * c) return fail("hardness crossing count");
        Drawing solved = untangle_with_assignment(inst, std::vector<bool>(10, true));
        if (!is_plane(inst.g, solved)) return fail("hardness assignment drawing not plane");
    }
    std::cout << "hardness audits passed for C in {1,2,3}\n";
    return 0;
}

int cmd_crossings(const std::string& input) {
    GraphFile gf = load_graph_file(input);
    CrossingReport cr = crossing_pairs(gf.g, gf.d);
    std::cout << cr.edge_pairs.size() << "\n";
    return 0;
}

int cmd_oracle(const std::string& op, const std::string& input, const std::string& direction) {
    Direction dir = direction == "dec" ? Direction::Decreasing : Direction::Increasing;
    if (op == "lis") {
        MonotoneResult res = longest_monotone(load_sequence(input), dir);
        std::cout << res.length << "\n";
        return 0;
    }
    if (op == "separated") {
        SeparatedResult res = max_separated_pair(load_sequence(input), dir);
        std::cout << res.size << "\n";
        return 0;
    }
    if (op == "fixsearch") {
        GraphFile gf = load_graph_file(input);
        FixSearchResult res = small_fix_search(gf.g, gf.d);
        std::cout << "{\"heuristic\": true, \"fix_lower_bound\": " << res.best_fixed << "}\n";
        return 0;
    }
    throw CLI::ValidationError("oracle", "unknown op '" + op + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar drawing untangler"};
    app.require_subcommand(1);

    std::string input, output, report, strategy = "auto", svg_before, svg_after;
    auto* cu = app.add_subcommand("untangle", "untangle a drawing");
    cu->add_option("--input", input)->required();
    cu->add_option("--output", output);
    cu->add_option("--report", report);
    cu->add_option("--strategy", strategy)->check(CLI::IsMember({"auto", "fan", "diameter"}));
    cu->add_option("--svg-before", svg_before);
    cu->add_option("--svg-after", svg_after);

    std::string family, formula_path, layout_path, gen_output;
    int q = 3;
    auto* cg = app.add_subcommand("generate", "generate a named instance family");
    cg->add_option("--family", family)->required();
    cg->add_option("--q", q);
    cg->add_option("--formula", formula_path);
    cg->add_option("--layout", layout_path);
    cg->add_option("--output", gen_output)->required();

    std::string suite;
    int qmax = 12;
    std::uint64_t seed = 1;
    long cases = 100;
    auto* cv = app.add_subcommand("verify", "run a verification suite");
    cv->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"geom", "sigma", "chords", "starfill", "pipeline", "hardness"}));
    cv->add_option("--qmax", qmax);
    cv->add_option("--seed", seed);
    cv->add_option("--cases", cases);

    std::string cr_input;
    auto* cc = app.add_subcommand("crossings", "count crossings in a drawing");
    cc->add_option("--input", cr_input)->required();

    std::string op, or_input, direction = "inc";
    auto* co = app.add_subcommand("oracle", "run a brute-force oracle");
    co->add_option("--op", op)->required()->check(CLI::IsMember({"lis", "separated", "fixsearch"}));
    co->add_option("--input", or_input)->required();
    co->add_option("--direction", direction)->check(CLI::IsMember({"inc", "dec"}));

    std::string r_input, r_svg;
    int precision = 6;
    auto* cr = app.add_subcommand("render", "render a drawing to SVG");
    cr->add_option("--input", r_input)->required();
    cr->add_option("--svg", r_svg)->required();
    cr->add_option("--precision", precision);

    try {
        app.parse(argc, argv);
        if (cu->parsed())
            return cmd_untangle(input, output, report, strategy, svg_before, svg_after);
        if (cg->parsed()) return cmd_generate(family, q, formula_path, layout_path, gen_output);
        if (cv->parsed()) {
            if (suite == "geom") return verify_geom();
            if (suite == "sigma") return verify_sigma(qmax);
            if (suite == "chords") return verify_chords(cases, seed);
            if (suite == "starfill") return verify_starfill(cases, seed);
            if (suite == "pipeline") return verify_pipeline(cases, seed);
            return verify_hardness();
        }
        if (cc->parsed()) return cmd_crossings(cr_input);
        if (co->parsed()) return cmd_oracle(op, or_input, direction);
        if (cr->parsed()) {
            GraphFile gf = load_graph_file(r_input);
            write_text(r_svg, render_svg(gf.g, gf.d, {precision, {}}));
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
