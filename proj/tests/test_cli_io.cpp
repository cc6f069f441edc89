#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "untangle/errors.hpp"
#include "untangle/io.hpp"
#include "untangle/pipeline.hpp"

using namespace untangle;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(UNTANGLE_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[512];
    while (size_t k = fread(buf, 1, sizeof buf, p)) out.append(buf, k);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path tmp_dir() {
    auto d = std::filesystem::temp_directory_path() / "untangle_cli_test";
    std::filesystem::create_directories(d);
    return d;
}

const char* kGraphText =
    "# crossed K4\n"
    "n 4\n"
    "v 0 0 0\n"
    "v 1 4 0\n"
    "v 2 2 3\n"
    "v 3 3 4\n"
    "e 0 1\n"
    "e 0 2\n"
    "e 0 3\n"
    "e 1 2\n"
    "e 1 3\n"
    "e 2 3\n";

}  // namespace

TEST_CASE("graph file parse/serialize round-trip") {
    std::istringstream in(kGraphText);
    GraphFile gf = parse_graph_file(in);
    CHECK(gf.g.n == 4);
    CHECK(gf.g.m() == 6);
    CHECK(gf.d[3].x == parse_rat("3"));
    CHECK(gf.comments.size() == 1);
    std::ostringstream out;
    serialize_graph_file(gf, out);
    std::istringstream in2(out.str());
    GraphFile gf2 = parse_graph_file(in2);
    CHECK(gf2.g.edges == gf.g.edges);
    CHECK(gf2.d == gf.d);
    CHECK(gf2.comments == gf.comments);
    std::ostringstream out2;
    serialize_graph_file(gf2, out2);
    CHECK(out.str() == out2.str());  // canonical form is a fixed point

    // Rational coordinates and mobile annotations survive.
    GraphFile gm;
    gm.g = Graph(2, {{0, 1}});
    gm.d = {{parse_rat("-1/3"), parse_rat("22/7")}, {parse_rat("0"), parse_rat("5")}};
    gm.mobile = {true, false};
    std::ostringstream o3;
    serialize_graph_file(gm, o3);
    std::istringstream i3(o3.str());
    GraphFile gm2 = parse_graph_file(i3);
    CHECK(gm2.d == gm.d);
    CHECK(gm2.mobile == gm.mobile);
}

TEST_CASE("graph file parse errors carry line information") {
    auto parse = [](const char* text) {
        std::istringstream in(text);
        return parse_graph_file(in);
    };
    CHECK_THROWS_AS(parse("n 2\nv 0 0 0\nv 0 1 1\ne 0 1\n"), DuplicateVertexError);
    CHECK_THROWS_AS(parse("n 2\nv 0 0 0\nv 1 1 1\ne 0 5\n"), DanglingEdgeError);
    CHECK_THROWS_AS(parse("n 2\nv 0 0 0\ne 0 1\n"), ParseError);  // vertex 1 undefined
    CHECK_THROWS_AS(parse("n x\n"), ParseError);
    CHECK_THROWS_AS(parse("n 1\nv 0 1/0 0\n"), ParseError);
    try {
        parse("n 1\nv 0 zzz 0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("SVG rendering is well-formed and marks fixed vertices") {
    std::istringstream in(kGraphText);
    GraphFile gf = parse_graph_file(in);
    SvgOptions opt;
    opt.fixed = {true, true, false, false};
    std::string svg = render_svg(gf.g, gf.d, opt);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("viewBox") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    size_t lines = 0, circles = 0;
    for (size_t p = svg.find("<line"); p != std::string::npos; p = svg.find("<line", p + 1)) ++lines;
    for (size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1))
        ++circles;
    CHECK(lines == 6);
    CHECK(circles == 4);
}

TEST_CASE("fix report serializes all fields to JSON") {
    FixReport rep;
    rep.n = 10;
    rep.m = 24;
    rep.strategy = "fan";
    rep.fixed_count = 3;
    std::string j = report_to_json(rep);
    for (const char* key : {"\"n\"", "\"m\"", "\"strategy\"", "\"l\"", "\"i_size\"",
                            "\"fixed_count\"", "\"moved_count\"", "\"guarantee_num\"",
                            "\"guarantee_den_sq\"", "\"max_coord_bits\"", "\"runtime_ms\""})
        CHECK(j.find(key) != std::string::npos);
    CHECK(j.find("\"fan\"") != std::string::npos);
}

TEST_CASE("cli untangle round trip") {
    auto dir = tmp_dir();
    auto input = dir / "k4.graph";
    std::ofstream(input) << kGraphText;
    auto output = dir / "k4.out.graph";
    auto report = dir / "k4.json";
    auto svg = dir / "k4.svg";
    auto r = run_cli("untangle --input " + input.string() + " --output " + output.string() +
                     " --report " + report.string() + " --svg-after " + svg.string());
    CHECK(r.exit_code == 0);
    GraphFile gf = load_graph_file(output.string());
    CHECK(gf.g.n == 4);
    std::ifstream rep(report);
    std::stringstream js;
    js << rep.rdbuf();
    CHECK(js.str().find("\"fixed_count\"") != std::string::npos);
    std::ifstream sv(svg);
    std::stringstream svs;
    svs << sv.rdbuf();
    CHECK(svs.str().find("<svg") != std::string::npos);
}

TEST_CASE("cli crossings and render") {
    auto dir = tmp_dir();
    auto input = dir / "k4b.graph";
    std::ofstream(input) << kGraphText;
    auto r = run_cli("crossings --input " + input.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1") != std::string::npos);
    auto svg = dir / "k4b.svg";
    auto r2 = run_cli("render --input " + input.string() + " --svg " + svg.string());
    CHECK(r2.exit_code == 0);
    CHECK(std::filesystem::exists(svg));
}

TEST_CASE("cli generate families produce loadable files") {
    auto dir = tmp_dir();
    for (const char* fam : {"planar-worstcase", "outerplanar-worstcase", "pathological"}) {
        auto f = dir / (std::string(fam) + ".graph");
        auto r = run_cli(std::string("generate --family ") + fam + " --q 3 --output " + f.string());
        CHECK(r.exit_code == 0);
        GraphFile gf = load_graph_file(f.string());
        CHECK(gf.g.n > 0);
    }
    auto sf = dir / "sigma.txt";
    auto r = run_cli("generate --family sigma --q 3 --output " + sf.string());
    CHECK(r.exit_code == 0);
}

TEST_CASE("cli exit codes distinguish usage errors from contract violations") {
    CHECK(run_cli("untangle --no-such-flag").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    auto dir = tmp_dir();
    auto bad = dir / "bad.graph";
    std::ofstream(bad) << "n 2\nv 0 0 0\nv 1 1/0 0\ne 0 1\n";
    CHECK(run_cli("untangle --input " + bad.string()).exit_code == 2);
    // Non-planar input: a contract violation, not a usage error.
    auto k5 = dir / "k5.graph";
    {
        std::ofstream o(k5);
        o << "n 5\n";
        for (int i = 0; i < 5; ++i) o << "v " << i << " " << i << " " << i * i << "\n";
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) o << "e " << i << " " << j << "\n";
    }
    CHECK(run_cli("untangle --input " + k5.string()).exit_code == 1);
}
