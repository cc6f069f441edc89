#include "untangle/hardness.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"

namespace untangle {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw ParseError(line, msg);
}

}  // namespace

Formula3SAT parse_formula(std::istream& in) {
    Formula3SAT f;
    bool saw_header = false;
    int declared_clauses = 0;
    std::string line;
    int lineno = 0;
    std::vector<int> literals;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head == "p") {
            if (saw_header) parse_fail(lineno, "duplicate formula header");
            std::string kind;
            if (!(ls >> kind >> f.num_vars >> declared_clauses) || kind != "cnf3")
                parse_fail(lineno, "expected 'p cnf3 <vars> <clauses>'");
            if (f.num_vars < 0 || declared_clauses < 0)
                parse_fail(lineno, "negative counts in formula header");
            saw_header = true;
            continue;
        }
        if (!saw_header) parse_fail(lineno, "clause before formula header");
        // `head` is the first literal of the line; the rest follow.
        std::istringstream first(head);
        int lit;
        if (!(first >> lit) || !first.eof()) parse_fail(lineno, "bad literal '" + head + "'");
        literals.push_back(lit);
        while (ls >> lit) literals.push_back(lit);
        std::string junk;
        ls.clear();
        if (ls >> junk) parse_fail(lineno, "trailing junk '" + junk + "'");
    }
    if (!saw_header) parse_fail(lineno, "missing formula header");
    if (static_cast<int>(literals.size()) != 3 * declared_clauses)
        parse_fail(lineno, "expected " + std::to_string(3 * declared_clauses) +
                               " literals, found " + std::to_string(literals.size()));
    for (int c = 0; c < declared_clauses; ++c) {
        std::array<int, 3> cl{};
        for (int j = 0; j < 3; ++j) {
            int lit = literals[3 * c + j];
            if (lit == 0 || std::abs(lit) > f.num_vars)
                parse_fail(lineno, "literal out of range in clause " + std::to_string(c));
            cl[j] = lit;
        }
        f.clauses.push_back(cl);
    }
    return f;
}

CombLayout parse_layout(std::istream& in, int num_clauses) {
    CombLayout layout;
    layout.clauses.resize(num_clauses);
    std::vector<bool> seen(num_clauses, false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head == "c") continue;
        if (head != "l") parse_fail(lineno, "expected 'l <clause> <above|below> <depth>'");
        int idx = -1, depth = -1;
        std::string side;
        if (!(ls >> idx >> side >> depth)) parse_fail(lineno, "malformed layout line");
        std::string junk;
        if (ls >> junk) parse_fail(lineno, "trailing junk '" + junk + "'");
        if (idx < 0 || idx >= num_clauses)
            parse_fail(lineno, "clause index " + std::to_string(idx) + " out of range");
        if (side != "above" && side != "below") parse_fail(lineno, "side must be above or below");
        if (depth < 0) parse_fail(lineno, "depth must be nonnegative");
        if (seen[idx])
            throw LayoutInconsistentError("clause " + std::to_string(idx) + " placed twice");
        seen[idx] = true;
        layout.clauses[idx] = ClausePlacement{side == "above", depth};
    }
    for (int c = 0; c < num_clauses; ++c)
        if (!seen[c]) throw LayoutInconsistentError("clause " + std::to_string(c) + " not placed");
    return layout;
}

namespace {

// Incremental graph/drawing builder with per-gadget bookkeeping.
struct Builder {
    std::vector<std::pair<int, int>> edges;
    Drawing d;
    std::vector<bool> mobile;
    GadgetInfo* cur = nullptr;

    int v(Rat x, Rat y, bool mob = false) {
        d.push_back(Pt{std::move(x), std::move(y)});
        mobile.push_back(mob);
        int id = static_cast<int>(d.size()) - 1;
        if (cur) {
            cur->vertices.push_back(id);
            if (mob) cur->mobiles.push_back(id);
        }
        return id;
    }
    void e(int u, int w) {
        edges.emplace_back(u, w);
        if (cur) cur->edges.emplace_back(u, w);
    }
};

// One variable block centered at (cx, 0). The four mobile vertices weave
// into four crossings at (cx+-5, +-5); the side walls keep the block's
// column rigid while leaving the north and south windows open.
void emit_block(Builder& b, const Rat& cx, BlockInfo& info, int& sw_corner, int& se_corner) {
    auto P = [&](long dx, long dy) { return Pt{cx + dx, Rat(dy)}; };
    auto V = [&](long dx, long dy, bool mob = false) { return b.v(cx + dx, Rat(dy), mob); };

    info.a = V(0, -15, true);
    info.b = V(0, 15, true);
    info.c = V(-15, 0, true);
    info.d = V(15, 0, true);
    info.a_home = P(0, -15);
    info.b_home = P(0, 15);
    info.c_home = P(-15, 0);
    info.d_home = P(15, 0);
    info.a_target = P(0, -4);
    info.b_target = P(0, 4);
    info.c_target = P(-4, 0);
    info.d_target = P(4, 0);

    int AL = V(-7, -1), AR = V(7, -1);
    int BL = V(-7, 1), BR = V(7, 1);
    int CB = V(-1, -7), CT = V(-1, 7);
    int DB = V(1, -7), DT = V(1, 7);
    b.e(info.a, AL);
    b.e(info.a, AR);
    b.e(info.b, BL);
    b.e(info.b, BR);
    b.e(info.c, CB);
    b.e(info.c, CT);
    b.e(info.d, DB);
    b.e(info.d, DT);

    // Side walls: two chorded octagons open to the north and south.
    for (int side = 0; side < 2; ++side) {
        long s = side == 0 ? -1 : 1;
        int w1 = V(31 * s, -20), w2 = V(28 * s, -20), w3 = V(28 * s, -7), w4 = V(28 * s, 7);
        int w5 = V(28 * s, 20), w6 = V(31 * s, 20), w7 = V(31 * s, 7), w8 = V(31 * s, -7);
        int ring[8] = {w1, w2, w3, w4, w5, w6, w7, w8};
        for (int i = 0; i < 8; ++i) b.e(ring[i], ring[(i + 1) % 8]);
        b.e(w3, w8);
        b.e(w4, w7);
        (side == 0 ? sw_corner : se_corner) = w1;
    }
}

// Shared switch skeleton: a mobile over a beam, two fences pierced by the
// mobile's home edges, guard posts, hanging posts, and two stub arms whose
// reach is `arm`. `s` = +1 above the axis, -1 below.
void emit_switch_core(Builder& b, const Rat& cx, const Rat& base, long s, long arm,
                      SwitchInfo& info) {
    auto V = [&](long dx, long dy, bool mob = false) {
        return b.v(cx + dx, base + s * dy, mob);
    };
    auto P = [&](long dx, long dy) { return Pt{cx + dx, base + s * dy}; };

    info.mobile = V(0, 3, true);
    int L = V(-6, 0), R = V(6, 0);
    info.beam_l = L;
    info.beam_r = R;
    int P1 = V(-3, -1), Q1 = V(-3, 5), P2 = V(3, -1), Q2 = V(3, 5);
    int G1 = V(-1, 11), G2 = V(1, 11);
    int H1 = V(-1, -5), H2 = V(1, -5);
    int B1 = V(-arm + 4, 0), B2 = V(-arm, 0);
    int A1 = V(arm - 4, 0), A2 = V(arm, 0);
    b.e(info.mobile, L);
    b.e(info.mobile, R);
    b.e(P1, Q1);
    b.e(P2, Q2);
    b.e(L, P1);
    b.e(R, P2);
    b.e(L, G1);
    b.e(R, G2);
    b.e(L, H1);
    b.e(R, H2);
    b.e(L, B1);
    b.e(B1, B2);
    b.e(R, A1);
    b.e(A1, A2);

    info.home = P(0, 3);
    info.slot_toward = P(0, -8);
    info.slot_away = P(0, 12);
}

}  // namespace

GadgetInstance build_instance(const Formula3SAT& f, const CombLayout& layout) {
    const int C = static_cast<int>(f.clauses.size());
    if (static_cast<int>(layout.clauses.size()) != C)
        throw LayoutInconsistentError("layout covers " +
                                      std::to_string(layout.clauses.size()) + " clauses, formula has " +
                                      std::to_string(C));

    GadgetInstance inst;
    inst.formula = f;
    inst.layout = layout;
    inst.num_clauses = C;
    inst.X = 26L * C;
    inst.K = 13L * C;
    if (C == 0) return inst;

    // Assign block slots along the axis, grouped by variable so a variable's
    // occurrences sit side by side and can be chained together.
    const long pitch = 80;
    std::vector<std::vector<std::pair<int, int>>> occ(f.num_vars + 1);  // (clause, leg)
    for (int c = 0; c < C; ++c)
        for (int leg = 0; leg < 3; ++leg) occ[std::abs(f.clauses[c][leg])].push_back({c, leg});

    Builder b;
    std::vector<std::vector<Rat>> center(C, std::vector<Rat>(3));
    std::vector<std::vector<int>> block_of(C, std::vector<int>(3, -1));
    long slot = 0;
    for (int var = 1; var <= f.num_vars; ++var) {
        int prev_east = -1;
        for (auto [c, leg] : occ[var]) {
            Rat cx(pitch * slot++);
            inst.gadgets.push_back(GadgetInfo{"block", {}, {}, {}, 4});
            b.cur = &inst.gadgets.back();
            BlockInfo info;
            info.clause = c;
            info.leg = leg;
            info.var = var;
            info.negated = f.clauses[c][leg] < 0;
            int sw = -1, se = -1;
            emit_block(b, cx, info, sw, se);
            b.cur = nullptr;
            // Chain consecutive blocks of the same variable along the axis;
            // chain edges belong to no gadget.
            if (prev_east >= 0) b.e(prev_east, sw);
            prev_east = se;
            center[c][leg] = cx;
            block_of[c][leg] = static_cast<int>(inst.blocks.size());
            inst.blocks.push_back(info);
        }
    }

    // Laminar layout check on the clause intervals.
    std::vector<std::pair<Rat, Rat>> span(C);
    for (int c = 0; c < C; ++c) {
        auto [lo, hi] = std::minmax({center[c][0], center[c][1], center[c][2]});
        span[c] = {lo, hi};
    }
    for (int i = 0; i < C; ++i)
        for (int j = i + 1; j < C; ++j) {
            if (layout.clauses[i].above != layout.clauses[j].above) continue;
            const auto& [alo, ahi] = span[i];
            const auto& [blo, bhi] = span[j];
            if (ahi < blo || bhi < alo) continue;  // disjoint
            bool i_in_j = blo < alo && ahi < bhi;
            bool j_in_i = alo < blo && bhi < ahi;
            if (!i_in_j && !j_in_i)
                throw LayoutInconsistentError("clauses " + std::to_string(i) + " and " +
                                              std::to_string(j) + " interleave on the same side");
            int inner = i_in_j ? i : j, outer = i_in_j ? j : i;
            if (layout.clauses[inner].depth <= layout.clauses[outer].depth)
                throw LayoutInconsistentError("clause " + std::to_string(inner) +
                                              " is nested inside clause " + std::to_string(outer) +
                                              " but is not strictly deeper");
        }

    // Strip heights: deeper (more nested) clauses sit closer to the axis.
    int max_depth = 0;
    for (const auto& p : layout.clauses) max_depth = std::max(max_depth, p.depth);
    auto strip_base = [&](int c) { return Rat(60 + 70L * (max_depth - layout.clauses[c].depth)); };

    for (int c = 0; c < C; ++c) {
        long s = layout.clauses[c].above ? 1 : -1;
        Rat base = strip_base(c);

        // Literal switches over the three blocks, on the clause's side.
        for (int leg = 0; leg < 3; ++leg) {
            inst.gadgets.push_back(GadgetInfo{"switch2", {}, {}, {}, 2});
            b.cur = &inst.gadgets.back();
            SwitchInfo sw;
            sw.kind = SwitchKind::Literal;
            sw.clause = c;
            sw.index = leg;
            emit_switch_core(b, center[c][leg], Rat(22L * s), s, 14, sw);
            b.cur = nullptr;
            inst.switches.push_back(sw);
        }

        // Gap switches between consecutive legs (sorted by position).
        std::array<int, 3> order{0, 1, 2};
        std::sort(order.begin(), order.end(),
                  [&](int x, int y) { return center[c][x] < center[c][y]; });
        for (int g = 0; g < 2; ++g) {
            Rat mx = (center[c][order[g]] + center[c][order[g + 1]]) / 2;

            inst.gadgets.push_back(GadgetInfo{"switch3", {}, {}, {}, 2});
            b.cur = &inst.gadgets.back();
            SwitchInfo sw3;
            sw3.kind = SwitchKind::Three;
            sw3.clause = c;
            sw3.index = g;
            emit_switch_core(b, mx, s * base, s, 22, sw3);
            // Side park slots confined between two-vertex bars above the arms.
            for (long bx : {-20L, -16L, 16L, 20L}) {
                int lo = b.v(mx + bx, s * (base + 46));
                int hi = b.v(mx + bx, s * (base + 50));
                b.e(lo, hi);
            }
            sw3.slot_left = Pt{mx - 18, s * (base + 48)};
            sw3.slot_right = Pt{mx + 18, s * (base + 48)};
            b.cur = nullptr;
            inst.switches.push_back(sw3);

            inst.gadgets.push_back(GadgetInfo{"inner2", {}, {}, {}, 2});
            b.cur = &inst.gadgets.back();
            SwitchInfo swi;
            swi.kind = SwitchKind::Inner;
            swi.clause = c;
            swi.index = g;
            emit_switch_core(b, mx + 40, s * base, s, 14, swi);
            b.cur = nullptr;
            inst.switches.push_back(swi);
        }
    }

    inst.g = Graph(static_cast<int>(b.d.size()), b.edges);
    inst.d = std::move(b.d);
    inst.mobile = std::move(b.mobile);
    return inst;
}

namespace {

[[noreturn]] void audit_fail(const std::string& msg) { throw AuditFailureError(msg); }

// Literal value of clause leg under "pair {a,b} moved" semantics.
bool literal_true(const GadgetInstance& inst, const std::vector<bool>& assignment, int c,
                  int leg) {
    for (const auto& blk : inst.blocks)
        if (blk.clause == c && blk.leg == leg)
            return blk.negated ? !assignment[blk.var] : assignment[blk.var];
    throw VertexMismatchError("no block for clause " + std::to_string(c) + " leg " +
                              std::to_string(leg));
}

const BlockInfo& block_at(const GadgetInstance& inst, int c, int leg) {
    for (const auto& blk : inst.blocks)
        if (blk.clause == c && blk.leg == leg) return blk;
    throw VertexMismatchError("no block for clause " + std::to_string(c) + " leg " +
                              std::to_string(leg));
}

}  // namespace

AuditReport structural_audit(const GadgetInstance& inst) {
    AuditReport rep;
    rep.num_blocks = static_cast<long>(inst.blocks.size());
    rep.num_switches = static_cast<long>(inst.switches.size());
    if (rep.num_blocks != 3 * inst.num_clauses)
        audit_fail("expected 3 blocks per clause, found " + std::to_string(rep.num_blocks));
    if (rep.num_switches != 7 * inst.num_clauses)
        audit_fail("expected 7 switches per clause, found " + std::to_string(rep.num_switches));

    CrossingReport cr = crossing_pairs(inst.g, inst.d);
    if (!cr.vertex_on_edge.empty()) audit_fail("vertex lies on a non-incident edge");
    if (!cr.coincident_vertices.empty()) audit_fail("coincident vertices in the home drawing");
    rep.crossings = static_cast<long>(cr.edge_pairs.size());
    if (rep.crossings != inst.X)
        audit_fail("home drawing has " + std::to_string(rep.crossings) + " crossings, expected " +
                   std::to_string(inst.X));

    // Map normalized edge pairs to indices in the graph's edge list.
    std::map<std::pair<int, int>, int> index_of;
    for (int i = 0; i < inst.g.m(); ++i) index_of[inst.g.edges[i]] = i;
    auto edge_index = [&](std::pair<int, int> e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        auto it = index_of.find(e);
        if (it == index_of.end()) audit_fail("gadget edge missing from graph");
        return it->second;
    };

    std::set<int> crossing_edges;
    for (auto [i, j] : cr.edge_pairs) {
        crossing_edges.insert(i);
        crossing_edges.insert(j);
    }

    // Per-gadget counts and induced crossings.
    static const std::map<std::string, std::pair<int, int>> shape = {
        {"block", {28, 28}}, {"switch2", {15, 14}}, {"switch3", {23, 18}}, {"inner2", {15, 14}}};
    long accounted = 0;
    for (const auto& gad : inst.gadgets) {
        auto [nv, ne] = shape.at(gad.kind);
        if (static_cast<int>(gad.vertices.size()) != nv ||
            static_cast<int>(gad.edges.size()) != ne)
            audit_fail(gad.kind + " has " + std::to_string(gad.vertices.size()) + " vertices / " +
                       std::to_string(gad.edges.size()) + " edges, expected " +
                       std::to_string(nv) + "/" + std::to_string(ne));
        std::set<int> mine;
        for (const auto& e : gad.edges) mine.insert(edge_index(e));
        long induced = 0;
        for (auto [i, j] : cr.edge_pairs)
            if (mine.count(i) && mine.count(j)) ++induced;
        if (induced != gad.expected_crossings)
            audit_fail(gad.kind + " induces " + std::to_string(induced) +
                       " crossings, expected " + std::to_string(gad.expected_crossings));
        accounted += induced;
    }
    if (accounted != rep.crossings) audit_fail("crossings between distinct gadgets");

    // Mobility pattern: each mobile vertex has exactly two incident edges and
    // both cross something; no immobile vertex touches two crossing edges.
    std::vector<int> touched(inst.g.n, 0);
    auto adj = inst.g.adjacency();
    for (int ei : crossing_edges) {
        ++touched[inst.g.edges[ei].first];
        ++touched[inst.g.edges[ei].second];
    }
    for (int v = 0; v < inst.g.n; ++v) {
        if (inst.mobile[v]) {
            if (adj[v].size() != 2 || touched[v] != 2)
                audit_fail("mobile vertex " + std::to_string(v) +
                           " is not the apex of exactly two crossing edges");
        } else if (touched[v] >= 2) {
            audit_fail("immobile vertex " + std::to_string(v) + " touches two crossing edges");
        }
    }

    // Pressure interface: each literal switch's variable-side slot is blocked
    // by the block pair's home edges and released once the pair moves.
    for (const auto& sw : inst.switches) {
        if (sw.kind != SwitchKind::Literal) continue;
        const BlockInfo& blk = block_at(inst, sw.clause, sw.index);
        bool above = sw.home.y > 0;
        int near_mobile = above ? blk.b : blk.a;
        const Pt& home = above ? blk.b_home : blk.a_home;
        const Pt& target = above ? blk.b_target : blk.a_target;
        std::array<Pt, 2> probes = {inst.d[sw.beam_l], inst.d[sw.beam_r]};
        bool blocked = false, released = true;
        for (int anchor : adj[near_mobile]) {
            for (const Pt& beam : probes) {
                if (segments_cross(sw.slot_toward, beam, home, inst.d[anchor])) blocked = true;
                if (segments_cross(sw.slot_toward, beam, target, inst.d[anchor]))
                    released = false;
            }
        }
        if (!blocked)
            audit_fail("literal switch at clause " + std::to_string(sw.clause) + " leg " +
                       std::to_string(sw.index) + " is not blocked in the home state");
        if (!released)
            audit_fail("literal switch at clause " + std::to_string(sw.clause) + " leg " +
                       std::to_string(sw.index) + " stays blocked after the pair moves");
    }

    rep.ok = true;
    return rep;
}

Drawing untangle_with_assignment(const GadgetInstance& inst,
                                 const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) < inst.formula.num_vars + 1)
        throw VertexMismatchError("assignment covers fewer variables than the formula");
    for (int c = 0; c < static_cast<int>(inst.formula.clauses.size()); ++c) {
        bool sat = false;
        for (int leg = 0; leg < 3; ++leg) sat = sat || literal_true(inst, assignment, c, leg);
        if (!sat)
            throw UnsatisfiedError("assignment falsifies clause " + std::to_string(c));
    }

    Drawing out = inst.d;
    long moved = 0;
    for (const auto& blk : inst.blocks) {
        bool lit = blk.negated ? !assignment[blk.var] : assignment[blk.var];
        if (lit) {
            out[blk.a] = blk.a_target;
            out[blk.b] = blk.b_target;
        } else {
            out[blk.c] = blk.c_target;
            out[blk.d] = blk.d_target;
        }
        moved += 2;
    }
    for (const auto& sw : inst.switches) {
        switch (sw.kind) {
            case SwitchKind::Literal:
                out[sw.mobile] = literal_true(inst, assignment, sw.clause, sw.index)
                                     ? sw.slot_toward
                                     : sw.slot_away;
                break;
            case SwitchKind::Three: {
                // Park beside whichever adjacent leg released its window;
                // if neither did, retreat to the clause side.
                std::array<int, 3> order{0, 1, 2};
                std::sort(order.begin(), order.end(), [&](int x, int y) {
                    return block_at(inst, sw.clause, x).a_home.x <
                           block_at(inst, sw.clause, y).a_home.x;
                });
                int left = order[sw.index], right = order[sw.index + 1];
                if (literal_true(inst, assignment, sw.clause, left))
                    out[sw.mobile] = sw.slot_left;
                else if (literal_true(inst, assignment, sw.clause, right))
                    out[sw.mobile] = sw.slot_right;
                else
                    out[sw.mobile] = sw.slot_away;
                break;
            }
            case SwitchKind::Inner:
                out[sw.mobile] = sw.slot_away;
                break;
        }
        moved += 1;
    }
    if (moved != inst.K)
        throw PlacementBlockedError("moved " + std::to_string(moved) + " vertices, expected " +
                                    std::to_string(inst.K));
    if (!is_plane(inst.g, out))
        throw PlacementBlockedError("assignment placement leaves a crossing");
    return out;
}

}  // namespace untangle
