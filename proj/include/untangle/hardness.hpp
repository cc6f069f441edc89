#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "untangle/graph.hpp"
#include "untangle/rat.hpp"

namespace untangle {

// A 3-CNF formula: each clause holds exactly three nonzero literals,
// literal +v / -v for variable v in 1..num_vars.
struct Formula3SAT {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Where each clause's comb sits relative to the variable axis.
struct ClausePlacement {
    bool above = true;
    int depth = 0;
};

struct CombLayout {
    std::vector<ClausePlacement> clauses;  // one entry per clause
};

// Text formats:
//   formula:  "c ..." comments, "p cnf3 <vars> <clauses>",
//             then one line of three signed ints per clause
//   layout:   "c ..." comments, "l <clause-index> <above|below> <depth>"
Formula3SAT parse_formula(std::istream& in);
CombLayout parse_layout(std::istream& in, int num_clauses);

// One variable block (one per literal occurrence): a 28-vertex / 28-edge
// gadget whose four mobile vertices weave into four crossings. Releasing
// the window toward the clause means moving the vertical pair {a, b}; this
// happens exactly when the block's literal is true.
struct BlockInfo {
    int clause = 0, leg = 0;   // which clause and literal slot (0..2)
    int var = 0;               // variable index
    bool negated = false;      // literal sign
    int a = 0, b = 0, c = 0, d = 0;  // mobile vertex ids
    Pt a_home, b_home, c_home, d_home;
    Pt a_target, b_target, c_target, d_target;
};

enum class SwitchKind { Literal, Three, Inner };

// A pressure switch: one mobile vertex whose two incident edges cross the
// two fence edges at its home position; the predestined slots clear both.
struct SwitchInfo {
    SwitchKind kind = SwitchKind::Literal;
    int clause = 0;
    int index = 0;  // leg for Literal, gap index (0/1) for Three/Inner
    int mobile = 0;
    int beam_l = 0, beam_r = 0;  // beam endpoints (edges from the slots)
    Pt home, slot_toward, slot_away;
    Pt slot_left, slot_right;  // extra park slots (Three only)
};

// Bookkeeping for per-gadget audits.
struct GadgetInfo {
    std::string kind;  // "block", "switch2", "switch3", "inner2"
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> mobiles;
    int expected_crossings = 0;
};

struct GadgetInstance {
    Graph g;
    Drawing d;
    Formula3SAT formula;
    CombLayout layout;
    std::vector<bool> mobile;  // per vertex
    long num_clauses = 0;
    long X = 0;  // 26 * num_clauses
    long K = 0;  // X / 2
    std::vector<BlockInfo> blocks;
    std::vector<SwitchInfo> switches;
    std::vector<GadgetInfo> gadgets;
};

// Build G_phi and delta_phi from a laid-out formula.
// Throws LayoutInconsistentError if the layout does not cover the clauses,
// or same-side clause intervals cross (neither nested nor disjoint), or a
// nested clause is not strictly deeper than its container.
GadgetInstance build_instance(const Formula3SAT& f, const CombLayout& layout);

struct AuditReport {
    long crossings = 0;
    long num_blocks = 0, num_switches = 0;
    bool ok = false;
};

// Verifies: total crossing count X = 26C; per-gadget vertex/edge/crossing
// counts (block 28/28/4, 2-switch 15/14/2, 3-switch 23/18/2, inner 15/14/2);
// every mobile vertex is incident to two crossing edges and no immobile
// vertex is; and the pressure interface: each literal switch's variable-side
// slot is blocked (its probe edges cross the block pair's home edges) and
// released once the pair moves to its targets.
// Throws AuditFailureError naming the first violated check.
AuditReport structural_audit(const GadgetInstance& inst);

// Untangle using a satisfying assignment (assignment[v] for v in 1..V;
// index 0 ignored). Moves exactly K mobile vertices to their predestined
// positions and returns the plane drawing.
// Throws UnsatisfiedError if the assignment does not satisfy the formula,
// PlacementBlockedError if the resulting drawing is not plane.
Drawing untangle_with_assignment(const GadgetInstance& inst,
                                 const std::vector<bool>& assignment);

}  // namespace untangle
