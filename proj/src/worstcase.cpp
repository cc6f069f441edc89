#include "untangle/worstcase.hpp"

#include <stdexcept>

#include "untangle/errors.hpp"
#include "untangle/geometry.hpp"

namespace untangle {

std::vector<int> sigma(int q) {
    if (q < 1) throw std::invalid_argument("sigma: q must be >= 1");
    std::vector<int> out;
    out.reserve(static_cast<size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = q - 1; j >= 0; --j) out.push_back(j * q + i);
    return out;
}

namespace {

// Path 0..path_n-1 plus `extras` universal vertices appended after it.
Graph path_plus_universal(int path_n, int extras) {
    Graph g;
    g.n = path_n + extras;
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v + 1 < path_n; ++v) es.emplace_back(v, v + 1);
    for (int e = 0; e < extras; ++e)
        for (int v = 0; v < path_n; ++v) es.emplace_back(path_n + e, v);
    for (int e = 0; e + 1 < extras; ++e)
        for (int f = e + 1; f < extras; ++f)
            es.emplace_back(path_n + e, path_n + f);
    return Graph(g.n, es);
}

// position[v] = index of vertex v in sigma(q)
std::vector<int> sigma_positions(int q) {
    auto s = sigma(q);
    std::vector<int> pos(s.size());
    for (size_t p = 0; p < s.size(); ++p) pos[s[p]] = static_cast<int>(p);
    return pos;
}

}  // namespace

WorstcaseInstance planar_worstcase(int q) {
    if (q < 1) throw std::invalid_argument("planar_worstcase: q must be >= 1");
    const int nn = q * q;
    WorstcaseInstance inst;
    inst.g = path_plus_universal(nn, 2);
    inst.d.resize(nn + 2);
    auto pos = sigma_positions(q);
    for (int v = 0; v < nn; ++v) inst.d[v] = Pt{Rat(0), Rat(nn - pos[v])};
    inst.d[nn] = Pt{Rat(0), Rat(-1)};      // a
    inst.d[nn + 1] = Pt{Rat(0), Rat(-2)};  // b
    return inst;
}

WorstcaseInstance outerplanar_worstcase(int q) {
    if (q < 1) throw std::invalid_argument("outerplanar_worstcase: q must be >= 1");
    const int nn = q * q;
    WorstcaseInstance inst;
    inst.g = path_plus_universal(nn, 1);
    inst.d.resize(nn + 1);
    auto pos = sigma_positions(q);
    for (int v = 0; v < nn; ++v) inst.d[v] = Pt{Rat(pos[v]), Rat(0)};
    inst.d[nn] = Pt{Rat(nn), Rat(0)};  // c
    return inst;
}

WitnessDrawing planar_witness(int q) {
    if (q < 3)
        throw std::invalid_argument(
            "planar_witness: requires q >= 3 (no plane drawing of the q = 2 "
            "instance keeps q + 1 vertices in place)");
    auto inst = planar_worstcase(q);
    const int nn = q * q;
    const int a = nn, b = nn + 1;
    const int k = nn - q + 1;  // q^2-q+1, the vertex routed far east
    const Rat Q(q), W = Rat(q) * q * q * q * q * q;  // q^6
    const Rat W2 = W * W;

    WitnessDrawing wd;
    wd.g = inst.g;
    wd.original = inst.d;
    Drawing& d = wd.untangled;
    d.resize(nn + 2);

    // Spine: path vertices 0..(q-1)q on x = 0, y strictly increasing along
    // the path; the fixed multiples of q keep their original integer heights
    // and the free vertices take the fractions in between.
    for (int j = 0; j <= (q - 1) * q; ++j) {
        int m = j / q, t = j % q;
        d[j] = Pt{Rat(0), Rat(q * q - q + 1 + m) + Rat(t) / Q};
    }
    // Eastern peak, then the plunge back to the fixed vertex k+1.
    d[k] = Pt{W, Rat(q * q + 2)};
    d[k + 1] = Pt{Rat(0), Rat(q * q - 2 * q)};
    // Tail: hangs from k+1 on the gentle ray of slope 1/q going south-west.
    for (int r = 1; r <= q - 3; ++r)
        d[k + 1 + r] = Pt{Rat(-r * q), Rat(q * q - 2 * q - r)};
    // b lives between the spine and the plunge; a sits far south-west,
    // below the tail's ray line (y = q^2-2q + x/q), so that a-edges and
    // b-edges meet the tail from opposite sides.
    d[b] = Pt{Rat(1, 2), Rat(q * q - q)};
    d[a] = Pt{-W2, Rat(q * q - 2 * q) - W2 / Q - W2 / Q};

    for (int m = 0; m < q; ++m) wd.fixed.push_back(m * q);
    wd.fixed.push_back(k + 1);
    return wd;
}

WitnessDrawing outerplanar_witness(int q) {
    if (q < 2)
        throw std::invalid_argument("outerplanar_witness: q must be >= 2");
    auto inst = outerplanar_worstcase(q);
    const int nn = q * q;
    const int c = nn;

    WitnessDrawing wd;
    wd.g = inst.g;
    wd.original = inst.d;
    Drawing& d = wd.untangled;
    d.resize(nn + 1);

    if (q == 2) {
        // Small enough to place by hand: fix vertices 0 and 1.
        d[0] = Pt{Rat(1), Rat(0)};
        d[1] = Pt{Rat(3), Rat(0)};
        d[2] = Pt{Rat(10), Rat(4)};
        d[3] = Pt{Rat(30), Rat(12)};
        d[4] = Pt{Rat(2), Rat(-10)};
        wd.fixed = {0, 1};
        return wd;
    }

    const Rat Q2(q * q), D = Rat(q) * q * q * q * q * q;  // q^6
    const Rat w = Rat(1) / (2 * Q2);

    // Right cluster: vertices 0..q-1 at their originals (jq+q-1, 0).
    for (int j = 0; j < q; ++j) d[j] = Pt{Rat(j * q + q - 1), Rat(0)};
    // Left cluster: vertices mq (m = 2..q-1) at their originals (q-1-m, 0).
    for (int m = 2; m < q; ++m) d[m * q] = Pt{Rat(q - 1 - m), Rat(0)};
    // Big chain q..2q-1: a collinear near-vertical run above the gap
    // x in (q-3, q-1), leaning slightly west going down.
    for (int s = 0; s < q; ++s)
        d[q + s] = Pt{Rat(q - 2) - Rat(s + 1) * w, Rat(q - s) * Q2};
    // Bump chains mq+1..mq+q-1: a low x-monotone arc inside the slot
    // between the fixed vertices mq and (m+1)q.
    for (int m = 2; m <= q - 2; ++m)
        for (int t = 1; t < q; ++t)
            d[m * q + t] =
                Pt{Rat(q - 1 - m) - Rat(t) / Rat(q), Rat(t * (q - t)) / Q2};
    // Trailing chain (q-1)q+1..q^2-1: collinear steep ray up-west from the
    // fixed vertex (q-1)q at the origin.
    for (int r = 1; r < q; ++r)
        d[(q - 1) * q + r] = Pt{Rat(-r), Rat(r) * Q2};
    // c far below the gap; its fan reaches every cluster through the gap,
    // the slots, and the free half-plane x < 0.
    d[c] = Pt{Rat(q - 2), -D};

    for (int j = 0; j < q; ++j) wd.fixed.push_back(j);
    for (int m = 2; m < q; ++m) wd.fixed.push_back(m * q);
    return wd;
}

}  // namespace untangle
