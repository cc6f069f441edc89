#include "untangle/schnyder.hpp"

#include <algorithm>
#include <set>

#include "untangle/errors.hpp"

namespace untangle {

SchnyderWood schnyder_wood(const Graph& g) {
    if (g.n < 4) throw TooSmallError("schnyder wood needs at least 4 vertices");
    if (!g.connected() || !is_planar(g) || g.m() != 3 * g.n - 6)
        throw NotTriangulatedError();
    Embedding emb = planar_embed(g);
    auto faces = embedding_faces(g, emb);
    const auto& outer = faces.front();
    int v1 = outer[0], v2 = outer[1], vn = outer[2];

    // Canonical ordering by peeling: repeatedly remove a boundary vertex
    // (not v1/v2) with no chord to the current boundary cycle.
    auto adj = g.adjacency();
    std::vector<char> remaining(g.n, 1);
    std::vector<int> order(g.n, 0);
    std::vector<int> cyc = {v1, v2, vn};
    auto in_cyc = [&](int v) { return std::find(cyc.begin(), cyc.end(), v) != cyc.end(); };
    for (int k = g.n; k >= 3; --k) {
        int pick = -1;
        for (int v : cyc) {
            if (v == v1 || v == v2) continue;
            int on_cycle = 0;
            for (int w : adj[v])
                if (remaining[w] && in_cyc(w)) ++on_cycle;
            if (on_cycle == 2 && (pick == -1 || v < pick)) pick = v;
        }
        if (pick == -1) throw Error("canonical ordering stuck (input not a planar triangulation?)");
        order[pick] = k;
        remaining[pick] = 0;
        // Replace pick in the cycle by its remaining neighbors between its
        // two cycle neighbors, ordered along pick's rotation.
        int ci = static_cast<int>(std::find(cyc.begin(), cyc.end(), pick) - cyc.begin());
        int a = cyc[(ci + static_cast<int>(cyc.size()) - 1) % cyc.size()];
        int b = cyc[(ci + 1) % cyc.size()];
        std::vector<int> filt;
        for (int w : emb.rot[pick])
            if (remaining[w]) filt.push_back(w);
        auto rotate_to = [&](std::vector<int>& f, int x) {
            auto it = std::find(f.begin(), f.end(), x);
            std::rotate(f.begin(), it, f.end());
        };
        rotate_to(filt, a);
        if (filt.back() != b) {
            std::reverse(filt.begin(), filt.end());
            rotate_to(filt, a);
            if (filt.back() != b) throw Error("canonical ordering: boundary arc not found");
        }
        std::vector<int> next;
        for (int i = 0; i < static_cast<int>(cyc.size()); ++i) {
            if (cyc[i] == pick) {
                for (size_t t = 1; t + 1 < filt.size(); ++t) next.push_back(filt[t]);
            } else {
                next.push_back(cyc[i]);
            }
        }
        cyc = std::move(next);
    }
    order[v1] = 1;
    order[v2] = 2;

    // Forward pass: rebuild the contour and assign tree parents.
    std::vector<int> by_order(g.n + 1);
    for (int v = 0; v < g.n; ++v) by_order[order[v]] = v;
    SchnyderWood w;
    w.r1 = v1;
    w.r2 = v2;
    w.r3 = vn;
    w.order = order;
    w.parent1.assign(g.n, -1);
    w.parent2.assign(g.n, -1);
    w.parent3.assign(g.n, -1);
    std::vector<int> contour = {v1, v2};
    std::vector<char> placed(g.n, 0);
    placed[v1] = placed[v2] = 1;
    for (int k = 3; k <= g.n; ++k) {
        int v = by_order[k];
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(contour.size()); ++i)
            if (std::find(adj[v].begin(), adj[v].end(), contour[i]) != adj[v].end())
                idx.push_back(i);
        if (idx.size() < 2 || idx.back() - idx.front() != static_cast<int>(idx.size()) - 1)
            throw Error("canonical ordering: contour neighbors not contiguous");
        int lo = idx.front(), hi = idx.back();
        w.parent1[v] = contour[lo];
        w.parent2[v] = contour[hi];
        for (int i = lo + 1; i < hi; ++i) w.parent3[contour[i]] = v;
        std::vector<int> next(contour.begin(), contour.begin() + lo + 1);
        next.push_back(v);
        next.insert(next.end(), contour.begin() + hi, contour.end());
        contour = std::move(next);
        placed[v] = 1;
    }
    // Outer vertices carry no parent in any tree: the three outer edges
    // belong to no tree, so exactly the 3n-9 interior edges are colored.
    w.parent1[v1] = w.parent2[v1] = w.parent3[v1] = -1;
    w.parent1[v2] = w.parent2[v2] = w.parent3[v2] = -1;
    w.parent1[vn] = w.parent2[vn] = w.parent3[vn] = -1;
    return w;
}

std::vector<int> schnyder_path(const SchnyderWood& w, int v, int tree) {
    const std::vector<int>* par = tree == 1 ? &w.parent1 : tree == 2 ? &w.parent2 : &w.parent3;
    std::vector<int> path{v};
    int root = tree == 1 ? w.r1 : tree == 2 ? w.r2 : w.r3;
    int cur = v;
    while (cur != root) {
        cur = (*par)[cur];
        if (cur == -1) {
            // v1/v2/vn sit on the outer face; close the path at the root.
            path.push_back(root);
            break;
        }
        path.push_back(cur);
        if (path.size() > static_cast<size_t>(w.order.size()) + 1)
            throw Error("schnyder path cycle detected");
    }
    return path;
}

}  // namespace untangle
