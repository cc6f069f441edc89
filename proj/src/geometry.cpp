#include "untangle/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "untangle/errors.hpp"

namespace untangle {

namespace {
// Exact cross product (b-a) x (c-a).
Rat cross2(const Pt& a, const Pt& b, const Pt& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}
int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Sign of the exact cross product (b-a) x (c-a), computed over the integer
// numerators and denominators directly.  Rational subtraction canonicalizes
// with a gcd on every step, which dominates the running time once
// coordinates grow to thousands of bits; clearing denominators needs only
// multiplications.
int cross2_sign(const Pt& a, const Pt& b, const Pt& c) {
    // b.x - a.x = n1 / (axd * bxd), etc.; all denominators are positive, so
    //   sign((b.x-a.x)(c.y-a.y) - (b.y-a.y)(c.x-a.x))
    // = sign(n1*n2*byd*cxd - n3*n4*bxd*cyd).
    const mpz_class& axd = a.x.get_den();
    const mpz_class& ayd = a.y.get_den();
    const mpz_class& bxd = b.x.get_den();
    const mpz_class& byd = b.y.get_den();
    const mpz_class& cxd = c.x.get_den();
    const mpz_class& cyd = c.y.get_den();
    mpz_class n1 = b.x.get_num() * axd - a.x.get_num() * bxd;
    mpz_class n2 = c.y.get_num() * ayd - a.y.get_num() * cyd;
    mpz_class n3 = b.y.get_num() * ayd - a.y.get_num() * byd;
    mpz_class n4 = c.x.get_num() * axd - a.x.get_num() * cxd;
    mpz_class lhs = n1 * n2 * byd * cxd;
    mpz_class rhs = n3 * n4 * bxd * cyd;
    const int s = cmp(lhs, rhs);
    return (s > 0) - (s < 0);
}
}  // namespace

int orient(const Pt& a, const Pt& b, const Pt& c) {
    // Floating-point filter: when the double determinant is safely outside
    // its rounding-error bound the sign is certain; otherwise fall back to
    // the exact rational computation.
    const double ax = a.x.get_d(), ay = a.y.get_d();
    const double bx = b.x.get_d(), by = b.y.get_d();
    const double cx = c.x.get_d(), cy = c.y.get_d();
    const double d1 = (bx - ax) * (cy - ay), d2 = (by - ay) * (cx - ax);
    const double det = d1 - d2;
    const double mx = std::max({std::fabs(ax), std::fabs(bx), std::fabs(cx)});
    const double my = std::max({std::fabs(ay), std::fabs(by), std::fabs(cy)});
    const double err = 1e-13 * mx * my + 1e-290;
    if (std::isfinite(det) && std::isfinite(err) && std::fabs(det) > err)
        return det > 0 ? 1 : -1;
    return cross2_sign(a, b, c);
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool on_open_segment(const Pt& a, const Pt& b, const Pt& p) {
    return on_segment(a, b, p) && p != a && p != b;
}

bool segments_cross(const Pt& p1, const Pt& q1, const Pt& p2, const Pt& q2) {
    int o1 = orient(p1, q1, p2), o2 = orient(p1, q1, q2);
    int o3 = orient(p2, q2, p1), o4 = orient(p2, q2, q1);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper crossing
    if (on_open_segment(p1, q1, p2) || on_open_segment(p1, q1, q2) ||
        on_open_segment(p2, q2, p1) || on_open_segment(p2, q2, q1))
        return true;
    // Identical positive-length segments overlap in their interiors even
    // though neither endpoint is interior to the other.
    if (p1 != q1 && ((p1 == p2 && q1 == q2) || (p1 == q2 && q1 == p2))) return true;
    return false;
}

namespace {

// Conservative double interval for a coordinate: outward-inflated so the
// exact value is certainly inside; infinite when the conversion overflows.
struct Box {
    double xlo, xhi, ylo, yhi;
    bool overlaps(const Box& o) const {
        return xlo <= o.xhi && o.xlo <= xhi && ylo <= o.yhi && o.ylo <= yhi;
    }
};

double inflate_lo(double v) { return v - (std::fabs(v) * 1e-12 + 1e-280); }
double inflate_hi(double v) { return v + (std::fabs(v) * 1e-12 + 1e-280); }

Box point_box(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        constexpr double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf, -inf, inf};
    }
    return {inflate_lo(x), inflate_hi(x), inflate_lo(y), inflate_hi(y)};
}

Box merge(const Box& a, const Box& b) {
    return {std::min(a.xlo, b.xlo), std::max(a.xhi, b.xhi), std::min(a.ylo, b.ylo),
            std::max(a.yhi, b.yhi)};
}

}  // namespace

CrossingReport crossing_pairs(const Graph& g, const Drawing& d) {
    CrossingReport rep;
    const int m = g.m();
    // Double bounding boxes filter out the vast majority of pairs before any
    // exact arithmetic runs; the inflation keeps the filter conservative.
    std::vector<Box> vbox;
    vbox.reserve(g.n);
    for (int v = 0; v < g.n; ++v) vbox.push_back(point_box(d[v].x.get_d(), d[v].y.get_d()));
    std::vector<Box> ebox;
    ebox.reserve(m);
    for (int i = 0; i < m; ++i) ebox.push_back(merge(vbox[g.edges[i].first], vbox[g.edges[i].second]));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!ebox[i].overlaps(ebox[j])) continue;
            auto [a, b] = g.edges[i];
            auto [c, e] = g.edges[j];
            if (segments_cross(d[a], d[b], d[c], d[e])) rep.edge_pairs.push_back({i, j});
        }
    for (int v = 0; v < g.n; ++v)
        for (int i = 0; i < m; ++i) {
            if (!ebox[i].overlaps(vbox[v])) continue;
            auto [a, b] = g.edges[i];
            if (v != a && v != b && on_open_segment(d[a], d[b], d[v]))
                rep.vertex_on_edge.push_back({v, i});
        }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (d[u] == d[v]) rep.coincident_vertices.push_back({u, v});
    return rep;
}

bool is_plane(const Graph& g, const Drawing& d) { return crossing_pairs(g, d).clean(); }

Rat polygon_area2(const std::vector<Pt>& poly) {
    Rat a = 0;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt& p = poly[i];
        const Pt& q = poly[(i + 1) % n];
        a += p.x * q.y - q.x * p.y;
    }
    return a;
}

std::vector<Pt> clip_halfplanes(std::vector<Pt> region, const std::vector<HalfPlane>& hs) {
    for (const auto& h : hs) {
        if (region.empty()) return {};
        std::vector<Pt> out;
        const size_t n = region.size();
        for (size_t i = 0; i < n; ++i) {
            const Pt& cur = region[i];
            const Pt& nxt = region[(i + 1) % n];
            Rat oc = cross2(h.a, h.b, cur), on = cross2(h.a, h.b, nxt);
            if (oc >= 0) out.push_back(cur);
            if ((oc > 0 && on < 0) || (oc < 0 && on > 0)) {
                Rat t = oc / (oc - on);
                out.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
            }
        }
        // Drop consecutive duplicates introduced by clipping through vertices.
        std::vector<Pt> dedup;
        for (const auto& p : out)
            if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
        while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
        region = std::move(dedup);
    }
    return region;
}

bool strictly_inside_all(const Pt& p, const std::vector<HalfPlane>& hs) {
    for (const auto& h : hs)
        if (orient(h.a, h.b, p) <= 0) return false;
    return true;
}

std::vector<HalfPlane> kernel_halfplanes(std::vector<Pt> poly) {
    if (polygon_area2(poly) < 0) std::reverse(poly.begin(), poly.end());
    std::vector<HalfPlane> hs;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) hs.push_back({poly[i], poly[(i + 1) % n]});
    return hs;
}

std::optional<std::vector<Pt>> polygon_kernel(const std::vector<Pt>& poly) {
    if (poly.size() < 3) return std::nullopt;
    Rat minx = poly[0].x, maxx = poly[0].x, miny = poly[0].y, maxy = poly[0].y;
    for (const auto& p : poly) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
    }
    std::vector<Pt> box = {{minx - 1, miny - 1}, {maxx + 1, miny - 1},
                           {maxx + 1, maxy + 1}, {minx - 1, maxy + 1}};
    auto kern = clip_halfplanes(box, kernel_halfplanes(poly));
    if (kern.size() < 3 || polygon_area2(kern) <= 0) return std::nullopt;
    return kern;
}

Pt kernel_interior_point(const std::vector<Pt>& poly) {
    auto kern = polygon_kernel(poly);
    if (!kern) throw EmptyKernelError();
    auto hs = kernel_halfplanes(poly);
    const auto& k = *kern;
    Pt avg{0, 0};
    for (const auto& p : k) {
        avg.x += p.x;
        avg.y += p.y;
    }
    avg.x /= static_cast<int>(k.size());
    avg.y /= static_cast<int>(k.size());
    if (strictly_inside_all(avg, hs)) return avg;
    // Average landed on the kernel boundary; pull it toward vertex-pair
    // midpoints until it is strictly interior.
    for (size_t i = 0; i < k.size(); ++i)
        for (size_t j = i + 1; j < k.size(); ++j) {
            Pt m{(k[i].x + k[j].x) / 2, (k[i].y + k[j].y) / 2};
            Pt cand{(avg.x + m.x) / 2, (avg.y + m.y) / 2};
            if (strictly_inside_all(cand, hs)) return cand;
        }
    // Area-weighted centroid of a positive-area convex polygon is interior.
    Rat a2 = 0, cx = 0, cy = 0;
    for (size_t i = 0; i < k.size(); ++i) {
        const Pt& p = k[i];
        const Pt& q = k[(i + 1) % k.size()];
        Rat w = p.x * q.y - q.x * p.y;
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    Pt cent{cx / (3 * a2), cy / (3 * a2)};
    if (strictly_inside_all(cent, hs)) return cent;
    throw EmptyKernelError("kernel has positive area but no strict interior point found");
}

bool is_x_monotone(const std::vector<Pt>& pts) {
    for (size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i - 1].x < pts[i].x)) return false;
    return true;
}

bool below_path(const std::vector<Pt>& path, const Pt& p) {
    if (path.size() < 2 || !is_x_monotone(path)) throw NotAPathError("below_path needs an x-monotone polyline");
    if (p.x < path.front().x || p.x > path.back().x)
        throw OutOfRangeError();
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i].x <= p.x && p.x <= path[i + 1].x)
            return orient(path[i], path[i + 1], p) < 0;
    throw OutOfRangeError();  // unreachable
}

bool inside_convex(const std::vector<Pt>& convex, const Pt& p) {
    const size_t n = convex.size();
    if (n < 3) return false;
    for (size_t i = 0; i < n; ++i)
        if (orient(convex[i], convex[(i + 1) % n], p) <= 0) return false;
    return true;
}

bool angle_less(const Pt& u, const Pt& v) {
    auto half = [](const Pt& w) { return (w.y > 0 || (w.y == 0 && w.x > 0)) ? 0 : 1; };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv;
    return sgn(u.x * v.y - u.y * v.x) > 0;
}

Pt simplify_point(const Pt& p, const std::vector<HalfPlane>& hs) {
    mpz_class two_k = 1;
    const long cap = 4 * (rat_bits(p.x) + rat_bits(p.y)) + 8;
    for (long k = 0; k <= cap; ++k, two_k *= 2) {
        auto snap = [&](const Rat& r) {
            // round(r * 2^k) / 2^k
            mpq_class scaled = r * Rat(two_k);
            mpz_class num = scaled.get_num(), den = scaled.get_den(), q;
            mpz_fdiv_q(q.get_mpz_t(), mpz_class(2 * num + den).get_mpz_t(),
                       mpz_class(2 * den).get_mpz_t());
            Rat out(q, two_k);
            out.canonicalize();
            return out;
        };
        Pt cand{snap(p.x), snap(p.y)};
        if (strictly_inside_all(cand, hs)) return cand;
    }
    return p;  // p itself is guaranteed strict by contract
}

PlaneFaces plane_faces(const Graph& g, const Drawing& d) {
    if (!g.connected()) throw DisconnectedError("plane_faces needs a connected graph");
    // Darts (u,v) for every edge in both directions, rotation sorted by angle.
    std::vector<std::vector<int>> rot(g.n);
    auto adj = g.adjacency();
    for (int v = 0; v < g.n; ++v) {
        rot[v] = adj[v];
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) {
            Pt da{d[a].x - d[v].x, d[a].y - d[v].y};
            Pt db{d[b].x - d[v].x, d[b].y - d[v].y};
            return angle_less(da, db);
        });
    }
    std::map<std::pair<int, int>, int> pos;
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < rot[v].size(); ++i) pos[{v, rot[v][i]}] = static_cast<int>(i);

    std::map<std::pair<int, int>, bool> used;
    PlaneFaces out;
    out.outer = -1;
    Rat min_area = 0;
    bool first = true;
    for (auto [u0, v0] : g.edges)
        for (auto [u, v] : {std::pair{u0, v0}, std::pair{v0, u0}}) {
            if (used[{u, v}]) continue;
            std::vector<int> walk;
            int cu = u, cv = v;
            while (!used[{cu, cv}]) {
                used[{cu, cv}] = true;
                walk.push_back(cu);
                int p = pos[{cv, cu}];
                int sz = static_cast<int>(rot[cv].size());
                int w = rot[cv][(p + sz - 1) % sz];
                cu = cv;
                cv = w;
            }
            std::vector<Pt> pts;
            for (int w : walk) pts.push_back(d[w]);
            Rat a2 = polygon_area2(pts);
            out.walks.push_back(std::move(walk));
            if (first || a2 < min_area) {
                min_area = a2;
                out.outer = static_cast<int>(out.walks.size()) - 1;
                first = false;
            }
        }
    return out;
}

}  // namespace untangle
