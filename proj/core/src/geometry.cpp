#include "fano3/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fano3 {

namespace {

int affine_rank(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return -1;
    std::vector<LatticePoint> basis;
    for (size_t i = 1; i < pts.size(); ++i) {
        LatticePoint d = pts[i] - pts[0];
        bool indep;
        if (basis.empty())
            indep = !d.is_zero();
        else if (basis.size() == 1)
            indep = !cross(basis[0], d).is_zero();
        else if (basis.size() == 2)
            indep = det3(basis[0], basis[1], d) != 0;
        else
            break;
        if (indep) basis.push_back(d);
    }
    return static_cast<int>(basis.size());
}

}  // namespace

bool FanoPolytope::origin_interior() const {
    for (const auto& f : facets_)
        if (f.offset <= 0) return false;
    return true;
}

bool FanoPolytope::vertices_primitive() const {
    for (const auto& v : vertices_) {
        if (v.is_zero()) return false;
        if (content(v) != 1) return false;
    }
    return true;
}

bool FanoPolytope::simplicial() const {
    for (const auto& f : facets_)
        if (f.vertex_indices.size() != 3) return false;
    return true;
}

FanoPolytope convex_hull(const std::vector<LatticePoint>& points, int k) {
    std::vector<LatticePoint> pts(points);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 4 || affine_rank(pts) < 3)
        throw DimensionError("convex_hull: input is not full-dimensional");

    const int n = static_cast<int>(pts.size());
    // Every supporting plane spanned by a triple of points, keyed by the
    // inward (primitive) normal and offset.
    std::map<std::pair<LatticePoint, Int>, std::set<int>> planes;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                LatticePoint nrm = cross(pts[j] - pts[i], pts[l] - pts[i]);
                if (nrm.is_zero()) continue;
                nrm = primitivize(nrm);
                Int c = dot(nrm, pts[i]);
                bool lo = false, hi = false;
                for (int t = 0; t < n && !(lo && hi); ++t) {
                    int s = cmp(dot(nrm, pts[t]), c);
                    lo = lo || s < 0;
                    hi = hi || s > 0;
                }
                if (lo && hi) continue;
                if (hi) {  // flip so all points satisfy <nrm, x> <= c
                    nrm = -nrm;
                    c = -c;
                }
                // inward normal -nrm, plane <-nrm, x> = -c : offset = c
                auto key = std::make_pair(-nrm, c);
                auto it = planes.find(key);
                if (it == planes.end()) {
                    std::set<int> on;
                    for (int t = 0; t < n; ++t)
                        if (dot(nrm, pts[t]) == c) on.insert(t);
                    planes.emplace(key, std::move(on));
                }
            }

    // A point is extreme iff its incident facet normals span 3D.
    std::vector<int> vert_ids;
    for (int t = 0; t < n; ++t) {
        std::vector<LatticePoint> nrms;
        for (const auto& [key, on] : planes)
            if (on.count(t)) nrms.push_back(key.first);
        std::vector<LatticePoint> with_origin;
        with_origin.push_back({0, 0, 0});
        for (auto& m : nrms) with_origin.push_back(m);
        if (affine_rank(with_origin) == 3) vert_ids.push_back(t);
    }
    if (vert_ids.size() > 14)
        throw DomainError("convex_hull: more than 14 vertices (safety cap)");

    FanoPolytope p;
    p.k_ = k;
    std::map<int, int> remap;
    for (int id : vert_ids) {
        remap[id] = static_cast<int>(p.vertices_.size());
        p.vertices_.push_back(pts[id]);
    }
    for (const auto& [key, on] : planes) {
        Facet f;
        f.inward_normal = key.first;
        f.offset = key.second;
        for (int t : on)
            if (remap.count(t)) f.vertex_indices.push_back(remap.at(t));
        std::sort(f.vertex_indices.begin(), f.vertex_indices.end());
        p.facets_.push_back(std::move(f));
    }
    return p;
}

bool contains(const FanoPolytope& p, const LatticePoint& q, bool strict) {
    for (const auto& f : p.facets()) {
        Int v = dot(f.inward_normal, q);
        if (strict ? v <= -f.offset : v < -f.offset) return false;
    }
    return true;
}

std::vector<LabeledPoint> lattice_points(const FanoPolytope& p) {
    const auto& vs = p.vertices();
    Int xmin = vs[0].x, xmax = vs[0].x, ymin = vs[0].y, ymax = vs[0].y, zmin = vs[0].z, zmax = vs[0].z;
    for (const auto& v : vs) {
        xmin = std::min(xmin, v.x); xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y); ymax = std::max(ymax, v.y);
        zmin = std::min(zmin, v.z); zmax = std::max(zmax, v.z);
    }
    std::vector<LabeledPoint> out;
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y)
            for (Int z = zmin; z <= zmax; ++z) {
                LatticePoint q{x, y, z};
                bool inside = true, on_boundary = false;
                for (const auto& f : p.facets()) {
                    int s = cmp(dot(f.inward_normal, q), -f.offset);
                    if (s < 0) { inside = false; break; }
                    if (s == 0) on_boundary = true;
                }
                if (!inside) continue;
                PointLocation loc = PointLocation::Interior;
                if (std::binary_search(vs.begin(), vs.end(), q))
                    loc = PointLocation::Vertex;
                else if (on_boundary)
                    loc = PointLocation::Boundary;
                out.push_back({q, loc});
            }
    return out;
}

namespace {

// A rational dual point num/den with den > 0, stored reduced.
struct DualVertex {
    LatticePoint num;
    Int den;

    bool operator<(const DualVertex& o) const {
        if (int c = cmp(den, o.den); c != 0) return c < 0;
        return num < o.num;
    }
    bool operator==(const DualVertex& o) const { return den == o.den && num == o.num; }
};

// <u, v> compared to -1:  dot(num, v) vs -den.
int cmp_dual(const DualVertex& u, const LatticePoint& v) {
    return cmp(dot(u.num, v), -u.den);
}

}  // namespace

Rat anticanonical_volume(const FanoPolytope& p) {
    if (!p.origin_interior())
        throw InvariantViolation("anticanonical_volume: origin not strictly interior");
    const auto& vs = p.vertices();
    const int n = static_cast<int>(vs.size());

    std::vector<DualVertex> duals;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                Int d = det3(vs[i], vs[j], vs[l]);
                if (d == 0) continue;
                // Solve <u, v> = -1 for the three rows by Cramer.
                LatticePoint rhs{-1, -1, -1};
                auto col_swap_det = [&](int c) {
                    LatticePoint a = vs[i], b = vs[j], e = vs[l];
                    auto set = [&](LatticePoint& r, const Int& t) {
                        if (c == 0) r.x = t; else if (c == 1) r.y = t; else r.z = t;
                    };
                    set(a, rhs.x); set(b, rhs.y); set(e, rhs.z);
                    return det3(a, b, e);
                };
                DualVertex u{{col_swap_det(0), col_swap_det(1), col_swap_det(2)}, d};
                if (u.den < 0) { u.den = -u.den; u.num = -u.num; }
                Int g = gcd(gcd(gcd(u.num.x, u.num.y), u.num.z), u.den);
                if (g > 1) { u.num.x /= g; u.num.y /= g; u.num.z /= g; u.den /= g; }
                bool ok = true;
                for (int t = 0; t < n && ok; ++t) ok = cmp_dual(u, vs[t]) >= 0;
                if (ok) duals.push_back(u);
            }
    std::sort(duals.begin(), duals.end());
    duals.erase(std::unique(duals.begin(), duals.end()), duals.end());
    if (duals.size() < 4)
        throw InvariantViolation("anticanonical_volume: degenerate dual");

    // Dual facet per primal vertex v; fan-triangulate each polygon.
    Rat total = 0;
    const int m = static_cast<int>(duals.size());
    for (int vi = 0; vi < n; ++vi) {
        std::vector<int> on;
        for (int t = 0; t < m; ++t)
            if (cmp_dual(duals[t], vs[vi]) == 0) on.push_back(t);
        if (on.size() < 3)
            throw InvariantViolation("anticanonical_volume: dual facet with <3 vertices");
        // polygon edges: pairs sharing equality on a second primal vertex
        std::map<int, std::vector<int>> adj;
        for (size_t a = 0; a < on.size(); ++a)
            for (size_t b = a + 1; b < on.size(); ++b) {
                bool shared = false;
                for (int w = 0; w < n && !shared; ++w) {
                    if (w == vi) continue;
                    shared = cmp_dual(duals[on[a]], vs[w]) == 0 && cmp_dual(duals[on[b]], vs[w]) == 0;
                }
                if (shared) {
                    adj[on[a]].push_back(on[b]);
                    adj[on[b]].push_back(on[a]);
                }
            }
        std::vector<int> cyc{on[0]};
        int prev = -1;
        for (size_t step = 0; step < on.size(); ++step) {
            int cur = cyc.back(), nxt = -1;
            for (int t : adj[cur])
                if (t != prev) { nxt = t; break; }
            if (nxt == -1 || nxt == cyc.front()) break;
            prev = cur;
            cyc.push_back(nxt);
        }
        if (cyc.size() != on.size())
            throw InvariantViolation("anticanonical_volume: dual facet polygon walk failed");
        for (size_t t = 1; t + 1 < cyc.size(); ++t) {
            const DualVertex &a = duals[cyc[0]], &b = duals[cyc[t]], &c = duals[cyc[t + 1]];
            Rat piece(det3(a.num, b.num, c.num), a.den * b.den * c.den);
            piece.canonicalize();
            total += abs(piece);
        }
    }
    return total;
}

namespace {

// HNF of an invertible 3x3 matrix together with the unimodular U, U*B = L.
void hnf3_with_transform(const LatticePoint cols[3], IntMatrix& L, IntMatrix& U) {
    IntMatrix aug(3, 6);
    for (int c = 0; c < 3; ++c) {
        aug.at(0, c) = cols[c].x;
        aug.at(1, c) = cols[c].y;
        aug.at(2, c) = cols[c].z;
    }
    for (int r = 0; r < 3; ++r) aug.at(r, 3 + r) = 1;
    // Row-reduce with the same convention as hermite_normal_form: the first
    // three columns are independent, so they are the pivot columns.
    IntMatrix h = hermite_normal_form(aug);
    L = IntMatrix(3, 3);
    U = IntMatrix(3, 3);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            L.at(r, c) = h.at(r, c);
            U.at(r, c) = h.at(r, 3 + c);
        }
}

struct NormalFormSearch {
    const std::vector<LatticePoint>& cols;
    int n;
    std::vector<bool> used;
    std::vector<LatticePoint> prefix;      // chosen original columns
    std::vector<LatticePoint> transformed; // U * prefix, valid once U is set
    bool have_u = false;
    IntMatrix u{3, 3};
    std::vector<Int> best;  // flat column-major; empty = none yet
    std::vector<int> pivots;

    explicit NormalFormSearch(const std::vector<LatticePoint>& c)
        : cols(c), n(static_cast<int>(c.size())), used(c.size(), false) {}

    // -1 prefix < best, 0 equal-so-far, +1 prefix > best (prune)
    int cmp_prefix() const {
        if (best.empty()) return -1;
        for (size_t i = 0; i < transformed.size(); ++i) {
            const auto& t = transformed[i];
            const Int* b = &best[3 * i];
            if (int c = cmp(t.x, b[0]); c != 0) return c;
            if (int c = cmp(t.y, b[1]); c != 0) return c;
            if (int c = cmp(t.z, b[2]); c != 0) return c;
        }
        return 0;
    }

    void run() {
        dfs();
        if (best.empty()) throw RankError("normal_form: vertex set is not full-dimensional");
    }

    void dfs() {
        if (static_cast<int>(prefix.size()) == n) {
            if (!have_u) return;  // rank-deficient ordering; cannot happen for full-dim sets
            if (cmp_prefix() < 0) {
                best.clear();
                for (const auto& t : transformed) {
                    best.push_back(t.x);
                    best.push_back(t.y);
                    best.push_back(t.z);
                }
            }
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            used[i] = true;
            prefix.push_back(cols[i]);
            bool u_set_here = false;
            size_t pivots_before = pivots.size();
            if (!have_u) {
                // track greedy rank growth
                bool indep;
                if (pivots.empty())
                    indep = !cols[i].is_zero();
                else if (pivots.size() == 1)
                    indep = !cross(cols[pivots[0]], cols[i]).is_zero();
                else
                    indep = det3(cols[pivots[0]], cols[pivots[1]], cols[i]) != 0;
                if (indep) {
                    pivots.push_back(i);
                    if (pivots.size() == 3) {
                        LatticePoint piv[3] = {cols[pivots[0]], cols[pivots[1]], cols[pivots[2]]};
                        IntMatrix L(3, 3);
                        hnf3_with_transform(piv, L, u);
                        have_u = true;
                        u_set_here = true;
                        transformed.clear();
                        for (const auto& c : prefix) transformed.push_back(apply_u(c));
                    }
                }
            } else {
                transformed.push_back(apply_u(cols[i]));
            }
            bool prune = have_u && cmp_prefix() > 0;
            if (!prune) dfs();
            if (have_u) {
                if (u_set_here) {
                    have_u = false;
                    transformed.clear();
                } else {
                    transformed.pop_back();
                }
            }
            while (pivots.size() > pivots_before) pivots.pop_back();
            prefix.pop_back();
            used[i] = false;
        }
    }

    LatticePoint apply_u(const LatticePoint& c) const {
        return {u.at(0, 0) * c.x + u.at(0, 1) * c.y + u.at(0, 2) * c.z,
                u.at(1, 0) * c.x + u.at(1, 1) * c.y + u.at(1, 2) * c.z,
                u.at(2, 0) * c.x + u.at(2, 1) * c.y + u.at(2, 2) * c.z};
    }
};

}  // namespace

IntMatrix normal_form(const std::vector<LatticePoint>& vertices) {
    std::vector<LatticePoint> vs(vertices);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    if (vs.size() > 14) throw DomainError("normal_form: more than 14 vertices (safety cap)");
    NormalFormSearch s(vs);
    s.run();
    const int n = static_cast<int>(vs.size());
    IntMatrix out(3, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < 3; ++r) out.at(r, c) = s.best[3 * c + r];
    return out;
}

IntMatrix normal_form(const FanoPolytope& p) { return normal_form(p.vertices()); }

std::string polytope_to_json(const FanoPolytope& p) {
    nlohmann::json j;
    j["k"] = p.k();
    auto& arr = j["vertices"] = nlohmann::json::array();
    for (const auto& v : p.vertices())
        arr.push_back({static_cast<long>(v.x.get_si()), static_cast<long>(v.y.get_si()),
                       static_cast<long>(v.z.get_si())});
    return j.dump();
}

FanoPolytope polytope_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int k = j.value("k", 1);
    std::vector<LatticePoint> pts;
    for (const auto& row : j.at("vertices")) {
        if (!row.is_array() || row.size() != 3)
            throw DomainError("polytope_from_json: vertex is not a 3-vector");
        pts.push_back({static_cast<long>(row[0].get<long long>()),
                       static_cast<long>(row[1].get<long long>()),
                       static_cast<long>(row[2].get<long long>())});
    }
    return convex_hull(pts, k);
}

}  // namespace fano3
