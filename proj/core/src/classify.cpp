#include "fano3/classify.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <map>
#include <set>
#include <thread>

#include "fano3/cones.hpp"

namespace fano3 {

LSets compute_L_sets(int k, const std::vector<LatticePoint>& candidates) {
    if (k < 2) throw DomainError("compute_L_sets: k must be >= 2");
    if (candidates.empty()) throw DomainError("compute_L_sets: empty candidate set");
    const LatticePoint s1 = seed_s1(), s2 = seed_s2(), s3 = seed_s3(k);
    struct FaceDef {
        LatticePoint a, b, omitted;
    };
    const FaceDef faces[3] = {{s1, s2, s3}, {s1, s3, s2}, {s2, s3, s1}};
    LSets out;
    std::vector<LatticePoint>* dst[3] = {&out.L1, &out.L2, &out.L3};
    for (int i = 0; i < 3; ++i) {
        for (const auto& v : candidates) {
            if (halfspace_value(v, k) >= k) continue;
            Int d = det3(faces[i].a, faces[i].b, v);
            if (d != 1 && d != -1) continue;
            LatticePoint n = cross(faces[i].b - faces[i].a, v - faces[i].a);
            Int c = dot(n, faces[i].a);
            if (c == 0) continue;  // face plane through the origin
            if (c > 0) {
                n = -n;
                c = -c;
            }
            // origin (value 0) is strictly inside; the omitted seed must be too
            if (dot(n, faces[i].omitted) > c) dst[i]->push_back(v);
        }
        std::sort(dst[i]->begin(), dst[i]->end());
    }
    return out;
}

bool validate(const FanoPolytope& p, int k) { return validate_failure(p, k).empty(); }

std::string validate_failure(const FanoPolytope& p, int k) {
    if (k < 1) throw DomainError("validate: k must be positive");
    if (!p.origin_interior()) return "origin is not strictly interior";
    if (!p.vertices_primitive()) return "a vertex has non-coprime coordinates";
    if (!p.simplicial()) return "a facet is not a triangle";
    // Exactly one facet cone of the reference 1/k(1,1,1) type, all others
    // smooth.  In seed position the singular facet is necessarily the seed
    // facet conv{s1,s2,s3}, whose cone is the reference cone by construction.
    int singular = 0;
    for (const auto& f : p.facets()) {
        std::array<LatticePoint, 3> g;
        for (int i = 0; i < 3; ++i) g[i] = p.vertices()[f.vertex_indices[i]];
        Int idx = abs(det3(g[0], g[1], g[2]));
        if (idx == 1) continue;
        SimplicialCone cone(g[0], g[1], g[2]);
        ConeType t = classify_cone(cone, k);
        std::string facet_str = "facet {" + g[0].str() + "," + g[1].str() + "," + g[2].str() +
                                "} has cone " + t.str();
        if (k == 1 || t.tag != ConeType::Tag::QuotientOneOverK) return facet_str;
        if (++singular > 1) return "second singular " + facet_str;
    }
    if (k > 1 && singular == 0) return "no facet carries the 1/" + std::to_string(k) + "(1,1,1) cone";
    return "";
}

bool viable_vertex_set(const std::vector<LatticePoint>& w, int k) {
    FanoPolytope hull = convex_hull(w, k);
    if (hull.vertices().size() != w.size()) return false;  // some w non-extreme
    for (const auto& lp : lattice_points(hull)) {
        if (lp.location == PointLocation::Vertex) continue;
        // interior or non-vertex boundary point: allowed only in the
        // reference cone sector
        LatticePoint q = lp.point;
        const LatticePoint s1 = seed_s1(), s2 = seed_s2(), s3 = seed_s3(k);
        Int dm = det3(IntMatrix::from_columns({s1, s2, s3}));
        bool in_cone = true;
        for (int i = 0; i < 3 && in_cone; ++i) {
            std::vector<LatticePoint> cols{s1, s2, s3};
            cols[i] = q;
            in_cone = sgn(det3(IntMatrix::from_columns(cols))) * sgn(dm) >= 0;
        }
        if (!in_cone) return false;
    }
    return true;
}

namespace {

std::optional<BoundingPlane> face_plane(const LatticePoint& a, const LatticePoint& b,
                                        const LatticePoint& v) {
    LatticePoint n = cross(b - a, v - a);
    if (n.is_zero()) return std::nullopt;
    Int c = dot(n, a);
    if (c > 0) {
        n = -n;
        c = -c;
    }
    return BoundingPlane{n, c, {a, b, v}};
}

bool on_face(const BoundingPlane& pl, const LatticePoint& q) {
    return q == pl.face[0] || q == pl.face[1] || q == pl.face[2];
}

bool strictly_inside(const BoundingPlane& pl, const LatticePoint& q) {
    return dot(pl.normal, q) > pl.rhs;
}

std::vector<LatticePoint> merged(const std::vector<LatticePoint>& w, const LatticePoint& q) {
    std::vector<LatticePoint> out(w);
    out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct BranchContext {
    int k;
    const std::vector<LatticePoint>& candidates;
    const LSets& lsets;
    bool exhaustive;
    BranchTrace* trace;  // nullptr unless tracing this v1

    std::vector<FanoPolytope> found;

    void complete(const std::vector<LatticePoint>& w) {
        FanoPolytope hull = convex_hull(w, k);
        if (hull.vertices().size() == w.size() && validate(hull, k)) found.push_back(hull);
    }

    // subsets of ext[i..] on top of w
    void extend(const std::vector<LatticePoint>& w, const std::vector<LatticePoint>& ext,
                size_t i, int* counter) {
        if (!exhaustive && !viable_vertex_set(w, k)) return;
        size_t before = found.size();
        complete(w);
        if (counter && found.size() > before) *counter += static_cast<int>(found.size() - before);
        if (w.size() >= 14) return;  // vertex-count safety cap
        for (size_t j = i; j < ext.size(); ++j) {
            auto w2 = merged(w, ext[j]);
            if (w2.size() == w.size()) continue;
            extend(w2, ext, j + 1, counter);
        }
    }

    void run(const LatticePoint& v1) {
        const LatticePoint s1 = seed_s1(), s2 = seed_s2(), s3 = seed_s3(k);
        const std::vector<LatticePoint> seeds{s1, s2, s3};
        auto pl1 = face_plane(s1, s2, v1);
        if (!pl1) return;
        std::vector<LatticePoint> ok2;
        for (const auto& v2 : lsets.L2) {
            if (!on_face(*pl1, v2) && !strictly_inside(*pl1, v2)) continue;
            if (!viable_vertex_set(merged(merged(seeds, v1), v2), k)) continue;
            ok2.push_back(v2);
        }
        if (trace) {
            trace->v1 = v1;
            trace->admissible_v2 = ok2;
        }
        for (const auto& v2 : ok2) {
            auto pl2 = face_plane(s1, s3, v2);
            if (!pl2) continue;
            std::vector<LatticePoint> ok3;
            for (const auto& v3 : lsets.L3) {
                if (!on_face(*pl1, v3) && !strictly_inside(*pl1, v3)) continue;
                if (!on_face(*pl2, v3) && !strictly_inside(*pl2, v3)) continue;
                if (!viable_vertex_set(merged(merged(merged(seeds, v1), v2), v3), k)) continue;
                ok3.push_back(v3);
            }
            if (trace) trace->admissible_v3.emplace_back(v2, ok3);
            for (const auto& v3 : ok3) {
                auto pl3 = face_plane(s2, s3, v3);
                if (!pl3) continue;
                auto base = merged(merged(merged(seeds, v1), v2), v3);
                std::array<BoundingPlane, 3> planes{*pl1, *pl2, *pl3};
                std::vector<LatticePoint> ext;
                for (const auto& q : candidates) {
                    if (std::binary_search(base.begin(), base.end(), q)) continue;
                    bool ok = true;
                    for (const auto& pl : planes)
                        if (!on_face(pl, q) && !strictly_inside(pl, q)) { ok = false; break; }
                    if (ok) ext.push_back(q);
                }
                int counter = 0;
                extend(base, ext, 0, &counter);
                if (trace)
                    trace->completions.push_back({v2, v3, planes, ext, counter});
            }
        }
    }
};

}  // namespace

SearchResult search(int k, const CandidateSet& candidates, const SearchOptions& opts) {
    if (k < 2) throw DomainError("search: k must be >= 2");
    LSets lsets = compute_L_sets(k, candidates.points);

    SearchResult result;
    const auto& l1 = lsets.L1;
    std::vector<std::vector<FanoPolytope>> per_branch(l1.size());
    std::vector<std::optional<BranchTrace>> traces(l1.size());

    int threads = opts.threads > 0 ? opts.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= l1.size()) return;
            BranchTrace local_trace;
            BranchContext ctx{k, candidates.points, lsets, opts.exhaustive,
                              (opts.trace_v1 && *opts.trace_v1 == l1[i]) ? &local_trace : nullptr};
            ctx.run(l1[i]);
            per_branch[i] = std::move(ctx.found);
            if (opts.trace_v1 && *opts.trace_v1 == l1[i]) traces[i] = std::move(local_trace);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<IntMatrix, FanoPolytope> by_nf;
    for (auto& branch : per_branch)
        for (auto& p : branch) by_nf.emplace(normal_form(p), p);

    std::vector<std::pair<std::pair<size_t, Rat>, FanoPolytope>> keyed;
    for (auto& [nf, p] : by_nf)
        keyed.push_back({{p.vertices().size(), anticanonical_volume(p)}, p});
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first < b.first.first;
        return a.first.second < b.first.second;
    });
    for (auto& [key, p] : keyed) result.polytopes.push_back(std::move(p));
    for (auto& t : traces)
        if (t) result.trace = std::move(t);
    return result;
}

}  // namespace fano3
