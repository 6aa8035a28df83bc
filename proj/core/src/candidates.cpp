#include "fano3/candidates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fano3 {

Int halfspace_value(const LatticePoint& p, int k) {
    return Int(k) * p.x + Int(k) * p.y - 3 * p.z;
}

CandidateParameters CandidateParameters::for_k(int k) {
    if (k < 4) throw DomainError("CandidateParameters: closed form requires k >= 4");
    CandidateParameters p;
    p.k = k;
    switch (k % 3) {
        case 0: p.a = Int(4 * k / 3 - 1); break;
        case 1: p.a = Int(4 * (k - 1) / 3 + 1); break;
        default: p.a = Int(4 * (k - 2) / 3 + 1); break;
    }
    switch (k % 3) {
        case 0: p.b = Int(2 * k / 3 - 1); break;
        case 1: p.b = Int(2 * (k - 1) / 3); break;
        default: p.b = Int(2 * (k - 2) / 3 + 1); break;
    }
    switch (k % 6) {
        case 0: p.c = Int(k / 3 + 1); break;
        case 1: p.c = Int((k - 1) / 3); break;
        case 2: p.c = Int((k - 2) / 3 + 1); break;
        case 3: p.c = Int((k - 3) / 3); break;
        case 4: p.c = Int((k - 4) / 3 - 1); break;
        default: p.c = Int((k - 5) / 3); break;
    }
    switch (k % 3) {
        case 0: p.d = Int(k / 3 + 1); break;
        case 1: p.d = Int((k - 1) / 3 + 1); break;
        default: p.d = Int((k - 2) / 3 + 1); break;
    }
    switch (k % 3) {
        case 0: p.e = Int(2 * k / 3 + 1); break;
        case 1: p.e = Int(2 * (k - 1) / 3 + 1); break;
        default: p.e = Int(2 * (k - 2) / 3 + 3); break;
    }
    return p;
}

namespace {

std::vector<LatticePoint> z_run(long x, long y, const Int& lo, const Int& hi, int step) {
    std::vector<LatticePoint> out;
    for (Int z = lo; z <= hi; z += step) out.push_back({Int(x), Int(y), z});
    return out;
}

}  // namespace

CandidateSet closed_form_U(int k, ClosedFormOptions opts) {
    auto par = CandidateParameters::for_k(k);
    const int step = opts.relax_parity ? 1 : 2;
    CandidateSet cs;
    cs.k = k;
    auto& U = cs.subsets;
    U[0] = z_run(-2, -1, -par.a, 3, step);
    if (opts.fix_typos || opts.relax_parity) {
        U[1] = z_run(-1, -2, -par.a, 3, step);
    } else {
        // literally as printed: the progression stops short and the terminal
        // element repeats U1's (-2,-1,3)
        U[1] = z_run(-1, -2, -par.a, 1, step);
        U[1].push_back({-2, -1, 3});
    }
    U[2] = z_run(-1, 0, -par.b, -1, 1);
    U[2].push_back({-1, 0, 1});
    U[3] = z_run(0, -1, -par.b, -1, 1);
    U[3].push_back({0, -1, 1});
    if (opts.relax_parity) {
        U[2] = z_run(-1, 0, -par.b, 1, 1);
        U[3] = z_run(0, -1, -par.b, 1, 1);
    }
    U[4] = z_run(-1, 1, -par.c, k + 3, step);
    U[5] = z_run(1, -1, -par.c, k + 3, step);
    if (opts.relax_parity) {
        U[6] = z_run(1, 1, par.d, k + 1, 1);
    } else {
        U[6] = z_run(1, 1, par.d, k - 1, 1);
        U[6].push_back({1, 1, Int(k + 1)});
    }
    U[7] = z_run(1, 2, par.e, 2 * k + 3, step);
    U[8] = z_run(2, 1, par.e, 2 * k + 3, step);
    U[9] = {{-5, -4, -13}, {-4, -5, -13},
            {-3, -2, Int(-2 * k + 1)}, {-2, -3, Int(-2 * k + 1)},
            {-1, -1, Int(-k + 1)}, {-1, 2, 1},
            {0, 0, 1}, {0, 1, 1}, {1, 0, 1},
            {1, 3, Int(k + 1)}, {2, -1, 1},
            {3, 1, Int(k + 1)}, {4, -1, 3}, {5, 1, 7}};

    std::set<LatticePoint> seen;
    for (const auto& sub : U)
        for (const auto& p : sub)
            if (seen.insert(p).second) cs.points.push_back(p);
    std::sort(cs.points.begin(), cs.points.end());
    return cs;
}

ExclusionCone::ExclusionCone(const LatticePoint& p, int k) : apex_(p) {
    if (halfspace_value(p, k) >= k)
        throw DomainError("ExclusionCone: apex not strictly inside the open half-space");
    const LatticePoint s[3] = {seed_s1(), seed_s2(), seed_s3(k)};
    // apex in the reference cone: solve p = a*s1 + b*s2 + c*s3, a,b,c >= 0
    {
        Int d = det3(s[0], s[1], s[2]);  // as columns; use transposed Cramer
        // coefficients via Cramer on the column matrix [s1 s2 s3]
        IntMatrix m = IntMatrix::from_columns({s[0], s[1], s[2]});
        Int dm = det3(m);
        auto coeff_det = [&](int i) {
            std::vector<LatticePoint> cols{s[0], s[1], s[2]};
            cols[i] = p;
            return det3(IntMatrix::from_columns(cols));
        };
        bool inside = true;
        for (int i = 0; i < 3 && inside; ++i)
            inside = sgn(coeff_det(i)) * sgn(dm) >= 0;
        if (inside) throw DomainError("ExclusionCone: apex lies in the reference cone");
        (void)d;
    }
    for (int i = 0; i < 3; ++i) dirs_[i] = p - s[i];
}

bool ExclusionCone::contains(const LatticePoint& q) const {
    LatticePoint w = q - apex_;
    Int d = det3(dirs_[0], dirs_[1], dirs_[2]);
    // d is nonzero: the apex is off the seed plane, so the directions are
    // independent.  Cramer signs decide membership.
    std::array<LatticePoint, 3> rows{dirs_[0], dirs_[1], dirs_[2]};
    for (int i = 0; i < 3; ++i) {
        auto cols = rows;
        cols[i] = w;
        if (sgn(det3(cols[0], cols[1], cols[2])) * sgn(d) < 0) return false;
    }
    return true;
}

InstabilityError::InstabilityError(std::vector<LatticePoint> base, std::vector<LatticePoint> doubled)
    : std::runtime_error("generate_candidates: survivor set not stable under box doubling"),
      base_survivors(std::move(base)),
      doubled_survivors(std::move(doubled)) {}

bool volume_guards(const LatticePoint& p, int k, const Int& cap) {
    if (abs(p.z) > cap) return false;
    if (abs(Int(k) * p.y - p.z) > cap) return false;
    if (abs(Int(k) * p.x - p.z) > cap) return false;
    return true;
}

namespace {

bool in_reference_cone(const LatticePoint& p, int k) {
    const LatticePoint s1 = seed_s1(), s2 = seed_s2(), s3 = seed_s3(k);
    IntMatrix m = IntMatrix::from_columns({s1, s2, s3});
    Int dm = det3(m);
    auto coeff = [&](int i) {
        std::vector<LatticePoint> cols{s1, s2, s3};
        cols[i] = p;
        return det3(IntMatrix::from_columns(cols));
    };
    for (int i = 0; i < 3; ++i)
        if (sgn(coeff(i)) * sgn(dm) < 0) return false;
    return true;
}

// p is a forced non-vertex whenever it would lie in a polytope alongside the
// seeds: eliminated iff the simplex conv{p, s1, s2, s3} contains a lattice
// point other than p outside the reference cone.  (q in the exclusion cone
// of p <=> p in conv{q, seed triangle}.)
bool eliminated_by_simplex(const LatticePoint& p, int k) {
    const LatticePoint corners[4] = {p, seed_s1(), seed_s2(), seed_s3(k)};
    struct Plane { LatticePoint n; Int c; };
    std::array<Plane, 4> planes;
    for (int skip = 0; skip < 4; ++skip) {
        std::array<LatticePoint, 3> tri;
        int t = 0;
        for (int i = 0; i < 4; ++i)
            if (i != skip) tri[t++] = corners[i];
        LatticePoint n = cross(tri[1] - tri[0], tri[2] - tri[0]);
        Int c = dot(n, tri[0]);
        if (dot(n, corners[skip]) < c) {
            n = -n;
            c = -c;
        }
        planes[skip] = {n, c};  // inside: dot >= c
    }
    Int xmin = corners[0].x, xmax = xmin, ymin = corners[0].y, ymax = ymin,
        zmin = corners[0].z, zmax = zmin;
    for (int i = 1; i < 4; ++i) {
        xmin = std::min(xmin, corners[i].x); xmax = std::max(xmax, corners[i].x);
        ymin = std::min(ymin, corners[i].y); ymax = std::max(ymax, corners[i].y);
        zmin = std::min(zmin, corners[i].z); zmax = std::max(zmax, corners[i].z);
    }
    for (Int x = xmin; x <= xmax; ++x)
        for (Int y = ymin; y <= ymax; ++y)
            for (Int z = zmin; z <= zmax; ++z) {
                LatticePoint q{x, y, z};
                if (q == p) continue;
                bool inside = true;
                for (const auto& pl : planes)
                    if (dot(pl.n, q) < pl.c) { inside = false; break; }
                if (!inside) continue;
                if (!in_reference_cone(q, k)) return true;
            }
    return false;
}

std::vector<LatticePoint> survivors_in_box(int k, int bx, int by, int bz, const Int& cap) {
    std::vector<LatticePoint> out;
    for (long x = -bx; x <= bx; ++x)
        for (long y = -by; y <= by; ++y)
            for (long z = -bz; z <= bz; ++z) {
                LatticePoint p{x, y, z};
                if (p.is_zero()) continue;
                if (halfspace_value(p, k) >= k) continue;
                if (content(p) != 1) continue;
                if (!volume_guards(p, k, cap)) continue;
                if (in_reference_cone(p, k)) continue;
                if (!eliminated_by_simplex(p, k)) out.push_back(p);
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

CandidateSet generate_candidates(int k, const SearchConfig& cfg) {
    if (k < 2) throw DomainError("generate_candidates: k must be >= 2");
    const Int cap = cfg.cap(k);
    int bx = cfg.box_x, by = cfg.box_y, bz = cfg.z_extent(k);
    auto base = survivors_in_box(k, bx, by, bz, cap);
    for (int round = 0; round < cfg.doubling_rounds; ++round) {
        bx *= 2; by *= 2; bz *= 2;
        auto bigger = survivors_in_box(k, bx, by, bz, cap);
        if (bigger != base) throw InstabilityError(std::move(base), std::move(bigger));
    }
    CandidateSet cs;
    cs.k = k;
    cs.points = std::move(base);
    cs.stability_certified = cfg.doubling_rounds > 0;
    return cs;
}

DifferenceReport compare_candidate_sets(const std::vector<LatticePoint>& first,
                                        const std::vector<LatticePoint>& second) {
    DifferenceReport r;
    std::set<LatticePoint> a(first.begin(), first.end()), b(second.begin(), second.end());
    for (const auto& p : a)
        if (!b.count(p)) r.only_in_first.push_back(p);
    for (const auto& p : b)
        if (!a.count(p)) r.only_in_second.push_back(p);
    return r;
}

}  // namespace fano3
