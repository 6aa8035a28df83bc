#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano3/lattice.hpp"

namespace fano3 {

// One facet of a polytope: the plane <inward_normal, x> = -offset, with the
// interior on the > side.  inward_normal is primitive; offset > 0 exactly
// when the origin is strictly inside the facet's halfspace.
struct Facet {
    std::vector<int> vertex_indices;  // ascending indices into vertices()
    LatticePoint inward_normal;
    Int offset;
};

// A full-dimensional lattice polytope with derived facet structure.  The k
// tag records the prescribed singularity index (k = 1 encodes the smooth
// case); it is carried, not validated here -- see classify::validate.
class FanoPolytope {
  public:
    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    int k() const { return k_; }
    void set_k(int k) { k_ = k; }

    bool origin_interior() const;        // every facet offset > 0
    bool vertices_primitive() const;     // every vertex has coprime coordinates
    bool is_fano() const { return origin_interior() && vertices_primitive(); }
    bool simplicial() const;             // every facet is a triangle

    friend FanoPolytope convex_hull(const std::vector<LatticePoint>& points, int k);

  private:
    std::vector<LatticePoint> vertices_;  // sorted, extreme points only
    std::vector<Facet> facets_;
    int k_ = 1;
};

// Exact convex hull of >= 4 full-dimensional points.  Non-extreme input
// points are dropped.  DimensionError on degenerate input; DomainError if the
// hull has more than 14 vertices (safety cap).
FanoPolytope convex_hull(const std::vector<LatticePoint>& points, int k = 1);

// true iff q satisfies every facet inequality (strictly, when strict).
bool contains(const FanoPolytope& p, const LatticePoint& q, bool strict);

enum class PointLocation { Vertex, Boundary, Interior };

struct LabeledPoint {
    LatticePoint point;
    PointLocation location;
};

// All lattice points of the closed polytope, each labeled, in lexicographic
// order.  Bounding-box scan filtered through the facet inequalities.
std::vector<LabeledPoint> lattice_points(const FanoPolytope& p);

// (-K_X)^3 of the toric variety of the spanning fan: 6 * vol(P*) where
// P* = { u : <u,v> >= -1 for all vertices v }, computed exactly by dual
// vertex enumeration and fan triangulation.
Rat anticanonical_volume(const FanoPolytope& p);

// Lexicographically minimal hermite_normal_form over all column orderings of
// the vertex matrix (column-major comparison).  Complete invariant:
// normal_form(P) == normal_form(Q) iff P and Q differ by a GL(3,Z) map.
IntMatrix normal_form(const FanoPolytope& p);

// Same, for a bare vertex set.
IntMatrix normal_form(const std::vector<LatticePoint>& vertices);

// Canonical JSON: {"k": int, "vertices": [[x,y,z], ...]}.
std::string polytope_to_json(const FanoPolytope& p);
FanoPolytope polytope_from_json(const std::string& text);

}  // namespace fano3
