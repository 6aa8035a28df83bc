#pragma once

#include <string>
#include <vector>

#include "fano3/invariants.hpp"

namespace fano3 {

enum class EdgeColor { Blue, Red };  // Blue: point blow-up; Red: line blow-up

struct CascadeEdge {
    std::string from_id;  // the blow-up (one more vertex)
    std::string to_id;    // the blow-down target
    EdgeColor color;
    LatticePoint added_vertex;  // in the blow-up's coordinates
};

struct CascadeGraph {
    std::vector<ClassificationEntry> nodes;
    std::vector<CascadeEdge> edges;
};

struct Blowup {
    FanoPolytope polytope;
    LatticePoint added_vertex;
};

// Star subdivisions at smooth facets: add the sum of the three facet
// generators; keep results that still validate for the same k.
std::vector<Blowup> point_blowups(const FanoPolytope& p, int k);

// Star subdivisions at edges whose two adjacent facet cones are smooth: add
// the sum of the edge endpoints; keep results that validate.
std::vector<Blowup> line_blowups(const FanoPolytope& p, int k);

// Detect all blow-up relations within one k-classification.  Edges point
// from the blow-up to the blow-down target.  InvariantViolation if a
// detected edge fails the vertex-count or degree monotonicity checks.
CascadeGraph build_cascade(const std::vector<ClassificationEntry>& entries);

// Deterministic DOT rendering: nodes ranked by Picard rank, colored edges.
std::string to_dot(const CascadeGraph& g);

}  // namespace fano3
