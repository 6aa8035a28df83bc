#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fano3/candidates.hpp"
#include "fano3/geometry.hpp"

namespace fano3 {

// The three pools for the vertices adjacent to the singular facet's edges:
// L1 pairs with {s1,s2}, L2 with {s1,s3}, L3 with {s2,s3}.
struct LSets {
    std::vector<LatticePoint> L1, L2, L3;
};

// Filter a candidate set by the smoothness condition |det| = 1 on the face
// spanned with the seed pair, and by the side condition: the face plane must
// miss the origin and leave both the origin and the omitted seed vertex
// strictly on its inner side.  Points outside the open half-space are
// dropped first.  DomainError on an empty candidate set or k < 2.
LSets compute_L_sets(int k, const std::vector<LatticePoint>& candidates);

// A strict bounding plane <normal, x> > rhs contributed by a chosen face.
struct BoundingPlane {
    LatticePoint normal;
    Int rhs;
    std::array<LatticePoint, 3> face;
};

// Record of one v1-branch of the search, for inspection and tests.
struct BranchTrace {
    LatticePoint v1;
    std::vector<LatticePoint> admissible_v2;
    // per admissible v2: the admissible v3 list
    std::vector<std::pair<LatticePoint, std::vector<LatticePoint>>> admissible_v3;
    // per complete (v2, v3): the three bounding planes and the extension pool
    struct Completion {
        LatticePoint v2, v3;
        std::array<BoundingPlane, 3> planes;
        std::vector<LatticePoint> extension_pool;
        int polytopes_found = 0;
    };
    std::vector<Completion> completions;
};

struct SearchOptions {
    // Skip the intermediate viability pruning and reject completed hulls
    // only.  Same results, slower; used to cross-check the pruning.
    bool exhaustive = false;
    // Worker threads across v1 branches; 0 = hardware concurrency.
    int threads = 1;
    // When set, fill a BranchTrace for this v1.
    std::optional<LatticePoint> trace_v1;
};

struct SearchResult {
    std::vector<FanoPolytope> polytopes;  // one per normal form, sorted
    std::optional<BranchTrace> trace;
};

// true iff p is a valid Fano polytope whose facets are all triangles, with
// exactly one facet cone equal to the reference 1/k(1,1,1) cone -- the seed
// facet conv{s1,s2,s3} -- and every other facet cone smooth.  For k = 1:
// no singular facet, every cone smooth.
bool validate(const FanoPolytope& p, int k);

// Empty when validate(p, k) holds; otherwise a description of the first
// failing condition, naming the offending facet cone when there is one.
std::string validate_failure(const FanoPolytope& p, int k);

// Every chosen point is a hull vertex and every lattice point of the hull
// is a chosen point or lies in the reference cone.  These failures cannot
// be repaired by adding vertices.
bool viable_vertex_set(const std::vector<LatticePoint>& w, int k);

// The classification search, seeded on the singular facet conv{s1,s2,s3}:
// enumerate (v1, v2, v3) from the L-sets, extend by candidate subsets, keep
// hulls passing validate, and return one representative per GL(3,Z) class,
// sorted by (vertex count, degree, normal form).
SearchResult search(int k, const CandidateSet& candidates, const SearchOptions& opts = {});

}  // namespace fano3
