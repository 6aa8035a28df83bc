#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fano3/geometry.hpp"

namespace fano3 {

// One classified variety: polytope plus computed and tabulated data.
struct ClassificationEntry {
    std::string id;          // e.g. "2.14" or "k.1@7"
    int k = 1;
    FanoPolytope polytope;
    Rat degree;              // (-K_X)^3
    int picard_rank = 0;     // rho(X)
    std::optional<long> grdb_id;
    std::optional<std::string> model;
};

// (-K_X)^3 = 6 vol(P*); delegates to anticanonical_volume.
Rat degree(const FanoPolytope& p);

// Rays minus 3 for a complete simplicial fan.  UnsupportedError if some
// facet is not a triangle.
int picard_rank(const FanoPolytope& p);

// Entry with computed invariants; id/grdb/model left to fixture matching.
ClassificationEntry make_entry(const FanoPolytope& p, int k);

// Renders "num" when integral, else "num/den".
std::string rat_str(const Rat& r);

// ClassificationEntry JSON object (see README for the schema).
std::string entry_to_json(const ClassificationEntry& e);
ClassificationEntry entry_from_json(const std::string& text);

// CSV row: id,k,degree,picard_rank,grdb_id
std::string entry_to_csv(const ClassificationEntry& e);

}  // namespace fano3
