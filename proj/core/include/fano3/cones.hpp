#pragma once

#include <array>
#include <string>

#include "fano3/lattice.hpp"

namespace fano3 {

// A simplicial cone spanned by three primitive, independent generators.
struct SimplicialCone {
    std::array<LatticePoint, 3> generators;

    SimplicialCone(LatticePoint a, LatticePoint b, LatticePoint c);
};

// Classification of a maximal cone: smooth chart, the reference
// 1/k(1,1,1) chart, or some other singularity (tagged with its index).
struct ConeType {
    enum class Tag { Smooth, QuotientOneOverK, Other };
    Tag tag;
    Int index;  // cone index; 1 for Smooth, k for QuotientOneOverK

    static ConeType smooth() { return {Tag::Smooth, 1}; }
    static ConeType quotient(Int k) { return {Tag::QuotientOneOverK, std::move(k)}; }
    static ConeType other(Int index) { return {Tag::Other, std::move(index)}; }

    bool operator==(const ConeType& o) const { return tag == o.tag && index == o.index; }
    std::string str() const;
};

// |det| of the generator matrix: the order of the quotient group.
Int cone_index(const SimplicialCone& c);

// Lexicographic minimum over the 6 generator orderings of the Hermite form of
// the generator matrix.  Equal forms <=> GL(3,Z)-equivalent cones.
IntMatrix cone_canonical_form(const SimplicialCone& c);

// The reference cone over conv{(1,0,0),(0,1,0),(-1,-1,-k)}.
SimplicialCone reference_cone(int k);

// Smooth if index 1; QuotientOneOverK(k) if canonically equal to the
// reference cone for this k; Other(index) otherwise.
ConeType classify_cone(const SimplicialCone& c, int k);

}  // namespace fano3
