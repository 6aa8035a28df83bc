#pragma once
#include <algorithm>

#include <array>
#include <optional>
#include <vector>

#include "fano3/lattice.hpp"

namespace fano3 {

// Seed vertices of the distinguished singular facet conv{s1, s2, s3}.
inline LatticePoint seed_s1() { return {1, 0, 0}; }
inline LatticePoint seed_s2() { return {0, 1, 0}; }
inline LatticePoint seed_s3(int k) { return {-1, -1, -k}; }

// k*x + k*y - 3*z; candidate vertices live strictly below k.
Int halfspace_value(const LatticePoint& p, int k);

// The residue-class parameters a..e of the closed-form candidate sets.
struct CandidateParameters {
    int k;
    Int a, b, c, d, e;

    static CandidateParameters for_k(int k);  // DomainError if k < 4
};

// Controls for the closed-form sets.
struct ClosedFormOptions {
    // Apply the two documented misprint corrections (U2 terminal point,
    // U4 first point).  Off = materialize the sets literally as printed.
    bool fix_typos = true;
    // Relax the step-2 z-progressions to step 1 over the same span.  This is
    // the k-generic envelope implicitly used by the published L-set lists;
    // see compute_L_sets.
    bool relax_parity = false;
};

struct CandidateSet {
    int k = 0;
    // Subsets U1..U10 (closed-form source only; empty for searched sets).
    std::array<std::vector<LatticePoint>, 10> subsets;
    // Deduplicated union, sorted.
    std::vector<LatticePoint> points;
    // True when produced by generate_candidates and the survivor set was
    // identical across every box-doubling round.
    bool stability_certified = false;
};

// The sets U1..U10 of integer points, literally as printed (modulo the
// options above).  DomainError if k < 4.
CandidateSet closed_form_U(int k, ClosedFormOptions opts = {});

// The cone based at p spanned by the directions p - s_i: if a polytope
// vertex lies in it, p is trapped inside the hull and cannot be a vertex.
class ExclusionCone {
  public:
    // DomainError if p is not strictly inside the open half-space, or lies
    // in the reference cone.
    ExclusionCone(const LatticePoint& p, int k);

    bool contains(const LatticePoint& q) const;
    const LatticePoint& apex() const { return apex_; }

  private:
    LatticePoint apex_;
    std::array<LatticePoint, 3> dirs_;
};

struct SearchConfig {
    // Per-axis half-widths: x in [-box_x, box_x], y likewise; z defaults to
    // 2k+8 when unset.
    int box_x = 8, box_y = 8;
    std::optional<int> box_z;
    // Volume guard: a candidate must
    // satisfy |z| <= cap, |ky-z| <= cap, |kx-z| <= cap.  The default
    // min(4k, 2k+8) keeps the whole guard region inside the default box, so
    // survivor sets are stable under box enlargement by construction.
    std::optional<Int> volume_cap;
    int doubling_rounds = 1;

    int z_extent(int k) const { return box_z ? *box_z : 2 * k + 8; }
    Int cap(int k) const { return volume_cap ? *volume_cap : Int(std::min(4 * k, 2 * k + 8)); }
};

// Survivor-set instability across box doublings: carries both sets.
struct InstabilityError : std::runtime_error {
    std::vector<LatticePoint> base_survivors;
    std::vector<LatticePoint> doubled_survivors;
    InstabilityError(std::vector<LatticePoint> base, std::vector<LatticePoint> doubled);
};

// The three normalized tetrahedron volumes with apex p stay within cap:
// |z| <= cap, |ky - z| <= cap, |kx - z| <= cap.
bool volume_guards(const LatticePoint& p, int k, const Int& cap);

// Elimination-based candidate generation (k >= 2): keep the primitive points
// of the box that lie strictly inside the open half-space, outside the
// reference cone, within the volume guards, and whose simplex conv{p, s1,
// s2, s3} contains no lattice point other than p outside the reference cone.
// Runs cfg.doubling_rounds box enlargements; throws InstabilityError if the
// survivor set changes.
CandidateSet generate_candidates(int k, const SearchConfig& cfg = {});

// Points of `points` minus `reference` and vice versa (both sorted).
struct DifferenceReport {
    std::vector<LatticePoint> only_in_first;
    std::vector<LatticePoint> only_in_second;
};
DifferenceReport compare_candidate_sets(const std::vector<LatticePoint>& first,
                                        const std::vector<LatticePoint>& second);

}  // namespace fano3
