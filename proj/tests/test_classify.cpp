#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fano3/classify.hpp"
#include "fano3/fixtures.hpp"

using namespace fano3;

namespace {

std::vector<LatticePoint> printed_L1() {
    return {{-2, -1, 1}, {-1, -2, 1}, {-1, 0, 1}, {-1, 1, 1}, {-1, 2, 1}, {0, -1, 1},
            {0, 0, 1},  {0, 1, 1},  {1, -1, 1}, {1, 0, 1},  {2, -1, 1}};
}

std::vector<LatticePoint> printed_L2(int k) {
    return {{-3, -2, -2 * k + 1}, {-2, -1, -k + 1}, {-1, -1, -k + 1}, {-1, 0, 1},
            {-1, 1, k + 1},      {0, 0, 1},        {1, 0, 1},        {1, 1, k + 1},
            {1, 2, 2 * k + 1},   {2, 1, k + 1},    {3, 1, k + 1}};
}

std::vector<LatticePoint> printed_L3(int k) {
    return {{-2, -3, -2 * k + 1}, {-1, -2, -k + 1}, {-1, -1, -k + 1}, {0, -1, 1},
            {0, 0, 1},           {0, 1, 1},        {1, -1, k + 1},   {1, 1, k + 1},
            {1, 2, k + 1},       {1, 3, k + 1},    {2, 1, 2 * k + 1}};
}

std::set<LatticePoint> to_set(const std::vector<LatticePoint>& v) { return {v.begin(), v.end()}; }

FixtureTable fixtures_for(int k) { return table_for_k(k, std::filesystem::path(FANO3_TEST_DATA_DIR)); }

}  // namespace

TEST_CASE("L-sets from the relaxed envelope reproduce the printed lists") {
    ClosedFormOptions relaxed;
    relaxed.relax_parity = true;
    for (int k : {4, 5, 6, 7, 8}) {
        LSets l = compute_L_sets(k, closed_form_U(k, relaxed).points);
        CHECK(to_set(l.L1) == to_set(printed_L1()));
        CHECK(to_set(l.L2) == to_set(printed_L2(k)));
        CHECK(to_set(l.L3) == to_set(printed_L3(k)));
    }
}

TEST_CASE("(0,0,1) lies in all three L-sets") {
    for (int k : {2, 4, 7}) {
        LSets l = compute_L_sets(k, generate_candidates(k).points);
        for (const auto* L : {&l.L1, &l.L2, &l.L3})
            CHECK(to_set(*L).count({0, 0, 1}) == 1);
    }
}

TEST_CASE("compute_L_sets guards") {
    CHECK_THROWS_AS(compute_L_sets(1, {{0, 0, 1}}), DomainError);
    CHECK_THROWS_AS(compute_L_sets(4, {}), DomainError);
}

TEST_CASE("validate") {
    CHECK(validate(convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -4}}, 4), 4));
    CHECK(validate(convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -4}, {-1, -1, -3}}, 4), 4));
    // a second singular cone invalidates
    CHECK_FALSE(validate(
        convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -4}, {-2, -1, 1}, {-1, -1, -3}}, 4),
        4));
    // the smooth case k = 1
    CHECK(validate(convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, 1), 1));
    CHECK_FALSE(validate(convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -2}}, 1), 1));
    // wrong k: the singular facet is 1/4(1,1,1), not 1/5(1,1,1)
    CHECK_FALSE(validate(convex_hull({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -4}}, 5), 5));
}

TEST_CASE("search finds exactly the two classes at k=4,5") {
    for (int k : {4, 5}) {
        CandidateSet cand = generate_candidates(k);
        SearchResult res = search(k, cand);
        REQUIRE(res.polytopes.size() == 2);
        FixtureTable t = fixtures_for(k);
        REQUIRE(t.rows.size() == 2);
        CHECK(normal_form(res.polytopes[0]) == normal_form(t.rows[0].vertices));
        CHECK(normal_form(res.polytopes[1]) == normal_form(t.rows[1].vertices));
    }
}

TEST_CASE("every output carries the seed facet and exactly one singular cone") {
    CandidateSet cand = generate_candidates(4);
    SearchResult res = search(4, cand);
    for (const auto& p : res.polytopes) {
        auto vs = to_set(p.vertices());
        CHECK(vs.count({1, 0, 0}) == 1);
        CHECK(vs.count({0, 1, 0}) == 1);
        CHECK(vs.count({-1, -1, -4}) == 1);
        CHECK(validate(p, 4));
    }
}

TEST_CASE("worked branch of the proof at k=4") {
    CandidateSet cand = generate_candidates(4);
    SearchOptions opts;
    opts.trace_v1 = LatticePoint{-2, -1, 1};
    SearchResult res = search(4, cand, opts);
    REQUIRE(res.trace.has_value());
    const BranchTrace& tr = *res.trace;
    CHECK(tr.v1 == LatticePoint{-2, -1, 1});
    // v2 is forced to (-1,-1,-3); the other two plane-compatible L2 points
    // trap forbidden lattice points
    REQUIRE(tr.admissible_v2.size() == 1);
    CHECK(tr.admissible_v2[0] == LatticePoint{-1, -1, -3});
    // v3 is then forced to the same point
    REQUIRE(tr.admissible_v3.size() == 1);
    REQUIRE(tr.admissible_v3[0].second.size() == 1);
    CHECK(tr.admissible_v3[0].second[0] == LatticePoint{-1, -1, -3});
    // the three bounding planes are x+y+4z < 1, x-2y < 1, y-2x < 1
    REQUIRE(tr.completions.size() == 1);
    const auto& comp = tr.completions[0];
    CHECK(comp.planes[0].normal == LatticePoint{-1, -1, -4});
    CHECK(comp.planes[0].rhs == -1);
    CHECK(comp.planes[1].normal == LatticePoint{-1, 2, 0});
    CHECK(comp.planes[1].rhs == -1);
    CHECK(comp.planes[2].normal == LatticePoint{2, -1, 0});
    CHECK(comp.planes[2].rhs == -1);
    // no candidate satisfies all three bounds; the branch dies
    CHECK(comp.extension_pool.empty());
    CHECK(comp.polytopes_found == 0);
}

TEST_CASE("search determinism across thread counts") {
    CandidateSet cand = generate_candidates(4);
    SearchOptions one;
    one.threads = 1;
    SearchOptions many;
    many.threads = 4;
    SearchResult a = search(4, cand, one);
    SearchResult b = search(4, cand, many);
    REQUIRE(a.polytopes.size() == b.polytopes.size());
    for (size_t i = 0; i < a.polytopes.size(); ++i)
        CHECK(a.polytopes[i].vertices() == b.polytopes[i].vertices());
}

TEST_CASE("exhaustive mode agrees with the pruned search at k=4") {
    CandidateSet cand = generate_candidates(4);
    SearchOptions pruned;
    SearchOptions exhaustive;
    exhaustive.exhaustive = true;
    SearchResult a = search(4, cand, pruned);
    SearchResult b = search(4, cand, exhaustive);
    REQUIRE(a.polytopes.size() == b.polytopes.size());
    for (size_t i = 0; i < a.polytopes.size(); ++i)
        CHECK(a.polytopes[i].vertices() == b.polytopes[i].vertices());
}

TEST_CASE("viability rejects vertex sets that trap forbidden points") {
    // (-2,-1,-3) with v1 = (-2,-1,1): the segment between them holds
    // (-2,-1,-2) .. (-2,-1,0), all outside the reference cone
    std::vector<LatticePoint> w{{1, 0, 0}, {0, 1, 0}, {-1, -1, -4}, {-2, -1, 1}, {-2, -1, -3}};
    CHECK_FALSE(viable_vertex_set(w, 4));
    std::vector<LatticePoint> ok{{1, 0, 0}, {0, 1, 0}, {-1, -1, -4}, {-2, -1, 1}};
    CHECK(viable_vertex_set(ok, 4));
}
