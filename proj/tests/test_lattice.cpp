#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fano3/lattice.hpp"

using namespace fano3;

namespace {

// Random unimodular 3x3 as a product of elementary row operations.
IntMatrix random_unimodular(std::mt19937& rng) {
    IntMatrix u = IntMatrix::identity(3);
    std::uniform_int_distribution<int> op(0, 2), idx(0, 2), coeff(-3, 3);
    for (int step = 0; step < 12; ++step) {
        int i = idx(rng), j = idx(rng);
        switch (op(rng)) {
            case 0: {  // row_i += c * row_j
                if (i == j) break;
                Int c = coeff(rng);
                for (int t = 0; t < 3; ++t) u.at(i, t) += c * u.at(j, t);
                break;
            }
            case 1: {  // swap
                if (i == j) break;
                for (int t = 0; t < 3; ++t) std::swap(u.at(i, t), u.at(j, t));
                break;
            }
            default: {  // negate
                for (int t = 0; t < 3; ++t) u.at(i, t) = -u.at(i, t);
                break;
            }
        }
    }
    return u;
}

IntMatrix random_matrix(std::mt19937& rng, int cols) {
    std::uniform_int_distribution<int> e(-9, 9);
    IntMatrix m(3, cols);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = e(rng);
    return m;
}

bool full_rank(const IntMatrix& m) {
    for (int a = 0; a < m.cols(); ++a)
        for (int b = a + 1; b < m.cols(); ++b)
            for (int c = b + 1; c < m.cols(); ++c)
                if (det3(m.column(a), m.column(b), m.column(c)) != 0) return true;
    return false;
}

}  // namespace

TEST_CASE("det3 basic values") {
    CHECK(det3(IntMatrix::identity(3)) == 1);
    CHECK(det3(LatticePoint{1, 0, 0}, {0, 1, 0}, {-1, -1, -2}) == -2);
    CHECK_THROWS_AS(det3(IntMatrix(3, 4)), DimensionError);
}

TEST_CASE("det3 of the seed-face rows is ky - z") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> e(-20, 20);
    for (int t = 0; t < 200; ++t) {
        int k = 1 + (t % 13);
        LatticePoint v{e(rng), e(rng), e(rng)};
        Int d = det3({1, 0, 0}, {-1, -1, -k}, v);
        CHECK(abs(d) == abs(Int(k) * v.y - v.z));
    }
}

TEST_CASE("det3 symmetry properties") {
    std::mt19937 rng(11);
    for (int t = 0; t < 100; ++t) {
        IntMatrix m = random_matrix(rng, 3);
        CHECK(abs(det3(m)) == abs(det3(m.transposed())));
        IntMatrix s = m;  // swapping two rows flips the sign
        for (int c = 0; c < 3; ++c) std::swap(s.at(0, c), s.at(1, c));
        CHECK(det3(s) == -det3(m));
    }
}

TEST_CASE("is_primitive") {
    CHECK(is_primitive({1, 0, 0}));
    CHECK_FALSE(is_primitive({-2, -2, -4}));
    for (int k = 1; k <= 40; ++k) CHECK(is_primitive({-1, -1, -k}));
    CHECK_THROWS_AS(is_primitive({0, 0, 0}), DomainError);
    CHECK(primitivize({-2, -2, -4}) == LatticePoint{-1, -1, -2});
}

TEST_CASE("is_unimodular") {
    CHECK(is_unimodular(IntMatrix::identity(3)));
    IntMatrix d = IntMatrix::identity(3);
    d.at(2, 2) = 2;
    CHECK_FALSE(is_unimodular(d));
    CHECK(is_unimodular(IntMatrix::from_columns({{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}})));
}

TEST_CASE("hermite normal form fixed points") {
    CHECK(hermite_normal_form(IntMatrix::identity(3)) == IntMatrix::identity(3));
    for (int k = 1; k <= 9; ++k) {
        IntMatrix d = IntMatrix::identity(3);
        d.at(2, 2) = k;
        CHECK(hermite_normal_form(d) == d);
    }
}

TEST_CASE("hermite normal form is a left GL(3,Z) invariant") {
    std::mt19937 rng(23);
    for (int t = 0; t < 200; ++t) {
        int cols = 3 + (t % 5);
        IntMatrix m = random_matrix(rng, cols);
        if (!full_rank(m)) continue;
        IntMatrix u = random_unimodular(rng);
        REQUIRE(is_unimodular(u));
        CHECK(hermite_normal_form(u * m) == hermite_normal_form(m));
        CHECK(hermite_normal_form(hermite_normal_form(m)) == hermite_normal_form(m));
    }
}

TEST_CASE("hermite normal form shape on invertible 3x3") {
    std::mt19937 rng(31);
    for (int t = 0; t < 100; ++t) {
        IntMatrix m = random_matrix(rng, 3);
        if (det3(m) == 0) continue;
        IntMatrix h = hermite_normal_form(m);
        CHECK(h.at(0, 1) == 0);
        CHECK(h.at(0, 2) == 0);
        CHECK(h.at(1, 2) == 0);
        for (int i = 0; i < 3; ++i) CHECK(h.at(i, i) > 0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < i; ++j) {
                CHECK(h.at(i, j) >= 0);
                CHECK(h.at(i, j) < h.at(j, j));
            }
        CHECK(abs(det3(h)) == abs(det3(m)));
    }
}

TEST_CASE("hermite normal form rejects rank-deficient input") {
    IntMatrix zero(3, 3);
    CHECK_THROWS_AS(hermite_normal_form(zero), RankError);
    IntMatrix planar = IntMatrix::from_columns({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
    CHECK_THROWS_AS(hermite_normal_form(planar), RankError);
}

TEST_CASE("LatticePoint arithmetic") {
    LatticePoint a{1, 2, 3}, b{-1, 0, 5};
    CHECK(a + b == LatticePoint{0, 2, 8});
    CHECK(a - b == LatticePoint{2, 2, -2});
    CHECK(Int(2) * a == LatticePoint{2, 4, 6});
    CHECK(dot(a, b) == 14);
    CHECK(cross({1, 0, 0}, {0, 1, 0}) == LatticePoint{0, 0, 1});
    CHECK(content({6, -9, 12}) == 3);
}
