#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fano3/errors.hpp"

namespace fano3 {

// Exact arbitrary-precision integer and rational scalars.  All geometry in
// this library is carried out over these; there is no floating point.
using Int = mpz_class;
using Rat = mpq_class;

// A point of the lattice N = Z^3.
struct LatticePoint {
    Int x{0}, y{0}, z{0};

    LatticePoint() = default;
    LatticePoint(Int px, Int py, Int pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}
    LatticePoint(long px, long py, long pz) : x(px), y(py), z(pz) {}

    bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    bool operator<(const LatticePoint& o) const {
        if (int c = cmp(x, o.x); c != 0) return c < 0;
        if (int c = cmp(y, o.y); c != 0) return c < 0;
        return cmp(z, o.z) < 0;
    }

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y, z + o.z}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y, z - o.z}; }
    LatticePoint operator-() const { return {-x, -y, -z}; }
    friend LatticePoint operator*(const Int& s, const LatticePoint& p) {
        return {s * p.x, s * p.y, s * p.z};
    }

    bool is_zero() const { return x == 0 && y == 0 && z == 0; }
    std::string str() const;
};

Int dot(const LatticePoint& a, const LatticePoint& b);
LatticePoint cross(const LatticePoint& a, const LatticePoint& b);

// gcd of |x|,|y|,|z|; zero vector maps to 0.
Int content(const LatticePoint& v);

// true iff gcd(|x|,|y|,|z|) = 1.  Errors on the zero vector.
bool is_primitive(const LatticePoint& v);

// v divided by its content; errors on the zero vector.
LatticePoint primitivize(const LatticePoint& v);

// A 3 x n integer matrix, row-major, dimensions fixed at construction.
class IntMatrix {
  public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    // Columns are the given points.
    static IntMatrix from_columns(const std::vector<LatticePoint>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Int& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    Int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

    LatticePoint column(int c) const;
    std::vector<LatticePoint> columns() const;
    IntMatrix transposed() const;

    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }
    // (rows, cols, entries) lexicographic; total order used for canonical forms.
    bool operator<(const IntMatrix& o) const;

    std::string str() const;

  private:
    int rows_, cols_;
    std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Exact determinant of a 3x3 matrix.  DimensionError unless m is 3x3.
Int det3(const IntMatrix& m);
// Determinant of the 3x3 matrix with rows a, b, c.
Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

// true iff |det3(m)| = 1.
bool is_unimodular(const IntMatrix& m);

// Canonical form of a full-row-rank 3 x n matrix under the left GL(3,Z)
// action: the unique H with m = U.H, U unimodular, whose pivot block is
// lower-triangular with positive diagonal and sub-diagonal entries reduced
// into [0, pivot).  hermite_normal_form(U.m) == hermite_normal_form(m).
// RankError if the rows are dependent.
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace fano3
