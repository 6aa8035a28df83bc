#include "fano3/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace fano3 {

std::string LatticePoint::str() const {
    std::ostringstream os;
    os << "(" << x << "," << y << "," << z << ")";
    return os.str();
}

Int dot(const LatticePoint& a, const LatticePoint& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Int content(const LatticePoint& v) {
    Int g = gcd(v.x, v.y);
    return gcd(g, v.z);
}

bool is_primitive(const LatticePoint& v) {
    if (v.is_zero()) throw DomainError("is_primitive: zero vector");
    return content(v) == 1;
}

LatticePoint primitivize(const LatticePoint& v) {
    if (v.is_zero()) throw DomainError("primitivize: zero vector");
    Int g = content(v);
    return {v.x / g, v.y / g, v.z / g};
}

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw DimensionError("IntMatrix: nonpositive dimension");
    e_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticePoint>& cols) {
    if (cols.empty()) throw DimensionError("from_columns: no columns");
    IntMatrix m(3, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) {
        m.at(0, c) = cols[c].x;
        m.at(1, c) = cols[c].y;
        m.at(2, c) = cols[c].z;
    }
    return m;
}

LatticePoint IntMatrix::column(int c) const {
    if (rows_ != 3) throw DimensionError("column: matrix is not 3-row");
    return {at(0, c), at(1, c), at(2, c)};
}

std::vector<LatticePoint> IntMatrix::columns() const {
    std::vector<LatticePoint> out;
    out.reserve(cols_);
    for (int c = 0; c < cols_; ++c) out.push_back(column(c));
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < e_.size(); ++i) {
        if (int c = cmp(e_[i], o.e_[i]); c != 0) return c < 0;
    }
    return false;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r ? "; " : "[");
        for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
    }
    os << "]";
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("operator*: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) {
            Int s = 0;
            for (int t = 0; t < a.cols(); ++t) s += a.at(r, t) * b.at(t, c);
            out.at(r, c) = s;
        }
    return out;
}

Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
    return dot(a, cross(b, c));
}

Int det3(const IntMatrix& m) {
    if (m.rows() != 3 || m.cols() != 3) throw DimensionError("det3: matrix is not 3x3");
    return det3(LatticePoint{m.at(0, 0), m.at(0, 1), m.at(0, 2)},
                LatticePoint{m.at(1, 0), m.at(1, 1), m.at(1, 2)},
                LatticePoint{m.at(2, 0), m.at(2, 1), m.at(2, 2)});
}

bool is_unimodular(const IntMatrix& m) {
    Int d = det3(m);
    return d == 1 || d == -1;
}

namespace {

// Row operations on a 3 x n matrix held as an array of rows.
using Row = std::vector<Int>;

void row_axpy(Row& r, const Row& s, const Int& q) {
    for (size_t i = 0; i < r.size(); ++i) r[i] -= q * s[i];
}

// Concentrate the gcd of column `col` over `rows` into the last row of
// `rows`, zeroing the others, by integer row operations.
void gcd_into_last(std::vector<Row>& m, int col, std::vector<int> rows) {
    for (;;) {
        std::vector<int> nz;
        for (int r : rows)
            if (m[r][col] != 0) nz.push_back(r);
        if (nz.size() <= 1) {
            if (!nz.empty() && nz[0] != rows.back()) std::swap(m[nz[0]], m[rows.back()]);
            return;
        }
        std::sort(nz.begin(), nz.end(),
                  [&](int a, int b) { return cmp(abs(m[a][col]), abs(m[b][col])) < 0; });
        int r0 = nz[0];
        for (size_t i = 1; i < nz.size(); ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[nz[i]][col].get_mpz_t(), m[r0][col].get_mpz_t());
            row_axpy(m[nz[i]], m[r0], q);
        }
    }
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& in) {
    if (in.rows() != 3) throw DimensionError("hermite_normal_form: matrix is not 3-row");
    const int n = in.cols();
    std::vector<Row> m(3, Row(n));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < n; ++c) m[r][c] = in.at(r, c);

    // Pivot columns: the greedy first rank-increasing triple (invariant under
    // the left action).
    std::vector<int> piv;
    {
        std::vector<LatticePoint> basis;
        for (int c = 0; c < n && piv.size() < 3; ++c) {
            LatticePoint v{m[0][c], m[1][c], m[2][c]};
            bool indep;
            if (basis.empty())
                indep = !v.is_zero();
            else if (basis.size() == 1)
                indep = !cross(basis[0], v).is_zero();
            else
                indep = det3(basis[0], basis[1], v) != 0;
            if (indep) {
                basis.push_back(v);
                piv.push_back(c);
            }
        }
    }
    if (piv.size() < 3) throw RankError("hermite_normal_form: rank-deficient input");

    // Lower-triangular reduction on the pivot columns: gcd of pivot column 2
    // into row 2, of pivot column 1 into row 1 (rows 0..1), pivot column 0
    // stays in row 0.
    gcd_into_last(m, piv[2], {0, 1, 2});
    gcd_into_last(m, piv[1], {0, 1});
    for (int r = 0; r < 3; ++r)
        if (m[r][piv[r]] < 0)
            for (auto& v : m[r]) v = -v;

    // Reduce sub-diagonal entries into [0, pivot) against the pivot row of
    // their column, highest column first so earlier reductions survive.
    for (int j = 2; j >= 0; --j) {
        for (int r = j + 1; r < 3; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][piv[j]].get_mpz_t(), m[j][piv[j]].get_mpz_t());
            if (q != 0) row_axpy(m[r], m[j], q);
        }
    }

    IntMatrix out(3, n);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < n; ++c) out.at(r, c) = m[r][c];
    return out;
}

}  // namespace fano3
