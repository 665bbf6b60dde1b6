#pragma once

// Exact vectors and matrices over Integer and Rational.
//
// Determinants and solves use fraction-free (Bareiss) elimination on
// integer matrices; rational inputs are first scaled row by row to integers.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "irrdec/error.hpp"
#include "irrdec/rational.hpp"

namespace irrdec {

template <class T>
class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim, const T& fill = T(0)) : entries_(dim, fill) {}
    Vec(std::initializer_list<T> init) : entries_(init) {}
    explicit Vec(std::vector<T> entries) : entries_(std::move(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    const T& operator[](std::size_t i) const { return entries_[i]; }
    T& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<T>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const T& v) { return v == T(0); });
    }

    Vec& operator+=(const Vec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        check_dim(o);
        for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
        return *this;
    }
    Vec& operator*=(const T& c) {
        for (auto& e : entries_) e *= c;
        return *this;
    }
    Vec operator-() const {
        Vec r(*this);
        for (auto& e : r.entries_) e = -e;
        return r;
    }
    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(const T& c, Vec v) { return v *= c; }
    friend Vec operator*(Vec v, const T& c) { return v *= c; }

    friend bool operator==(const Vec& a, const Vec& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const Vec& a, const Vec& b) { return a.entries_ < b.entries_; }

    std::string str(const char* sep = " ") const {
        std::string out;
        for (std::size_t i = 0; i < dim(); ++i) {
            if (i) out += sep;
            out += entries_[i].str();
        }
        return out;
    }

private:
    void check_dim(const Vec& o) const {
        if (o.dim() != dim())
            throw DimensionError("vector dimension mismatch: " + std::to_string(dim()) + " vs " +
                                 std::to_string(o.dim()));
    }

    std::vector<T> entries_;
};

using IntVector = Vec<Integer>;
using RatVector = Vec<Rational>;

template <class A, class B>
auto dot(const Vec<A>& a, const Vec<B>& b) {
    if (a.dim() != b.dim()) throw DimensionError("dot product dimension mismatch");
    using R = std::conditional_t<std::is_same_v<A, Rational> || std::is_same_v<B, Rational>,
                                 Rational, Integer>;
    R acc(0);
    for (std::size_t i = 0; i < a.dim(); ++i) acc += R(a[i]) * R(b[i]);
    return acc;
}

inline RatVector to_rational(const IntVector& v) {
    std::vector<Rational> out;
    out.reserve(v.dim());
    for (const auto& e : v) out.emplace_back(e);
    return RatVector(std::move(out));
}

// Least common multiple of all denominators (1 for the empty vector).
inline Integer common_denominator(const RatVector& v) {
    Integer l = 1;
    for (const auto& e : v) l = lcm(l, e.den());
    return l;
}

// v scaled by its common denominator; exact integer vector.
inline IntVector clear_denominators(const RatVector& v) {
    Integer l = common_denominator(v);
    std::vector<Integer> out;
    out.reserve(v.dim());
    for (const auto& e : v) out.push_back(e.num() * (l / e.den()));
    return IntVector(std::move(out));
}

// Divides by the gcd of all entries. Zero vector stays zero.
inline IntVector make_primitive(IntVector v) {
    Integer g = 0;
    for (const auto& e : v) g = gcd(g, abs(e));
    if (g > 1)
        for (std::size_t i = 0; i < v.dim(); ++i) v[i] /= g;
    return v;
}

// First nonzero entry made positive.
inline IntVector canonical_orientation(IntVector v) {
    for (const auto& e : v) {
        if (e != 0) {
            if (e < 0) v = -v;
            break;
        }
    }
    return v;
}

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].dim() != cols) throw DimensionError("row dimension mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].dim() != rows) throw DimensionError("column dimension mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Vec<T> row(std::size_t i) const {
        return Vec<T>(std::vector<T>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_));
    }
    Vec<T> column(std::size_t j) const {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return Vec<T>(std::move(out));
    }

    Matrix select_rows(const std::vector<std::size_t>& which) const {
        Matrix m(which.size(), cols_);
        for (std::size_t i = 0; i < which.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(which[i], j);
        return m;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    template <class U>
    auto operator*(const Vec<U>& v) const {
        if (v.dim() != cols_) throw DimensionError("matrix-vector dimension mismatch");
        using R = std::conditional_t<std::is_same_v<T, Rational> || std::is_same_v<U, Rational>,
                                     Rational, Integer>;
        Vec<R> out(rows_, R(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            R acc(0);
            for (std::size_t j = 0; j < cols_; ++j) acc += R((*this)(i, j)) * R(v[j]);
            out[i] = acc;
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

namespace detail {

// Row-scales a rational matrix to integers. Returns the product of the
// scaling factors so that det(original) = det(scaled) / factor.
inline IntMatrix scale_to_integer(const RatMatrix& m, Integer& factor) {
    IntMatrix out(m.rows(), m.cols());
    factor = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).num() * (l / m(i, j).den());
        factor *= l;
    }
    return out;
}

// In-place Bareiss forward elimination on the first `pivot_cols` columns.
// Returns the rank found and records the sign of row swaps. After the call
// the leading rank x rank block is upper triangular and the last pivot equals
// the determinant of that block up to `sign`.
inline std::size_t bareiss_forward(IntMatrix& a, std::size_t pivot_cols, int& sign,
                                   std::vector<std::size_t>* pivot_columns = nullptr) {
    sign = 1;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            for (std::size_t j = c + 1; j < a.cols(); ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        if (pivot_columns) pivot_columns->push_back(c);
        ++r;
    }
    return r;
}

}  // namespace detail

inline Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    std::size_t r = detail::bareiss_forward(a, n, sign);
    if (r < n) return 0;
    return sign * a(n - 1, n - 1);
}

inline Rational determinant(const RatMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
    Integer factor;
    IntMatrix a = detail::scale_to_integer(m, factor);
    return Rational(determinant(a), factor);
}

inline std::size_t rank(const IntMatrix& m) {
    IntMatrix a = m;
    int sign = 1;
    return detail::bareiss_forward(a, a.cols(), sign);
}

inline std::size_t rank(const RatMatrix& m) {
    Integer factor;
    return rank(detail::scale_to_integer(m, factor));
}

inline std::size_t rank_of(const std::vector<IntVector>& vectors, std::size_t dim) {
    if (vectors.empty()) return 0;
    return rank(IntMatrix::from_rows(vectors, dim));
}

// Exact solution of Mx = b for nonsingular square M.
inline RatVector solve_unique(const RatMatrix& m, const RatVector& b) {
    if (!m.is_square()) throw DimensionError("solve_unique needs a square matrix");
    if (b.dim() != m.rows()) throw DimensionError("right-hand side dimension mismatch");
    const std::size_t n = m.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    Integer factor;
    IntMatrix a = detail::scale_to_integer(aug, factor);
    int sign = 1;
    std::size_t r = detail::bareiss_forward(a, n, sign);
    if (r < n) throw SingularMatrixError("solve_unique: singular matrix");
    std::vector<Rational> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        Rational acc(a(ii, n));
        for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a(ii, j)) * x[j];
        x[ii] = acc / Rational(a(ii, ii));
    }
    return RatVector(std::move(x));
}

// Integer adjugate of a square integer matrix: adj * m = det(m) * I.
inline IntMatrix adjugate(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Integer cof = determinant(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj(j, i) = cof;
        }
    }
    return adj;
}

// Integer basis of the orthogonal complement of span(vectors) in Q^dim.
inline std::vector<IntVector> complement_basis(const std::vector<IntVector>& vectors, std::size_t dim) {
    std::vector<IntVector> basis;
    if (vectors.empty()) {
        for (std::size_t k = 0; k < dim; ++k) {
            IntVector e(dim);
            e[k] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    // Reduced row echelon form over the rationals.
    RatMatrix a(vectors.size(), dim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) a(i, j) = Rational(vectors[i][j]);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < dim && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < dim; ++j) std::swap(a(piv, j), a(r, j));
        Rational lead = a(r, c);
        for (std::size_t j = 0; j < dim; ++j) a(r, j) /= lead;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < dim; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(dim);
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
        basis.push_back(make_primitive(clear_denominators(v)));
    }
    return basis;
}

// Primitive integer normal (unoriented) of the hyperplane spanned by `span`,
// which must hold dim - 1 linearly independent vectors of Z^dim.
inline IntVector hyperplane_normal(const std::vector<IntVector>& span, std::size_t dim) {
    if (dim == 0) throw DimensionError("hyperplane normal in dimension 0");
    if (span.size() + 1 != dim)
        throw DimensionError("hyperplane normal needs " + std::to_string(dim - 1) + " span vectors, got " +
                             std::to_string(span.size()));
    for (const auto& u : span)
        if (u.dim() != dim) throw DimensionError("span vector dimension mismatch");
    // Generalized cross product: signed maximal minors.
    IntVector normal(dim);
    for (std::size_t skip = 0; skip < dim; ++skip) {
        IntMatrix minor(dim - 1, dim - 1);
        for (std::size_t i = 0; i < span.size(); ++i)
            for (std::size_t j = 0, jj = 0; j < dim; ++j) {
                if (j == skip) continue;
                minor(i, jj++) = span[i][j];
            }
        Integer d = determinant(minor);
        normal[skip] = (skip % 2 == 0) ? d : Integer(-d);
    }
    if (normal.is_zero()) throw RankError("span vectors are linearly dependent");
    return make_primitive(std::move(normal));
}

// Primitive integer normal of the hyperplane spanned by `span` (dim - 1
// vectors in Z^dim), oriented to pair positively with `orient_toward`.
inline IntVector primitive_normal(const std::vector<IntVector>& span, const IntVector& orient_toward) {
    IntVector normal = hyperplane_normal(span, orient_toward.dim());
    Integer pairing = dot(normal, orient_toward);
    if (pairing == 0) throw RankError("primitive_normal: orientation vector lies in the span");
    if (pairing < 0) normal = -normal;
    return normal;
}

// gcd of all maximal (r x r) minors of a D x r integer matrix of rank r:
// the index of the column lattice in the saturated lattice of its span.
// Equals |det| for square matrices.
inline Integer maximal_minor_gcd(const IntMatrix& cols_matrix) {
    const std::size_t d = cols_matrix.rows();
    const std::size_t r = cols_matrix.cols();
    if (r > d) throw DimensionError("maximal_minor_gcd: more columns than rows");
    if (r == d) return abs(determinant(cols_matrix));
    Integer g = 0;
    std::vector<std::size_t> pick(r);
    for (std::size_t i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        g = gcd(g, abs(determinant(cols_matrix.select_rows(pick))));
        // next combination
        std::size_t k = r;
        while (k > 0 && pick[k - 1] == d - r + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

// Greedy choice of r rows making the D x r matrix's row selection
// nonsingular. Throws RankError when the columns are dependent.
inline std::vector<std::size_t> independent_rows(const IntMatrix& m) {
    std::vector<std::size_t> chosen;
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.rows() && chosen.size() < m.cols(); ++i) {
        rows.push_back(m.row(i));
        if (rank_of(rows, m.cols()) == rows.size()) {
            chosen.push_back(i);
        } else {
            rows.pop_back();
        }
    }
    if (chosen.size() < m.cols()) throw RankError("columns are linearly dependent");
    return chosen;
}

}  // namespace irrdec
