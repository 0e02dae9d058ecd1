#pragma once

// Dense exact matrices over the integers and rationals, with the handful of
// operations the library needs: arithmetic, determinant (fraction-free
// Bareiss), adjugate by cofactors, rank and linear solves over the rationals.
// Everything is desk-scale; no attempt at sparsity or asymptotics.

#include "gog/errors.hpp"
#include "gog/integers.hpp"

#include <cassert>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace gog {

template <typename T>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            assert(r.size() == cols_);
            for (const auto& x : r) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
        return r;
    }
    Matrix operator-() const { return (*this) * T(-1); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != T(0)) return false;
        return true;
    }

    // Copy with row i and column j removed.
    Matrix minor_matrix(std::size_t di, std::size_t dj) const {
        Matrix r(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
            if (i == di) continue;
            for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
                if (j == dj) continue;
                r(ri, rj) = (*this)(i, j);
                ++rj;
            }
            ++ri;
        }
        return r;
    }

    Matrix select_columns(const std::vector<std::size_t>& js) const {
        Matrix r(rows_, js.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < js.size(); ++j) r(i, j) = (*this)(i, js[j]);
        return r;
    }
    Matrix select_rows(const std::vector<std::size_t>& is) const {
        Matrix r(is.size(), cols_);
        for (std::size_t i = 0; i < is.size(); ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(is[i], j);
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? " [" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
            os << "]" << (i + 1 < rows_ ? "\n" : "");
        }
        os << "]";
        return os.str();
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}

// Exact conversion; throws std::invalid_argument on non-integral entries.
inline IntMatrix to_integer(const RatMatrix& a) {
    IntMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = to_int(a(i, j));
    return r;
}

// Determinant by fraction-free Bareiss elimination (divisions are exact over
// the integers by Sylvester's identity, and trivially exact over rationals).
template <typename T>
T determinant(Matrix<T> a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    if (n == 0) return T(1);
    T sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == T(0)) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == T(0)) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Adjugate by explicit cofactors: adj(A)(i,j) = (-1)^{i+j} det(A with row j,
// column i removed).  Deliberately the naive formula — it serves as an
// independent oracle for identities proved elsewhere.
template <typename T>
Matrix<T> adjugate(const Matrix<T>& a) {
    assert(a.rows() == a.cols());
    const std::size_t n = a.rows();
    Matrix<T> r(n, n);
    if (n == 0) return r;
    if (n == 1) {
        r(0, 0) = T(1);
        return r;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            T c = determinant(a.minor_matrix(j, i));
            r(i, j) = ((i + j) % 2 == 0) ? c : -c;
        }
    return r;
}

// Rank over the rationals.
inline std::size_t rank(RatMatrix a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

// Solve W * X = B exactly over the rationals, where W has full column rank.
// Returns X with W.cols() rows and B.cols() columns.  Throws NotASublattice
// if B is not in the column span of W, RankMismatch if W is column-deficient.
inline RatMatrix solve_in_column_span(const RatMatrix& w, const RatMatrix& b) {
    assert(w.rows() == b.rows());
    const std::size_t m = w.rows(), n = w.cols(), k = b.cols();
    // Augmented elimination [W | B].
    RatMatrix a(m, n + k);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = w(i, j);
        for (std::size_t j = 0; j < k; ++j) a(i, n + j) = b(i, j);
    }
    std::vector<std::size_t> pivot_row(n, m);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a(p, c) == 0) ++p;
        if (p == m) continue;
        for (std::size_t j = 0; j < n + k; ++j) std::swap(a(r, j), a(p, j));
        Rat inv = Rat(1) / a(r, c);
        for (std::size_t j = c; j < n + k; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rat f = a(i, c);
            for (std::size_t j = c; j < n + k; ++j) a(i, j) -= f * a(r, j);
        }
        pivot_row[c] = r;
        ++r;
    }
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_row[c] == m) throw RankMismatch("solve_in_column_span: matrix does not have full column rank");
    // Rows below the pivots must now be zero on the B side.
    for (std::size_t i = r; i < m; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (a(i, n + j) != 0)
                throw NotASublattice("solve_in_column_span: right-hand side outside the column span");
    RatMatrix x(n, k);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t j = 0; j < k; ++j) x(c, j) = a(pivot_row[c], n + j);
    return x;
}

}  // namespace gog
