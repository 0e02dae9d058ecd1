#pragma once

// Smith normal form over the integers with unimodular transforms, cokernel
// presentations, and quotients of a lattice by a full-rank sublattice.
//
// Pivot strategy: minimum nonzero absolute value, full row+column
// elimination, then a divisibility fix-up (merge an offending row into the
// pivot row and re-eliminate).  U * A * V == D is re-verified after every
// call; U^{-1} is maintained alongside U because image bases need it.

#include "gog/errors.hpp"
#include "gog/integers.hpp"
#include "gog/matrix.hpp"

#include <cassert>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace gog {

struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;  // each >= 2, d_i | d_{i+1}; empty = trivial

    Int order() const {
        Int o = 1;
        for (const Int& d : invariant_factors) o *= d;
        return o;
    }
    bool trivial() const { return invariant_factors.empty(); }
    bool operator==(const FiniteAbelianGroup& o) const {
        return invariant_factors == o.invariant_factors;
    }
    std::string str() const {
        if (invariant_factors.empty()) return "trivial";
        std::string s;
        for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
            if (i) s += " ";
            s += invariant_factors[i].str();
        }
        return s;
    }
};

struct SnfResult {
    IntMatrix D;     // diagonal, same shape as input
    IntMatrix U;     // rows x rows, unimodular
    IntMatrix V;     // cols x cols, unimodular
    IntMatrix Uinv;  // exact inverse of U
    std::vector<Int> invariant_factors;  // full diagonal, 1s and 0s retained
    std::size_t rank = 0;                // number of nonzero diagonal entries
};

namespace detail {

// Row/column operations that keep U, Uinv, V synchronized with A.
struct SnfWorker {
    IntMatrix A, U, Uinv, V;
    std::size_t m, n;

    explicit SnfWorker(const IntMatrix& a)
        : A(a),
          U(IntMatrix::identity(a.rows())),
          Uinv(IntMatrix::identity(a.rows())),
          V(IntMatrix::identity(a.cols())),
          m(a.rows()),
          n(a.cols()) {}

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < n; ++c) std::swap(A(i, c), A(j, c));
        for (std::size_t c = 0; c < m; ++c) std::swap(U(i, c), U(j, c));
        for (std::size_t r = 0; r < m; ++r) std::swap(Uinv(r, i), Uinv(r, j));
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < m; ++r) std::swap(A(r, i), A(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(V(r, i), V(r, j));
    }
    // row i += q * row j  (so U gets the same op; Uinv gets col j -= q * col i)
    void row_add(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < n; ++c) A(i, c) += q * A(j, c);
        for (std::size_t c = 0; c < m; ++c) U(i, c) += q * U(j, c);
        for (std::size_t r = 0; r < m; ++r) Uinv(r, j) -= q * Uinv(r, i);
    }
    // col i += q * col j
    void col_add(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < m; ++r) A(r, i) += q * A(r, j);
        for (std::size_t r = 0; r < n; ++r) V(r, i) += q * V(r, j);
    }
    void row_negate(std::size_t i) {
        for (std::size_t c = 0; c < n; ++c) A(i, c) = -A(i, c);
        for (std::size_t c = 0; c < m; ++c) U(i, c) = -U(i, c);
        for (std::size_t r = 0; r < m; ++r) Uinv(r, i) = -Uinv(r, i);
    }

    // Smallest |A(i,j)| != 0 with i,j >= k; false if the block is zero.
    bool find_pivot(std::size_t k, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Int best = 0;
        for (std::size_t i = k; i < m; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (A(i, j) == 0) continue;
                Int a = abs(A(i, j));
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        const std::size_t lim = std::min(m, n);
        for (std::size_t k = 0; k < lim; ++k) {
            std::size_t pi = k, pj = k;
            if (!find_pivot(k, pi, pj)) break;
            row_swap(k, pi);
            col_swap(k, pj);
            for (;;) {
                // Clear column k below the pivot.
                bool dirty = false;
                for (std::size_t i = k + 1; i < m; ++i) {
                    if (A(i, k) == 0) continue;
                    Int q = round_div(A(i, k), A(k, k));
                    row_add(i, k, -q);
                    if (A(i, k) != 0) {  // remainder smaller than pivot: promote it
                        row_swap(k, i);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                // Clear row k to the right of the pivot.
                for (std::size_t j = k + 1; j < n; ++j) {
                    if (A(k, j) == 0) continue;
                    Int q = round_div(A(k, j), A(k, k));
                    col_add(j, k, -q);
                    if (A(k, j) != 0) {
                        col_swap(k, j);
                        dirty = true;
                    }
                }
                if (dirty) continue;
                // Divisibility fix-up: pivot must divide the remaining block.
                bool fixed = true;
                for (std::size_t i = k + 1; i < m && fixed; ++i)
                    for (std::size_t j = k + 1; j < n && fixed; ++j)
                        if (A(i, j) % A(k, k) != 0) {
                            row_add(k, i, Int(1));  // brings the offending entry into row k
                            fixed = false;
                        }
                if (fixed) break;
            }
            if (A(k, k) < 0) row_negate(k);
        }
    }
};

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& a) {
    detail::SnfWorker w(a);
    w.run();
    SnfResult r;
    r.D = w.A;
    r.U = w.U;
    r.V = w.V;
    r.Uinv = w.Uinv;
    const std::size_t lim = std::min(a.rows(), a.cols());
    for (std::size_t k = 0; k < lim; ++k) {
        r.invariant_factors.push_back(r.D(k, k));
        if (r.D(k, k) != 0) r.rank = k + 1;
    }
    // Exactness checks: the normal form really is diagonal with a divisibility
    // chain, and the transforms reproduce it.
    for (std::size_t i = 0; i < r.D.rows(); ++i)
        for (std::size_t j = 0; j < r.D.cols(); ++j)
            assert(i == j || r.D(i, j) == 0);
    for (std::size_t k = 0; k + 1 < lim; ++k)
        assert(r.D(k + 1, k + 1) == 0 || (r.D(k, k) != 0 && r.D(k + 1, k + 1) % r.D(k, k) == 0));
    if (r.U * a * r.V != r.D) throw InternalMismatch("smith_normal_form: U*A*V != D");
    if (r.U * r.Uinv != IntMatrix::identity(a.rows()))
        throw InternalMismatch("smith_normal_form: U*Uinv != I");
    return r;
}

struct CokernelResult {
    FiniteAbelianGroup group;  // torsion part, invariant factors >= 2
    std::size_t free_rank = 0;
};

// Cokernel of A viewed as a map Z^cols -> Z^rows.
inline CokernelResult cokernel(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    CokernelResult r;
    for (const Int& d : s.invariant_factors)
        if (d >= 2) r.group.invariant_factors.push_back(d);
    r.free_rank = a.rows() - s.rank;
    return r;
}

// Basis of the lattice Im(A) as columns of the returned matrix:
// with U*A*V = D we have A*V = U^{-1}*D, so the nonzero columns of
// U^{-1}*D generate the image; they are d_k * (k-th column of U^{-1}).
inline IntMatrix column_image_basis(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    IntMatrix b(a.rows(), s.rank);
    for (std::size_t k = 0; k < s.rank; ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) b(i, k) = s.Uinv(i, k) * s.D(k, k);
    return b;
}

// Basis (as columns) of the integer kernel of A: the columns of V whose
// corresponding diagonal entries vanish (or exceed the diagonal).
inline IntMatrix integer_kernel_basis(const IntMatrix& a) {
    SnfResult s = smith_normal_form(a);
    std::vector<std::size_t> zero_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (j >= s.rank) zero_cols.push_back(j);
    return s.V.select_columns(zero_cols);
}

// Quotient of the lattice spanned by the columns of b_big by the sublattice
// spanned by the columns of b_sub.  Both are reduced to image bases first.
inline FiniteAbelianGroup lattice_quotient(const IntMatrix& b_big, const IntMatrix& b_sub) {
    assert(b_big.rows() == b_sub.rows());
    IntMatrix w = column_image_basis(b_big);
    IntMatrix s = column_image_basis(b_sub);
    if (w.cols() != s.cols())
        throw RankMismatch("lattice_quotient: ranks differ (" + std::to_string(w.cols()) + " vs " +
                           std::to_string(s.cols()) + ")");
    if (w.cols() == 0) return FiniteAbelianGroup{};  // 0/0
    RatMatrix x = solve_in_column_span(to_rational(w), to_rational(s));
    IntMatrix xi(x.rows(), x.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (!is_integer(x(i, j)))
                throw NotASublattice("lattice_quotient: coordinate " + x(i, j).str() +
                                     " is not an integer");
            xi(i, j) = numerator(x(i, j));
        }
    return cokernel(xi).group;
}

inline Int lattice_index(const IntMatrix& b_big, const IntMatrix& b_sub) {
    return lattice_quotient(b_big, b_sub).order();
}

}  // namespace gog
