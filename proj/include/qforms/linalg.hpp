#pragma once

// Exact linear algebra over Q on dense Eigen matrices.  Everything here is
// deterministic: pivots are chosen leftmost-first, so reduced forms are
// canonical and suitable for golden-file output.

#include "qforms/rat.hpp"

#include <optional>
#include <vector>

namespace qf {

/// In-place Gauss-Jordan to reduced row echelon form. Returns the rank.
/// Pivot columns are the leftmost possible; pivot entries are normalized to 1.
template <typename Derived>
int rref_in_place(Eigen::MatrixBase<Derived>& m) {
    using Scalar = typename Derived::Scalar;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (m(i, c) != Scalar(0)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) m.row(piv).swap(m.row(r));
        m.row(r) /= m(r, c);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == Scalar(0)) continue;
            m.row(i) -= m(i, c) * m.row(r);
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Reduced row echelon form with zero rows dropped: the canonical basis of the
/// row space.
inline MatQ row_space_basis(MatQ m) {
    int rank = rref_in_place(m);
    return m.topRows(rank);
}

inline int rank_of(MatQ m) { return rref_in_place(m); }

/// Canonical basis of the kernel {x : m x = 0}, one solution per row.
inline MatQ kernel_basis(MatQ m) {
    const Eigen::Index cols = m.cols();
    int rank = rref_in_place(m);
    std::vector<Eigen::Index> pivot_col(rank);
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rank; ++i) {
        Eigen::Index c = 0;
        while (m(i, c) == Rat(0)) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    MatQ out(cols - rank, cols);
    out.setZero();
    Eigen::Index k = 0;
    for (Eigen::Index free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        out(k, free_c) = Rat(1);
        for (int i = 0; i < rank; ++i) out(k, pivot_col[i]) = -m(i, free_c);
        ++k;
    }
    return out;
}

/// Solve A x = b exactly; empty when inconsistent.
inline std::optional<VecQ> solve_linear(const MatQ& a, const VecQ& b) {
    MatQ aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    MatQ work = aug;
    int rank_aug = rref_in_place(work);
    // Inconsistent iff a pivot lands in the last column.
    for (int i = 0; i < rank_aug; ++i) {
        Eigen::Index c = 0;
        while (work(i, c) == Rat(0)) ++c;
        if (c == a.cols()) return std::nullopt;
    }
    VecQ x = VecQ::Zero(a.cols());
    for (int i = 0; i < rank_aug; ++i) {
        Eigen::Index c = 0;
        while (work(i, c) == Rat(0)) ++c;
        x(c) = work(i, a.cols());
    }
    return x;
}

/// Does the row space of `space` contain the row vector v?
inline bool row_space_contains(const MatQ& space, const VecQ& v) {
    if (v.isZero()) return true;
    MatQ m(space.rows() + 1, space.cols());
    m.topRows(space.rows()) = space;
    m.row(space.rows()) = v.transpose();
    return rank_of(m) == rank_of(space);
}

inline bool same_row_space(const MatQ& a, const MatQ& b) {
    if (a.cols() != b.cols()) return false;
    MatQ ra = row_space_basis(a), rb = row_space_basis(b);
    return ra.rows() == rb.rows() && ra == rb;
}

/// Basis of the intersection of two row spaces (Zassenhaus-free: kernel trick).
inline MatQ row_space_intersection(const MatQ& a, const MatQ& b) {
    // x in both spans: x = u^T a = v^T b.  Solve [a^T | -b^T] (u;v) = 0.
    MatQ stacked(a.cols(), a.rows() + b.rows());
    stacked.leftCols(a.rows()) = a.transpose();
    stacked.rightCols(b.rows()) = -b.transpose();
    MatQ ker = kernel_basis(stacked);
    MatQ result(ker.rows(), a.cols());
    for (Eigen::Index i = 0; i < ker.rows(); ++i)
        result.row(i) = ker.row(i).head(a.rows()) * a;
    return row_space_basis(result);
}

struct LdlResult {
    bool psd = false;       // true iff the matrix is positive semidefinite
    int rank = 0;           // rank when psd
};

/// Exact positive-semidefiniteness test by symmetrically pivoted elimination.
/// Handles singular matrices: a zero diagonal with a nonzero entry in its row
/// refutes PSD; otherwise the row/column is dropped.
inline LdlResult ldl_psd_check(MatQ m) {
    const Eigen::Index n = m.rows();
    LdlResult res;
    std::vector<bool> done(n, false);
    for (;;) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (!done[i] && m(i, i) != Rat(0)) { piv = i; break; }
        }
        if (piv < 0) {
            // All remaining diagonal entries are zero: PSD iff the remaining
            // block is identically zero.
            for (Eigen::Index i = 0; i < n; ++i) {
                if (done[i]) continue;
                for (Eigen::Index j = 0; j < n; ++j)
                    if (!done[j] && m(i, j) != Rat(0)) return res;
            }
            res.psd = true;
            return res;
        }
        if (m(piv, piv) < 0) return res;
        ++res.rank;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (done[i] || i == piv) continue;
            Rat factor = m(i, piv) / m(piv, piv);
            for (Eigen::Index j = 0; j < n; ++j) {
                if (done[j] || j == piv) continue;
                m(i, j) -= factor * m(piv, j);
            }
        }
        for (Eigen::Index i = 0; i < n; ++i) { m(piv, i) = Rat(0); m(i, piv) = Rat(0); }
        done[piv] = true;
    }
}

/// Inertia (n_plus, n_minus, n_zero) of a symmetric rational matrix, by
/// congruence elimination.  Used to classify conics exactly.
struct Inertia { int pos = 0, neg = 0, zero = 0; };

inline Inertia inertia_of(MatQ m) {
    const Eigen::Index n = m.rows();
    Inertia in;
    std::vector<bool> done(n, false);
    Eigen::Index remaining = n;
    while (remaining > 0) {
        Eigen::Index piv = -1;
        for (Eigen::Index i = 0; i < n; ++i)
            if (!done[i] && m(i, i) != Rat(0)) { piv = i; break; }
        if (piv >= 0) {
            if (m(piv, piv) > 0) ++in.pos; else ++in.neg;
            for (Eigen::Index i = 0; i < n; ++i) {
                if (done[i] || i == piv) continue;
                Rat factor = m(i, piv) / m(piv, piv);
                for (Eigen::Index j = 0; j < n; ++j) {
                    if (done[j] || j == piv) continue;
                    m(i, j) -= factor * m(piv, j);
                }
            }
            for (Eigen::Index i = 0; i < n; ++i) { m(piv, i) = Rat(0); m(i, piv) = Rat(0); }
            done[piv] = true;
            --remaining;
            continue;
        }
        // Zero diagonal: look for an off-diagonal hyperbolic pair.
        Eigen::Index a = -1, b = -1;
        for (Eigen::Index i = 0; i < n && a < 0; ++i) {
            if (done[i]) continue;
            for (Eigen::Index j = i + 1; j < n; ++j)
                if (!done[j] && m(i, j) != Rat(0)) { a = i; b = j; break; }
        }
        if (a < 0) { in.zero += static_cast<int>(remaining); return in; }
        // x_a -> x_a + x_b makes the diagonal entry 2*m(a,b) != 0.
        for (Eigen::Index j = 0; j < n; ++j) if (!done[j]) m(a, j) += m(b, j);
        for (Eigen::Index i = 0; i < n; ++i) if (!done[i]) m(i, a) += m(i, b);
    }
    return in;
}

}  // namespace qf
