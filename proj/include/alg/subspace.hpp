#ifndef ALG_SUBSPACE_HPP
#define ALG_SUBSPACE_HPP

// Canonical subspaces of coordinate space: the stored basis is always the
// reduced row echelon form of any spanning set, so equal subspaces compare
// structurally equal. Kernels of large sparse constraint systems go through
// a singleton-propagation pass before dense elimination.

#include <map>
#include <vector>

#include "matrix.hpp"

namespace alg {

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Canonicalize a spanning set (rows) into an rref basis.
    static Subspace from_rows(size_t ambient, Matrix rows) {
        if (rows.cols() != ambient) throw DimensionMismatch("spanning rows vs ambient");
        RrefInfo info = rref_inplace(rows);
        Subspace s(ambient);
        Matrix b(info.rank, ambient);
        for (size_t i = 0; i < info.rank; ++i)
            for (size_t j = 0; j < ambient; ++j) b(i, j) = rows(i, j);
        s.basis_ = std::move(b);
        s.pivots_ = info.pivot_cols;
        return s;
    }

    static Subspace from_vectors(size_t ambient, const std::vector<std::vector<Scalar>>& vecs) {
        Matrix rows(vecs.size(), ambient);
        for (size_t i = 0; i < vecs.size(); ++i) {
            if (vecs[i].size() != ambient) throw DimensionMismatch("vector length vs ambient");
            for (size_t j = 0; j < ambient; ++j) rows(i, j) = vecs[i][j];
        }
        return from_rows(ambient, std::move(rows));
    }

    static Subspace full(size_t ambient) { return from_rows(ambient, Matrix::identity(ambient)); }

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<size_t>& pivot_cols() const { return pivots_; }

    std::vector<Scalar> basis_vector(size_t i) const {
        std::vector<Scalar> v(ambient_);
        for (size_t j = 0; j < ambient_; ++j) v[j] = basis_(i, j);
        return v;
    }

    /// Remainder of v after elimination against the basis; zero iff v lies in
    /// the subspace. The coefficients of the reduction are v at the pivot
    /// columns (rref basis).
    std::vector<Scalar> reduce(std::vector<Scalar> v) const {
        if (v.size() != ambient_) throw DimensionMismatch("vector vs ambient");
        for (size_t i = 0; i < basis_.rows(); ++i) {
            const Scalar c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < ambient_; ++j) {
                const Scalar& b = basis_(i, j);
                if (!b.is_zero()) v[j] -= c * b;
            }
        }
        return v;
    }

    bool contains(const std::vector<Scalar>& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    bool contains(const Subspace& other) const {
        for (size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    Subspace sum(const Subspace& other) const {
        Matrix rows(dim() + other.dim(), ambient_);
        for (size_t i = 0; i < dim(); ++i)
            for (size_t j = 0; j < ambient_; ++j) rows(i, j) = basis_(i, j);
        for (size_t i = 0; i < other.dim(); ++i)
            for (size_t j = 0; j < ambient_; ++j) rows(dim() + i, j) = other.basis_(i, j);
        return from_rows(ambient_, std::move(rows));
    }

private:
    size_t ambient_ = 0;
    Matrix basis_;
    std::vector<size_t> pivots_;
};

/// Kernel {x : m x = 0} with canonical basis; dim = cols - rank.
inline Subspace kernel(Matrix m) {
    const size_t nc = m.cols();
    RrefInfo info = rref_inplace(m);
    std::vector<bool> is_pivot(nc, false);
    for (size_t c : info.pivot_cols) is_pivot[c] = true;
    Matrix basis(nc - info.rank, nc);
    size_t row = 0;
    for (size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        basis(row, f) = Scalar(1);
        for (size_t i = 0; i < info.rank; ++i) basis(row, info.pivot_cols[i]) = -m(i, f);
        ++row;
    }
    return Subspace::from_rows(nc, std::move(basis));
}

using SparseVec = std::vector<std::pair<size_t, Scalar>>;  // sorted by index

/// Kernel of a sparse homogeneous system. Rows whose support shrinks to a
/// single variable force that variable to zero; propagating this before the
/// dense elimination collapses most of the structured constraint systems.
inline Subspace kernel_sparse(std::vector<SparseVec> rows, size_t ncols) {
    std::vector<bool> dead(ncols, false);

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& row : rows) {
            if (row.empty()) continue;
            size_t live = 0;
            size_t live_col = 0;
            for (const auto& [c, v] : row) {
                if (!dead[c]) {
                    ++live;
                    live_col = c;
                    if (live > 1) break;
                }
            }
            if (live == 1) {
                dead[live_col] = true;
                row.clear();
                changed = true;
            } else if (live == 0) {
                row.clear();
            }
        }
    }

    std::vector<size_t> live_cols;
    std::vector<size_t> col_map(ncols, ~size_t{0});
    for (size_t c = 0; c < ncols; ++c)
        if (!dead[c]) {
            col_map[c] = live_cols.size();
            live_cols.push_back(c);
        }

    std::vector<const SparseVec*> live_rows;
    for (const auto& row : rows)
        if (!row.empty()) live_rows.push_back(&row);

    Matrix dense(live_rows.size(), live_cols.size());
    for (size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : *live_rows[i])
            if (!dead[c]) dense(i, col_map[c]) = v;

    Subspace core = kernel(std::move(dense));

    Matrix basis(core.dim(), ncols);
    for (size_t i = 0; i < core.dim(); ++i)
        for (size_t j = 0; j < live_cols.size(); ++j) basis(i, live_cols[j]) = core.basis()(i, j);
    return Subspace::from_rows(ncols, std::move(basis));
}

/// {x : row . x = 0 for every basis row}; the annihilator of the row space
/// under the standard bilinear form.
inline Subspace annihilator(const Subspace& s) { return kernel(s.basis()); }

inline Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspace intersection");
    Subspace ka = annihilator(a), kb = annihilator(b);
    Matrix stacked(ka.dim() + kb.dim(), a.ambient_dim());
    for (size_t i = 0; i < ka.dim(); ++i)
        for (size_t j = 0; j < a.ambient_dim(); ++j) stacked(i, j) = ka.basis()(i, j);
    for (size_t i = 0; i < kb.dim(); ++i)
        for (size_t j = 0; j < a.ambient_dim(); ++j) stacked(ka.dim() + i, j) = kb.basis()(i, j);
    return kernel(std::move(stacked));
}

}  // namespace alg

#endif
