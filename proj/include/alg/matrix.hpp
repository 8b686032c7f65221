#ifndef ALG_MATRIX_HPP
#define ALG_MATRIX_HPP

// Dense exact matrices over Q(i) with Gauss-Jordan elimination. Pivots are
// chosen by smallest operand size to keep intermediate entries small.

#include <numeric>
#include <vector>

#include "scalar.hpp"

namespace alg {

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
    const Scalar& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
        return r;
    }
    friend Matrix operator*(const Scalar& s, const Matrix& m) {
        Matrix r(m.rows_, m.cols_);
        for (size_t k = 0; k < m.e_.size(); ++k) r.e_[k] = s * m.e_[k];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const Scalar& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const Scalar& bkj = b(k, j);
                    if (!bkj.is_zero()) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
        std::vector<Scalar> r(rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) {
                const Scalar& m = (*this)(i, j);
                if (!m.is_zero() && !v[j].is_zero()) r[i] += m * v[j];
            }
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

struct RrefInfo {
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
    std::vector<size_t> pivot_rows;  // original row indices, parallel to pivot_cols
};

/// In-place reduced row echelon form (exact Gauss-Jordan).
inline RrefInfo rref_inplace(Matrix& m) {
    RrefInfo info;
    const size_t nr = m.rows(), nc = m.cols();
    std::vector<size_t> orig(nr);
    std::iota(orig.begin(), orig.end(), size_t{0});
    size_t r = 0;
    for (size_t col = 0; col < nc && r < nr; ++col) {
        // pivot with smallest operand size among candidate rows
        size_t best = nr;
        size_t best_w = ~size_t{0};
        for (size_t row = r; row < nr; ++row) {
            const Scalar& v = m(row, col);
            if (v.is_zero()) continue;
            size_t w = v.bit_weight();
            if (w < best_w) {
                best_w = w;
                best = row;
                if (w <= 4) break;  // cannot do much better
            }
        }
        if (best == nr) continue;
        m.swap_rows(r, best);
        std::swap(orig[r], orig[best]);
        const Scalar inv = m(r, col).inv();
        if (!inv.is_one())
            for (size_t j = col; j < nc; ++j)
                if (!m(r, j).is_zero()) m(r, j) = inv * m(r, j);
        for (size_t row = 0; row < nr; ++row) {
            if (row == r) continue;
            const Scalar f = m(row, col);
            if (f.is_zero()) continue;
            for (size_t j = col; j < nc; ++j) {
                const Scalar& p = m(r, j);
                if (!p.is_zero()) m(row, j) -= f * p;
            }
        }
        info.pivot_cols.push_back(col);
        info.pivot_rows.push_back(orig[r]);
        ++r;
    }
    info.rank = r;
    return info;
}

inline size_t rank(Matrix m) { return rref_inplace(m).rank; }

}  // namespace alg

#endif
