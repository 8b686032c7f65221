#ifndef ALG_PENCIL_HPP
#define ALG_PENCIL_HPP

// Matrix pencils M(delta) = A + delta*B and the exceptional-delta scan: find
// every rational delta where the kernel dimension jumps above its generic
// value. Candidates come from rational roots of generically nonzero minors
// (computed as polynomials by fraction-free elimination) and are verified by
// exact kernel computation.

#include <string>
#include <vector>

#include "poly.hpp"
#include "rng.hpp"
#include "subspace.hpp"

namespace alg {

struct DeltaPencil {
    Matrix a, b;  // same shape; M(delta) = a + delta*b

    DeltaPencil() = default;
    DeltaPencil(Matrix a_, Matrix b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a.rows() != b.rows() || a.cols() != b.cols())
            throw DimensionMismatch("pencil parts must share a shape");
    }

    Matrix eval(const Scalar& delta) const { return a + delta * b; }
};

struct PencilScan {
    size_t generic_dim = 0;
    std::vector<std::pair<Scalar, size_t>> exceptional;  // (delta, kernel dim), sorted
    /// True when the rational-root extraction on the scanned minors was
    /// exhaustive; the reported exceptional set is then complete over Q.
    bool complete = true;
    std::string leftover;  // unfactored minor divisor, when complete is false
};

namespace detail {

// Fraction-free (Bareiss) determinant of a square polynomial matrix, up to
// sign (row/column swaps are not tracked; roots are unaffected). Pivots are
// chosen of minimal degree first so that the many constant rows of constraint
// pencils are eliminated with scalar arithmetic.
inline Poly bareiss_det_upto_sign(std::vector<std::vector<Poly>>& m) {
    const size_t n = m.size();
    if (n == 0) return Poly(Scalar(1));
    Poly prev(Scalar(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t bi = n, bj = n;
        int best_deg = -1;
        size_t best_w = ~size_t{0};
        for (size_t i = k; i < n; ++i)
            for (size_t j = k; j < n; ++j) {
                const Poly& p = m[i][j];
                if (p.is_zero()) continue;
                size_t w = 0;
                for (const auto& c : p.coeffs()) w += c.bit_weight();
                if (best_deg < 0 || p.degree() < best_deg ||
                    (p.degree() == best_deg && w < best_w)) {
                    best_deg = p.degree();
                    best_w = w;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == n) return Poly();  // all remaining entries zero
        std::swap(m[k], m[bi]);
        if (bj != k)
            for (size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][bj]);
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.is_zero() ? Poly() : num.divide_exact(prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
        if (prev.is_zero()) return Poly();
    }
    return m[n - 1][n - 1];
}

}  // namespace detail

/// Generic kernel dimension plus all rational delta where the kernel grows.
/// Seed only controls sampling; the verified output is sample-independent.
inline PencilScan pencil_exceptional_deltas(const DeltaPencil& p, uint64_t seed = 20250809) {
    if (p.a.is_zero() && p.b.is_zero()) throw DegenerateInput("pencil is identically zero");
    const size_t nc = p.a.cols();
    Rng rng(seed);
    const std::vector<Scalar> avoid = {Scalar(0), Scalar(1), Scalar(-1), Scalar::rational(1, 2)};

    auto kernel_dim_at = [&](const Scalar& d) { return nc - rank(p.eval(d)); };

    // Two agreeing random samples define "generic".
    size_t generic = 0;
    Scalar witness_delta;
    for (;;) {
        Scalar d1 = rng.rational(1000000, 1000000, avoid);
        Scalar d2 = rng.rational(1000000, 1000000, avoid);
        if (d1 == d2) continue;
        size_t k1 = kernel_dim_at(d1), k2 = kernel_dim_at(d2);
        if (k1 == k2) {
            generic = k1;
            witness_delta = d1;
            break;
        }
    }
    const size_t r = nc - generic;

    PencilScan scan;
    scan.generic_dim = generic;

    std::set<Scalar> candidates = {Scalar(0), Scalar(1), Scalar(-1), Scalar::rational(1, 2)};

    // Rational roots of >=3 independent generically nonzero r x r minors.
    // Exceptional deltas are roots of every such minor, so candidate sets from
    // complete extractions may be intersected.
    bool have_complete = false;
    std::set<Scalar> intersected;
    std::set<Scalar> unioned;
    std::string leftover_desc;
    int leftover_min_deg = -1;
    const int kChoices = 3;
    int retries = 0;
    for (int choice = 0; choice < kChoices && r > 0; ++choice) {
        Scalar dstar = rng.rational(1000000, 1000000, avoid);
        Matrix sample = p.eval(dstar);
        // Shuffle rows so distinct choices tend to pick distinct submatrices.
        std::vector<size_t> order(sample.rows());
        std::iota(order.begin(), order.end(), size_t{0});
        rng.shuffle(order);
        Matrix shuffled(sample.rows(), nc);
        for (size_t i = 0; i < sample.rows(); ++i)
            for (size_t j = 0; j < nc; ++j) shuffled(i, j) = sample(order[i], j);
        RrefInfo prof = rref_inplace(shuffled);
        if (prof.rank != r) {
            if (++retries > 16) throw InternalError("generic rank unstable under resampling");
            --choice;  // unlucky sample; retry
            continue;
        }

        std::vector<std::vector<Poly>> minor(r, std::vector<Poly>(r));
        for (size_t i = 0; i < r; ++i) {
            size_t row = order[prof.pivot_rows[i]];
            for (size_t j = 0; j < r; ++j) {
                size_t col = prof.pivot_cols[j];
                std::vector<Scalar> cs = {p.a(row, col), p.b(row, col)};
                minor[i][j] = Poly(std::move(cs));
            }
        }
        // Rows of the form delta*(constant row) contribute only the root 0,
        // which is probed anyway; divide delta out to keep degrees low.
        for (auto& row : minor) {
            bool pure = true;
            for (const auto& q : row)
                if (!q.coeff(0).is_zero()) {
                    pure = false;
                    break;
                }
            if (pure)
                for (auto& q : row)
                    q = q.is_zero() ? Poly() : Poly{q.coeff(1)};
        }

        Poly det = detail::bareiss_det_upto_sign(minor);
        if (det.is_zero()) throw InternalError("generically nonzero minor vanished");

        // Any rational root of det is a root of both of its components.
        Poly comp;
        {
            std::vector<Scalar> re, im;
            for (const auto& c : det.coeffs()) {
                re.emplace_back(Scalar(c.re()));
                im.emplace_back(Scalar(c.im()));
            }
            Poly pre{std::move(re)}, pim{std::move(im)};
            comp = pre.is_zero() ? pim : pre;
        }
        RationalRoots roots = poly_rational_roots(comp);
        std::set<Scalar> cand_t = roots.roots;

        // Complete extraction means every rational root of this minor was
        // found; any irrational residue cannot hide rational jumps.
        bool complete_t = roots.complete;
        if (!complete_t) {
            Poly residue = comp;
            for (const auto& x : roots.roots) {
                Poly lin{-x, Scalar(1)};
                while (!residue.is_zero() && residue.eval(x).is_zero())
                    residue = residue.divide_exact(lin);
            }
            if (residue.degree() > 0 &&
                (leftover_min_deg < 0 || residue.degree() < leftover_min_deg)) {
                leftover_min_deg = residue.degree();
                leftover_desc = residue.str("delta");
            }
        }

        unioned.insert(cand_t.begin(), cand_t.end());
        if (complete_t) {
            if (!have_complete) {
                intersected = cand_t;
                have_complete = true;
            } else {
                std::set<Scalar> inter;
                for (const auto& x : intersected)
                    if (cand_t.count(x)) inter.insert(x);
                intersected = std::move(inter);
            }
        }
    }

    if (r == 0) {
        // Zero generic rank: the kernel is everything at a generic point and
        // can never grow.
        scan.complete = true;
        return scan;
    }

    if (have_complete) {
        candidates.insert(intersected.begin(), intersected.end());
        scan.complete = true;
    } else {
        candidates.insert(unioned.begin(), unioned.end());
        scan.complete = false;
        scan.leftover = leftover_desc;
    }

    for (const auto& d : candidates) {
        size_t kd = kernel_dim_at(d);
        if (kd > generic) scan.exceptional.emplace_back(d, kd);
    }
    return scan;
}

}  // namespace alg

#endif
