#ifndef ALG_EIGEN_HPP
#define ALG_EIGEN_HPP

// Simultaneous eigenspace decomposition of a commuting family, by refining
// kernel(op - lambda*I) intersections over a caller-supplied candidate
// eigenvalue list. All weights of the root systems handled here are small
// integers, so no characteristic-polynomial factorization is needed.

#include <vector>

#include "subspace.hpp"

namespace alg {

struct WeightSpace {
    std::vector<Scalar> weight;
    Subspace space;
};

inline std::vector<WeightSpace> simultaneous_eigenspaces(size_t ambient,
                                                         const std::vector<Matrix>& ops,
                                                         const std::vector<Scalar>& candidates) {
    for (const auto& op : ops)
        if (op.rows() != ambient || op.cols() != ambient)
            throw DimensionMismatch("operator shape vs ambient");
    for (size_t i = 0; i < ops.size(); ++i)
        for (size_t j = i + 1; j < ops.size(); ++j)
            if (!(ops[i] * ops[j] == ops[j] * ops[i])) throw NotCommuting();

    std::vector<Scalar> cands;
    for (const auto& c : candidates)
        if (std::find(cands.begin(), cands.end(), c) == cands.end()) cands.push_back(c);

    std::vector<WeightSpace> current{{{}, Subspace::full(ambient)}};
    for (const auto& op : ops) {
        std::vector<Subspace> eig;
        eig.reserve(cands.size());
        for (const auto& lam : cands) {
            Matrix shifted = op - lam * Matrix::identity(ambient);
            eig.push_back(kernel(std::move(shifted)));
        }
        std::vector<WeightSpace> next;
        size_t total = 0;
        for (const auto& ws : current) {
            for (size_t li = 0; li < cands.size(); ++li) {
                if (eig[li].dim() == 0) continue;
                Subspace refined = intersect(ws.space, eig[li]);
                if (refined.dim() == 0) continue;
                WeightSpace nw;
                nw.weight = ws.weight;
                nw.weight.push_back(cands[li]);
                total += refined.dim();
                nw.space = std::move(refined);
                next.push_back(std::move(nw));
            }
        }
        size_t before = 0;
        for (const auto& ws : current) before += ws.space.dim();
        if (total != before)
            throw NotDiagonalizable("candidate eigenvalues cover " + std::to_string(total) +
                                    " of " + std::to_string(before) + " dimensions");
        current = std::move(next);
    }
    return current;
}

}  // namespace alg

#endif
