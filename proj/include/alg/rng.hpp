#ifndef ALG_RNG_HPP
#define ALG_RNG_HPP

// Deterministic RNG used everywhere randomness appears. Bounded draws use
// plain modulo so sequences do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>
#include <vector>

#include "scalar.hpp"

namespace alg {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }
    uint64_t below(uint64_t bound) { return bound ? eng_() % bound : 0; }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Random rational with |num| <= max_num, 1 <= den <= max_den, avoiding
    /// the listed values.
    Scalar rational(long max_num, long max_den, const std::vector<Scalar>& avoid = {}) {
        for (;;) {
            Scalar s = Scalar::rational(range(-max_num, max_num), range(1, max_den));
            bool bad = false;
            for (const auto& a : avoid)
                if (s == a) {
                    bad = true;
                    break;
                }
            if (!bad) return s;
        }
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace alg

#endif
