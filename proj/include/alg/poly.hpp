#ifndef ALG_POLY_HPP
#define ALG_POLY_HPP

// Dense univariate polynomials over the Gaussian rationals, in the formal
// variable delta. Degrees stay small here (constraint pencils are affine in
// delta and minors have degree at most the matrix rank), so no sparse
// machinery.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace alg {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { strip(); }
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { strip(); }
    explicit Poly(Scalar constant) : c_{std::move(constant)} { strip(); }

    static Poly variable() { return Poly{Scalar(0), Scalar(1)}; }

    bool is_zero() const { return c_.empty(); }
    /// Degree of the zero polynomial is the sentinel -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Scalar& coeff(size_t k) const {
        static const Scalar zero;
        return k < c_.size() ? c_[k] : zero;
    }
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar eval(const Scalar& x) const {
        Scalar acc;
        for (size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) - b.coeff(k);
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Scalar> r(c_.size());
        for (size_t k = 0; k < c_.size(); ++k) r[k] = -c_[k];
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const Scalar& s, const Poly& p) {
        std::vector<Scalar> r(p.c_.size());
        for (size_t k = 0; k < p.c_.size(); ++k) r[k] = s * p.c_[k];
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Exact quotient; throws InternalError if b does not divide this.
    Poly divide_exact(const Poly& b) const {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        if (is_zero()) return Poly();
        if (degree() < b.degree()) throw InternalError("inexact polynomial division");
        std::vector<Scalar> rem = c_;
        std::vector<Scalar> quot(c_.size() - b.c_.size() + 1);
        const Scalar lead_inv = b.c_.back().inv();
        for (size_t k = quot.size(); k-- > 0;) {
            Scalar q = rem[k + b.c_.size() - 1] * lead_inv;
            quot[k] = q;
            if (q.is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) rem[k + j] -= q * b.c_[j];
        }
        for (const auto& r : rem)
            if (!r.is_zero()) throw InternalError("inexact polynomial division");
        return Poly(std::move(quot));
    }

    /// Multiplicity of x as a root (0 if not a root).
    int root_multiplicity(const Scalar& x) const {
        int m = 0;
        Poly p = *this;
        Poly lin{-x, Scalar(1)};
        while (!p.is_zero() && p.eval(x).is_zero()) {
            p = p.divide_exact(lin);
            ++m;
        }
        return m;
    }

    std::string str(const std::string& var = "d") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t k = c_.size(); k-- > 0;) {
            if (c_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string cs = c_[k].str();
            if (k == 0) {
                out += cs;
            } else {
                if (cs != "1") out += "(" + cs + ")*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;  // c_[k] multiplies delta^k; trailing zeros stripped
};

namespace detail {

// Pulls all prime factors <= bound out of n. Returns the distinct small
// factors found; on return n holds the unfactored cofactor (>= 1).
inline std::vector<mpz_class> trial_factor(mpz_class& n, unsigned long bound) {
    std::vector<mpz_class> primes;
    n = abs(n);
    if (n <= 1) return primes;
    auto pull = [&](unsigned long p) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            primes.emplace_back(p);
            while (mpz_divisible_ui_p(n.get_mpz_t(), p))
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    };
    pull(2);
    for (unsigned long p = 3; p <= bound && n > 1; p += 2) pull(p);
    return primes;
}

inline void all_divisors(const std::vector<std::pair<mpz_class, int>>& fact, size_t idx,
                         const mpz_class& acc, std::vector<mpz_class>& out) {
    if (idx == fact.size()) {
        out.push_back(acc);
        return;
    }
    mpz_class v = acc;
    for (int e = 0; e <= fact[idx].second; ++e) {
        all_divisors(fact, idx + 1, v, out);
        v *= fact[idx].first;
    }
}

}  // namespace detail

struct RationalRoots {
    std::set<Scalar> roots;
    /// False when a leading/trailing coefficient could not be fully factored,
    /// in which case `roots` may miss roots of very large height. All spec'd
    /// uses (small cleared-denominator polynomials) factor completely.
    bool complete = true;
};

/// Rational roots of a polynomial with rational (imaginary-free) coefficients,
/// by the rational-root theorem on the cleared-denominator polynomial; every
/// candidate is verified by exact evaluation.
inline RationalRoots poly_rational_roots(const Poly& p) {
    if (p.is_zero()) throw DegenerateInput("rational roots of the zero polynomial");
    for (const auto& c : p.coeffs())
        if (!c.is_rational()) throw NonRationalCoefficients();

    RationalRoots result;

    // Clear denominators: integer coefficient vector.
    mpz_class lcm_den(1);
    for (const auto& c : p.coeffs())
        if (!c.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den().get_mpz_t());
    std::vector<mpz_class> ic;
    ic.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) ic.push_back(mpz_class(c.re() * lcm_den));

    // Strip delta^k: 0 is a root iff the constant term vanishes.
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) result.roots.insert(Scalar(0));
    if (low + 1 >= ic.size()) return result;  // constant or pure power of delta

    mpz_class a0 = ic[low], an = ic.back();
    auto factor_full = [&](mpz_class v) -> std::optional<std::vector<std::pair<mpz_class, int>>> {
        std::vector<std::pair<mpz_class, int>> fact;
        mpz_class n = abs(v);
        std::vector<mpz_class> small = detail::trial_factor(n, 100000);
        for (auto& q : small) {
            int e = 0;
            mpz_class m = abs(v);
            while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
                mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
                ++e;
            }
            fact.emplace_back(q, e);
        }
        if (n > 1) {
            // Leftover cofactor: accept if prime or a prime square; otherwise
            // enumeration would be incomplete.
            if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
                fact.emplace_back(n, 1);
            } else {
                mpz_class r;
                if (mpz_perfect_square_p(n.get_mpz_t())) {
                    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
                    if (mpz_probab_prime_p(r.get_mpz_t(), 30)) {
                        fact.emplace_back(r, 2);
                        return fact;
                    }
                }
                return std::nullopt;
            }
        }
        return fact;
    };

    auto f0 = factor_full(a0);
    auto fn = factor_full(an);
    if (!f0 || !fn) {
        result.complete = false;
        // Still test small-height candidates so common roots are not lost.
        for (long num = -24; num <= 24; ++num)
            for (long den = 1; den <= 24; ++den) {
                Scalar cand = Scalar::rational(num, den);
                if (p.eval(cand).is_zero()) result.roots.insert(cand);
            }
        return result;
    }

    std::vector<mpz_class> ps, qs;
    detail::all_divisors(*f0, 0, mpz_class(1), ps);
    detail::all_divisors(*fn, 0, mpz_class(1), qs);
    for (const auto& num : ps)
        for (const auto& den : qs) {
            mpq_class cand(num, den);
            cand.canonicalize();
            for (int sign = 0; sign < 2; ++sign) {
                Scalar x(sign ? mpq_class(-cand) : cand);
                if (p.eval(x).is_zero()) result.roots.insert(x);
            }
        }
    return result;
}

}  // namespace alg

#endif
