#ifndef ALG_SCALAR_HPP
#define ALG_SCALAR_HPP

// Exact scalar arithmetic: Gaussian rationals a + b*i with arbitrary-precision
// rational components. This is the sole arithmetic domain of the library; no
// floating point appears anywhere.

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "errors.hpp"

namespace alg {

inline mpq_class make_rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

/// Gaussian rational. Components are always in lowest terms with positive
/// denominator (mpq_class keeps them canonical); equality is structural.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
    Scalar(long num, long den) : re_(make_rat(num, den)), im_(0) {}
    explicit Scalar(mpq_class re) : re_(std::move(re)), im_(0) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }
    static Scalar rational(long num, long den) { return Scalar(make_rat(num, den)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_rational() const { return sgn(im_) == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (sgn(im_) == 0 && sgn(o.im_) == 0) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inv() const {
        if (is_zero()) throw DivisionByZero();
        mpq_class n = re_ * re_ + im_ * im_;
        return Scalar(re_ / n, -im_ / n);
    }

    Scalar conj() const { return Scalar(re_, -im_); }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Total order used only for deterministic sorting of reports and root
    /// sets (re, then im); not an algebraic order on Q(i).
    friend bool operator<(const Scalar& a, const Scalar& b) {
        int c = cmp(a.re_, b.re_);
        if (c != 0) return c < 0;
        return cmp(a.im_, b.im_) < 0;
    }

    /// Rough operand size (limb count), used by pivot-selection heuristics.
    size_t bit_weight() const {
        return mpz_size(re_.get_num_mpz_t()) + mpz_size(re_.get_den_mpz_t()) +
               mpz_size(im_.get_num_mpz_t()) + mpz_size(im_.get_den_mpz_t());
    }

    std::string str() const;
    static Scalar parse(const std::string& s);

private:
    mpq_class re_, im_;
};

namespace detail {

inline std::string rat_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "[-]n" or "[-]n/d" starting at pos; advances pos past the token.
inline mpq_class parse_rat(const std::string& s, size_t& pos) {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) throw ParseError("expected digits in '" + s + "'");
    mpz_class num(s.substr(digits, pos - digits));
    mpz_class den(1);
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        size_t dstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == dstart) throw ParseError("expected denominator in '" + s + "'");
        den = mpz_class(s.substr(dstart, pos - dstart));
    }
    if (den == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    if (neg) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace detail

/// Canonical string form: "a", "a/b", "a+c/di", "a/b-ci", "0+1i", ...
/// The real part is always printed; the imaginary part only when nonzero.
inline std::string Scalar::str() const {
    std::string out = detail::rat_str(re_);
    if (sgn(im_) != 0) {
        mpq_class a = abs(im_);
        out += (sgn(im_) > 0 ? "+" : "-");
        out += detail::rat_str(a);
        out += "i";
    }
    return out;
}

/// Accepts the canonical form plus the shorthands "i", "-i", "3i", "1/2i".
inline Scalar Scalar::parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar");
    // bare imaginary unit
    auto is_unit_im = [&](const std::string& t) { return t == "i" || t == "+i" || t == "-i"; };
    if (is_unit_im(s)) return Scalar(mpq_class(0), mpq_class(s[0] == '-' ? -1 : 1));

    size_t pos = 0;
    mpq_class first = detail::parse_rat(s, pos);
    if (pos == s.size()) return Scalar(first);
    if (s[pos] == 'i') {  // pure imaginary "3i"
        if (pos + 1 != s.size()) throw ParseError("trailing characters in '" + s + "'");
        return Scalar(mpq_class(0), first);
    }
    if (s[pos] != '+' && s[pos] != '-') throw ParseError("unexpected character in '" + s + "'");
    if (pos + 1 < s.size() && is_unit_im(s.substr(pos)))
        return Scalar(first, mpq_class(s[pos] == '-' ? -1 : 1));
    mpq_class second = detail::parse_rat(s, pos);
    if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size())
        throw ParseError("expected imaginary part terminated by 'i' in '" + s + "'");
    return Scalar(first, second);
}

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace alg

#endif
