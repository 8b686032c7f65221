#include <catch2/catch_amalgamated.hpp>

#include "alg/poly.hpp"
#include "alg/rng.hpp"
#include "alg/scalar.hpp"

using namespace alg;

TEST_CASE("scalar field arithmetic basics", "[scalar]") {
    CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 3) == Scalar::rational(5, 6));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK(Scalar(2).inv() == Scalar::rational(1, 2));
    CHECK_THROWS_AS(Scalar(0).inv(), DivisionByZero);
    CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));  // lowest terms
    CHECK((Scalar::rational(1, 2) * Scalar::i()) * (Scalar(2)) == Scalar::i());
}

TEST_CASE("scalar field axioms on random triples", "[scalar]") {
    Rng rng(7);
    auto rand_scalar = [&] {
        return Scalar(make_rat(rng.range(-20, 20), rng.range(1, 12)),
                      make_rat(rng.range(-20, 20), rng.range(1, 12)));
    };
    for (int t = 0; t < 200; ++t) {
        Scalar a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Scalar(0));
        if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    }
}

TEST_CASE("scalar string round-trip", "[scalar]") {
    std::vector<Scalar> cases = {
        Scalar(0),
        Scalar(3),
        Scalar(-7),
        Scalar::rational(1, 2),
        Scalar::rational(-3, 4),
        Scalar::i(),
        -Scalar::i(),
        Scalar(make_rat(1, 2), make_rat(-3, 4)),
        Scalar(make_rat(0), make_rat(5, 6)),
    };
    for (const auto& s : cases) CHECK(Scalar::parse(s.str()) == s);

    CHECK(Scalar::parse("1/2").str() == "1/2");
    CHECK(Scalar::parse("-1/2+3/4i") == Scalar(make_rat(-1, 2), make_rat(3, 4)));
    CHECK(Scalar::parse("0-1i") == -Scalar::i());
    CHECK(Scalar::parse("2i") == Scalar(make_rat(0), make_rat(2)));
    CHECK_THROWS_AS(Scalar::parse("1/0"), DivisionByZero);
    CHECK_THROWS_AS(Scalar::parse("nonsense"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1/2+"), ParseError);
}

TEST_CASE("poly evaluation", "[poly]") {
    Poly p{Scalar(-1), Scalar(0), Scalar(1)};  // delta^2 - 1
    CHECK(p.eval(Scalar(1)) == Scalar(0));
    Poly q{Scalar(-1), Scalar(2)};  // 2*delta - 1
    CHECK(q.eval(Scalar::rational(1, 2)) == Scalar(0));
    Poly idp{Scalar(0), Scalar(1)};
    Scalar x(make_rat(3), make_rat(2));
    CHECK(idp.eval(x) == x);
    CHECK(Poly().degree() == -1);
    CHECK(Poly{Scalar(0)}.is_zero());
}

TEST_CASE("poly product is multiplicative under evaluation", "[poly]") {
    Rng rng(11);
    auto rand_poly = [&] {
        std::vector<Scalar> cs;
        int deg = static_cast<int>(rng.below(5));
        for (int k = 0; k <= deg; ++k) cs.push_back(Scalar::rational(rng.range(-9, 9), rng.range(1, 5)));
        return Poly(std::move(cs));
    };
    for (int t = 0; t < 100; ++t) {
        Poly p = rand_poly(), q = rand_poly();
        Scalar x = Scalar::rational(rng.range(-9, 9), rng.range(1, 7));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    }
}

TEST_CASE("poly exact division", "[poly]") {
    Poly p{Scalar(-1), Scalar(2)};             // 2d - 1
    Poly q{Scalar(-1), Scalar(1)};             // d - 1
    Poly prod = p * q;                         // 2d^2 - 3d + 1
    CHECK(prod == Poly{Scalar(1), Scalar(-3), Scalar(2)});
    CHECK(prod.divide_exact(p) == q);
    CHECK(prod.divide_exact(q) == p);
    CHECK_THROWS_AS(prod.divide_exact(Poly{Scalar(1), Scalar(1)}), InternalError);
}

TEST_CASE("rational roots of small polynomials", "[poly]") {
    Poly p{Scalar(1), Scalar(-3), Scalar(2)};  // 2d^2 - 3d + 1 = (2d-1)(d-1)
    auto r = poly_rational_roots(p);
    CHECK(r.complete);
    CHECK(r.roots == std::set<Scalar>{Scalar(1), Scalar::rational(1, 2)});

    Poly q{Scalar(1), Scalar(0), Scalar(1)};  // d^2 + 1
    CHECK(poly_rational_roots(q).roots.empty());

    // d(d-1)(2d-1) = 2d^3 - 3d^2 + d
    Poly c = Poly{Scalar(0), Scalar(1)} * Poly{Scalar(-1), Scalar(1)} * Poly{Scalar(-1), Scalar(2)};
    auto rc = poly_rational_roots(c);
    CHECK(rc.roots == std::set<Scalar>{Scalar(0), Scalar(1), Scalar::rational(1, 2)});

    Poly gaussian{Scalar::i(), Scalar(1)};
    CHECK_THROWS_AS(poly_rational_roots(gaussian), NonRationalCoefficients);
}

TEST_CASE("no rational root of degree <= 4 polys is missed (exhaustive cross-check)", "[poly]") {
    // Oracle: scan every p/q with |p| <= 12, q <= 12 by exact evaluation.
    Rng rng(23);
    for (int t = 0; t < 60; ++t) {
        std::vector<Scalar> cs;
        int deg = 1 + static_cast<int>(rng.below(4));
        for (int k = 0; k <= deg; ++k) cs.push_back(Scalar(rng.range(-6, 6)));
        Poly p(std::move(cs));
        if (p.is_zero()) continue;
        std::set<Scalar> oracle;
        for (long num = -12; num <= 12; ++num)
            for (long den = 1; den <= 12; ++den) {
                Scalar x = Scalar::rational(num, den);
                if (p.eval(x).is_zero()) oracle.insert(x);
            }
        auto found = poly_rational_roots(p);
        CHECK(found.complete);
        for (const auto& x : oracle) CHECK(found.roots.count(x) == 1);
        for (const auto& x : found.roots) CHECK(p.eval(x).is_zero());
    }
}
