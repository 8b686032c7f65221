#include <catch2/catch_amalgamated.hpp>

#include "alg/eigen.hpp"
#include "alg/pencil.hpp"
#include "alg/rng.hpp"
#include "alg/subspace.hpp"

using namespace alg;

namespace {

Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    size_t nr = rows.size(), nc = rows.begin()->size();
    Matrix m(nr, nc);
    size_t i = 0;
    for (const auto& row : rows) {
        size_t j = 0;
        for (long v : row) m(i, j++) = Scalar(v);
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("rref basics", "[linalg]") {
    Matrix id3 = Matrix::identity(3);
    Matrix m = id3;
    auto info = rref_inplace(m);
    CHECK(info.rank == 3);
    CHECK(m == id3);

    Matrix r2 = from_rows({{1, 2}, {2, 4}});
    info = rref_inplace(r2);
    CHECK(info.rank == 1);
    CHECK(r2 == from_rows({{1, 2}, {0, 0}}));

    Matrix z(2, 5);
    info = rref_inplace(z);
    CHECK(info.rank == 0);
    CHECK(z.is_zero());
}

TEST_CASE("kernel basics", "[linalg]") {
    CHECK(kernel(Matrix::identity(4)).dim() == 0);
    CHECK(kernel(Matrix(3, 3)).dim() == 3);

    Matrix row = from_rows({{1, 1, 0}});
    Subspace k = kernel(row);
    CHECK(k.dim() == 2);
    CHECK(k.contains({Scalar(1), Scalar(-1), Scalar(0)}));
}

TEST_CASE("kernel vectors annihilate and ranks add up", "[linalg]") {
    Rng rng(5);
    for (int t = 0; t < 40; ++t) {
        size_t nr = 1 + rng.below(6), nc = 1 + rng.below(6);
        Matrix m(nr, nc);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) m(i, j) = Scalar(rng.range(-3, 3));
        Matrix copy = m;
        size_t rk = rank(copy);
        Subspace k = kernel(m);
        CHECK(rk + k.dim() == nc);
        for (size_t b = 0; b < k.dim(); ++b) {
            auto v = k.basis_vector(b);
            for (const auto& x : m.apply(v)) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("subspace canonical form is spanning-set independent", "[linalg]") {
    Rng rng(9);
    for (int t = 0; t < 40; ++t) {
        size_t ambient = 5;
        std::vector<std::vector<Scalar>> gens;
        for (int g = 0; g < 3; ++g) {
            std::vector<Scalar> v(ambient);
            for (auto& x : v) x = Scalar(rng.range(-4, 4));
            gens.push_back(v);
        }
        Subspace s1 = Subspace::from_vectors(ambient, gens);
        // A different spanning set of the same space: random combinations plus
        // the originals in reverse order.
        std::vector<std::vector<Scalar>> gens2(gens.rbegin(), gens.rend());
        std::vector<Scalar> combo(ambient);
        for (size_t j = 0; j < ambient; ++j)
            combo[j] = Scalar(2) * gens[0][j] - Scalar(3) * gens[1][j] + gens[2][j];
        gens2.push_back(combo);
        Subspace s2 = Subspace::from_vectors(ambient, gens2);
        CHECK(s1 == s2);
        CHECK(s1.basis() == s2.basis());
    }
}

TEST_CASE("subspace intersection and sum dimensions", "[linalg]") {
    Subspace a = Subspace::from_vectors(3, {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}});
    Subspace b = Subspace::from_vectors(3, {{Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}});
    Subspace i = intersect(a, b);
    CHECK(i.dim() == 1);
    CHECK(i.contains({Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(a.sum(b).dim() == 3);
}

TEST_CASE("sparse kernel agrees with dense kernel", "[linalg]") {
    Rng rng(13);
    for (int t = 0; t < 30; ++t) {
        size_t nr = 2 + rng.below(8), nc = 2 + rng.below(8);
        Matrix m(nr, nc);
        std::vector<SparseVec> rows(nr);
        for (size_t i = 0; i < nr; ++i)
            for (size_t j = 0; j < nc; ++j) {
                long v = (rng.below(3) == 0) ? rng.range(-3, 3) : 0;
                if (v != 0) {
                    m(i, j) = Scalar(v);
                    rows[i].emplace_back(j, Scalar(v));
                }
            }
        CHECK(kernel(m) == kernel_sparse(rows, nc));
    }
}

TEST_CASE("pencil with M(d) = [[2d-1]]", "[pencil]") {
    DeltaPencil p(from_rows({{-1}}), from_rows({{2}}));
    auto scan = pencil_exceptional_deltas(p);
    CHECK(scan.generic_dim == 0);
    REQUIRE(scan.exceptional.size() == 1);
    CHECK(scan.exceptional[0].first == Scalar::rational(1, 2));
    CHECK(scan.exceptional[0].second == 1);
    CHECK(scan.complete);
}

TEST_CASE("pencil with constant identity has no exceptional deltas", "[pencil]") {
    DeltaPencil p(Matrix::identity(3), Matrix(3, 3));
    auto scan = pencil_exceptional_deltas(p);
    CHECK(scan.generic_dim == 0);
    CHECK(scan.exceptional.empty());
}

TEST_CASE("zero pencil is degenerate", "[pencil]") {
    DeltaPencil p(Matrix(2, 2), Matrix(2, 2));
    CHECK_THROWS_AS(pencil_exceptional_deltas(p), DegenerateInput);
}

TEST_CASE("pencil scan invariants on random pencils", "[pencil]") {
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        size_t n = 2 + rng.below(3);
        Matrix a(n, n), b(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                a(i, j) = Scalar(rng.range(-2, 2));
                b(i, j) = Scalar(rng.range(-2, 2));
            }
        if (a.is_zero() && b.is_zero()) continue;
        auto scan = pencil_exceptional_deltas(DeltaPencil(a, b), 1000 + t);
        for (const auto& [d, dim] : scan.exceptional) {
            CHECK(dim == n - rank(a + d * b));
            CHECK(dim > scan.generic_dim);
        }
        // Five fresh non-reported rational points keep the generic dimension.
        Rng fresh(777 + t);
        int checked = 0;
        while (checked < 5) {
            Scalar d = fresh.rational(1000, 1000);
            bool reported = false;
            for (const auto& [e, dim] : scan.exceptional) reported |= (e == d);
            if (reported) continue;
            CHECK(n - rank(a + d * b) == scan.generic_dim);
            ++checked;
        }
    }
}

TEST_CASE("simultaneous eigenspaces of a diagonal operator", "[eigen]") {
    Matrix d = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
    auto ws = simultaneous_eigenspaces(3, {d}, {Scalar(0), Scalar(1), Scalar(2)});
    REQUIRE(ws.size() == 2);
    size_t dim1 = 0, dim0 = 0;
    for (const auto& w : ws) {
        if (w.weight == std::vector<Scalar>{Scalar(1)}) dim1 = w.space.dim();
        if (w.weight == std::vector<Scalar>{Scalar(0)}) dim0 = w.space.dim();
    }
    CHECK(dim1 == 2);
    CHECK(dim0 == 1);
}

TEST_CASE("empty operator list yields the whole space", "[eigen]") {
    auto ws = simultaneous_eigenspaces(4, {}, {Scalar(0)});
    REQUIRE(ws.size() == 1);
    CHECK(ws[0].space.dim() == 4);
    CHECK(ws[0].weight.empty());
}

TEST_CASE("non-commuting operators are rejected", "[eigen]") {
    Matrix a = from_rows({{0, 1}, {0, 0}});
    Matrix b = from_rows({{0, 0}, {1, 0}});
    CHECK_THROWS_AS(simultaneous_eigenspaces(2, {a, b}, {Scalar(0)}), NotCommuting);
}

TEST_CASE("insufficient candidate set is reported", "[eigen]") {
    Matrix d = from_rows({{5, 0}, {0, 0}});
    CHECK_THROWS_AS(simultaneous_eigenspaces(2, {d}, {Scalar(0), Scalar(1)}), NotDiagonalizable);
}
