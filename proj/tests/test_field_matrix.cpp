#include <doctest.h>

#include <random>

#include "bipath/matrix.hpp"

using namespace bipath;

namespace {

FMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, FieldSpec f) {
    FMatrix m(r, c, f);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.p - 1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
    FieldSpec f5(5);
    CHECK(f5.add(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.neg(2) == 3);
    for (std::uint32_t a = 1; a < 5; ++a) CHECK(f5.mul(a, f5.inv(a)) == 1);
    CHECK_THROWS_AS(FieldSpec(4), error);
    CHECK_THROWS_AS(FieldSpec(1), error);
    CHECK_THROWS_AS(f5.inv(0), error);
    CHECK(FieldSpec(101).p == 101);
}

TEST_CASE("rank and inverse agree with reconstruction") {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 5u, 13u}) {
        FieldSpec f(p);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + trial % 6;
            FMatrix a = random_matrix(rng, n, n, f);
            std::size_t r = rank(a);
            CHECK(r <= n);
            if (r == n) {
                FMatrix inv = invert(a);
                CHECK(a.mul(inv) == FMatrix::identity(n, f));
                CHECK(inv.mul(a) == FMatrix::identity(n, f));
            } else {
                CHECK_THROWS_AS(invert(a), error);
            }
        }
    }
}

TEST_CASE("solve finds exact preimages and rejects outsiders") {
    std::mt19937_64 rng(11);
    FieldSpec f(7);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
        FMatrix a = random_matrix(rng, r, c, f);
        // in-image vector: a times something
        FMatrix x = random_matrix(rng, c, 1, f);
        auto b = a.mul(x).col(0);
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        FMatrix xs(c, 1, f);
        xs.set_col(0, *sol);
        CHECK(a.mul(xs).col(0) == b);
        // any reported solution of a random rhs must reproduce it
        auto rhs = random_matrix(rng, r, 1, f).col(0);
        if (auto s2 = solve(a, rhs)) {
            FMatrix x2(c, 1, f);
            x2.set_col(0, *s2);
            CHECK(a.mul(x2).col(0) == rhs);
        }
    }
    // a right-hand side visibly outside the column space
    FMatrix z(2, 1, f);
    z.at(0, 0) = 1;
    std::vector<std::uint32_t> bad = {0, 1};
    CHECK_FALSE(solve(z, bad).has_value());
}

TEST_CASE("kernel basis spans the kernel exactly") {
    std::mt19937_64 rng(13);
    FieldSpec f(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 6;
        FMatrix a = random_matrix(rng, r, c, f);
        FMatrix k = kernel_basis(a);
        CHECK(k.cols() == c - rank(a));
        if (k.cols() > 0) {
            CHECK(a.mul(k).is_zero());
            CHECK(rank(k) == k.cols());
        }
        // brute force over F_3^c for small c: every kernel vector is in span(k)
        if (c <= 4) {
            std::size_t total = 1;
            for (std::size_t i = 0; i < c; ++i) total *= 3;
            std::size_t in_kernel = 0;
            for (std::size_t code = 0; code < total; ++code) {
                std::vector<std::uint32_t> v(c);
                std::size_t x = code;
                for (std::size_t i = 0; i < c; ++i, x /= 3) v[i] = x % 3;
                bool zero = true;
                for (auto e : a.mul_vec(v))
                    if (e) zero = false;
                if (zero) {
                    ++in_kernel;
                    CHECK(solve(k.cols() ? k : FMatrix(c, 0, f), v).has_value() ==
                          (k.cols() > 0 || code == 0));
                }
            }
            std::size_t expect = 1;
            for (std::size_t i = 0; i < k.cols(); ++i) expect *= 3;
            CHECK(in_kernel == expect);
        }
    }
}

TEST_CASE("column space intersection against brute force") {
    std::mt19937_64 rng(17);
    FieldSpec f(2);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 2 + trial % 4;
        FMatrix a = random_matrix(rng, n, 1 + trial % 3, f);
        FMatrix b = random_matrix(rng, n, 1 + (trial / 3) % 3, f);
        FMatrix isect = intersect_columnspaces(a, b);
        CHECK(rank(isect) == isect.cols());
        // every column lies in both images
        for (std::size_t j = 0; j < isect.cols(); ++j) {
            CHECK(solve(a, isect.col(j)).has_value());
            CHECK(solve(b, isect.col(j)).has_value());
        }
        // dimension law: dim(A∩B) = rk A + rk B - rk [A|B]
        CHECK(isect.cols() == rank(a) + rank(b) - rank(a.hstack(b)));
    }
}

TEST_CASE("elementary operations match their transcript replay") {
    std::mt19937_64 rng(23);
    FieldSpec f(5);
    FMatrix a = random_matrix(rng, 4, 5, f);
    FMatrix b = a;
    OpTranscript t;
    a.swap_rows(0, 2), t.swap_rows(0, 2);
    a.add_row(1, 3, 4), t.add_row(1, 3, 4);
    a.scale_row(2, 3), t.scale_row(2, 3);
    a.swap_cols(1, 4), t.swap_cols(1, 4);
    a.add_col(0, 2, 2), t.add_col(0, 2, 2);
    a.scale_col(3, 4), t.scale_col(3, 4);
    t.apply(b);
    CHECK(a == b);
}

TEST_CASE("zero-dimension matrices behave") {
    FieldSpec f(2);
    FMatrix a(0, 3, f), b(3, 0, f);
    CHECK(rank(a) == 0);
    CHECK(rank(b) == 0);
    CHECK(a.mul(b).rows() == 0);
    CHECK(b.mul(a).rows() == 3);
    CHECK(b.mul(a).is_zero());
    CHECK(kernel_basis(a).cols() == 3);
    CHECK(kernel_basis(b).cols() == 0);
    CHECK(invert(FMatrix(0, 0, f)).rows() == 0);
    CHECK(column_space_basis(b).cols() == 0);
}

TEST_CASE("column space basis is a left-to-right independent subset") {
    std::mt19937_64 rng(29);
    FieldSpec f(3);
    for (int trial = 0; trial < 40; ++trial) {
        FMatrix a = random_matrix(rng, 3 + trial % 3, 1 + trial % 5, f);
        FMatrix basis = column_space_basis(a);
        CHECK(basis.cols() == rank(a));
        CHECK(rank(basis) == basis.cols());
        for (std::size_t j = 0; j < a.cols(); ++j) CHECK(solve(basis, a.col(j)).has_value());
    }
}
