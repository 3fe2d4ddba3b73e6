// Matrix layer over the cyclotomic rings. Identities here are checked
// entry-wise with exact arithmetic.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "grouplab/mat2.hpp"

using namespace grouplab;

TEST_CASE("standard matrices have the advertised entries") {
    StandardMatrices m4 = standard_matrices(4);

    // Y(4) = [[0,-i],[i,0]]
    Mat2 y4 = mat_make(cyc_zero(4), neg(zeta(4, 1)), zeta(4, 1), cyc_zero(4));
    CHECK(mat_eq(m4.Y, y4));

    // R = diag(zeta, conj zeta)
    CHECK(eq(m4.R.a, zeta(4, 1)));
    CHECK(eq(m4.R.d, zeta(4, 3)));
    CHECK(is_zero(m4.R.b));
    CHECK(is_zero(m4.R.c));

    CHECK(mat_eq(m4.F, m4.X));
    CHECK(eq(m4.Z.a, cyc_one(4)));
    CHECK(eq(m4.Z.d, neg(cyc_one(4))));
}

TEST_CASE("product identities among the standard matrices") {
    for (int m : {4, 8, 16}) {
        StandardMatrices s = standard_matrices(m);
        CHECK(mat_eq(mat_mul(s.X, s.Z), s.S));
        CHECK(mat_eq(mat_mul(s.X, s.Y), s.R));
        CHECK(mat_eq(mat_mul(s.S, s.S), mat_neg(mat_identity(m))));
        CHECK(mat_eq(s.T, mat_mul(s.R, s.S)));

        // Y*Z equals T with both off-diagonal entries conjugated.
        Mat2 t_bar = mat_make(s.T.a, conjugate(s.T.b), conjugate(s.T.c), s.T.d);
        CHECK(mat_eq(mat_mul(s.Y, s.Z), t_bar));
    }
}

TEST_CASE("identity matrix is a two-sided unit") {
    for (int m : {1, 2, 4, 8, 12}) {
        StandardMatrices s = standard_matrices(m);
        Mat2 id = mat_identity(m);
        for (const Mat2* x : {&s.R, &s.S, &s.T, &s.F, &s.Y, &s.Z}) {
            CHECK(mat_eq(mat_mul(*x, id), *x));
            CHECK(mat_eq(mat_mul(id, *x), *x));
        }
    }
}

TEST_CASE("matrix multiplication is associative") {
    std::mt19937_64 rng(424242u);
    StandardMatrices s = standard_matrices(8);
    std::vector<Mat2> pool{s.R, s.S, s.T, s.F, s.Y, s.Z, mat_identity(8)};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const Mat2& a = pool[pick(rng)];
        const Mat2& b = pool[pick(rng)];
        const Mat2& c = pool[pick(rng)];
        CHECK(mat_eq(mat_mul(mat_mul(a, b), c), mat_mul(a, mat_mul(b, c))));
    }
}

TEST_CASE("ring mismatch is rejected") {
    CHECK_THROWS_AS(mat_mul(mat_identity(4), mat_identity(8)), Error);
    CHECK_THROWS_AS(mat_make(cyc_one(4), cyc_zero(4), cyc_zero(8), cyc_one(4)), Error);
}

TEST_CASE("rendering is canonical") {
    CHECK(to_string(mat_identity(4)) == "[[1,0],[0,1]]");
    StandardMatrices s = standard_matrices(4);
    CHECK(to_string(s.R) == "[[z,0],[0,-z]]");
    CHECK(to_string(s.S) == "[[0,-1],[1,0]]");
}
