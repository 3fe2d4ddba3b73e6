#pragma once

#include <string>

#include "grouplab/cyclotomic.hpp"

namespace grouplab {

// 2x2 matrix over Z[zeta_m], row major [[a,b],[c,d]].
// All four entries live in the same ring.
struct Mat2 {
    CyclotomicInt a, b, c, d;
    int order() const { return a.order; }
};

Mat2 mat_make(CyclotomicInt a, CyclotomicInt b, CyclotomicInt c, CyclotomicInt d);
Mat2 mat_identity(int m);
Mat2 mat_mul(const Mat2& x, const Mat2& y);
Mat2 mat_neg(const Mat2& x);
bool mat_eq(const Mat2& x, const Mat2& y);
std::string to_string(const Mat2& x);

// The named generators used throughout: R = diag(zeta, conj zeta),
// S = [[0,-1],[1,0]], T = R*S, F = X = [[0,1],[1,0]],
// Y = [[0,conj zeta],[zeta,0]], Z = diag(1,-1).
struct StandardMatrices {
    Mat2 R, S, T, F, X, Y, Z;
};

StandardMatrices standard_matrices(int m);

}  // namespace grouplab
