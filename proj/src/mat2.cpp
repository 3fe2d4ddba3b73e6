#include "grouplab/mat2.hpp"

namespace grouplab {

Mat2 mat_make(CyclotomicInt a, CyclotomicInt b, CyclotomicInt c, CyclotomicInt d) {
    if (a.order != b.order || a.order != c.order || a.order != d.order)
        fail(Err::OrderMismatch, "matrix entries must share one ring");
    return Mat2{std::move(a), std::move(b), std::move(c), std::move(d)};
}

Mat2 mat_identity(int m) {
    return mat_make(cyc_one(m), cyc_zero(m), cyc_zero(m), cyc_one(m));
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    if (x.order() != y.order())
        fail(Err::OrderMismatch, "matrix rings differ: " + std::to_string(x.order()) + " vs " +
                                     std::to_string(y.order()));
    return mat_make(add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
                    add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d)));
}

Mat2 mat_neg(const Mat2& x) { return Mat2{neg(x.a), neg(x.b), neg(x.c), neg(x.d)}; }

bool mat_eq(const Mat2& x, const Mat2& y) {
    return eq(x.a, y.a) && eq(x.b, y.b) && eq(x.c, y.c) && eq(x.d, y.d);
}

std::string to_string(const Mat2& x) {
    return "[[" + to_string(x.a) + "," + to_string(x.b) + "],[" + to_string(x.c) + "," +
           to_string(x.d) + "]]";
}

StandardMatrices standard_matrices(int m) {
    CyclotomicInt z = zeta(m, 1);
    CyclotomicInt zb = zeta(m, m - 1);
    CyclotomicInt one = cyc_one(m);
    CyclotomicInt zero = cyc_zero(m);
    CyclotomicInt mone = neg(one);
    StandardMatrices s;
    s.R = mat_make(z, zero, zero, zb);
    s.S = mat_make(zero, mone, one, zero);
    s.T = mat_mul(s.R, s.S);
    s.F = mat_make(zero, one, one, zero);
    s.X = s.F;
    s.Y = mat_make(zero, zb, z, zero);
    s.Z = mat_make(one, zero, zero, mone);
    return s;
}

}  // namespace grouplab
