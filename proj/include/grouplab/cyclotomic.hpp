#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "grouplab/error.hpp"

namespace grouplab {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer polynomial. coeffs[i] is the coefficient of x^i.
// Normal form carries no trailing zeros; the zero polynomial is an empty vector.
struct CycPoly {
    std::vector<BigInt> coeffs;
};

CycPoly poly_from(const std::vector<long long>& c);
int poly_degree(const CycPoly& p);  // -1 for the zero polynomial
CycPoly poly_add(const CycPoly& a, const CycPoly& b);
CycPoly poly_sub(const CycPoly& a, const CycPoly& b);
CycPoly poly_mul(const CycPoly& a, const CycPoly& b);

// Long division by a monic divisor. Returns {quotient, remainder}.
std::pair<CycPoly, CycPoly> poly_divmod(const CycPoly& num, const CycPoly& den);

int totient(int m);

// The m-th cyclotomic polynomial, computed by exact division of x^m - 1
// by the product of the cyclotomic polynomials of the proper divisors of m.
CycPoly cyclotomic_polynomial(int m);

// An element of Z[zeta_m] in canonical residue form modulo the m-th
// cyclotomic polynomial. coeffs always has exactly totient(m) entries.
struct CyclotomicInt {
    int order = 0;
    std::vector<BigInt> coeffs;
};

// Canonical reduction of an arbitrary integer polynomial in zeta_m.
CyclotomicInt reduce(const CycPoly& raw, int m);

CyclotomicInt zeta(int m, long long k);  // zeta_m^k, any integer k
CyclotomicInt cyc_zero(int m);
CyclotomicInt cyc_one(int m);
CyclotomicInt cyc_from_int(int m, long long v);

// Arithmetic stays inside one ring; mixing orders raises OrderMismatch.
CyclotomicInt add(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b);
CyclotomicInt neg(const CyclotomicInt& a);

// True iff same order and identical canonical coefficients.
bool eq(const CyclotomicInt& a, const CyclotomicInt& b);

bool is_zero(const CyclotomicInt& a);
bool is_one(const CyclotomicInt& a);

// Complex conjugation, zeta_m -> zeta_m^(m-1).
CyclotomicInt conjugate(const CyclotomicInt& a);

// Re-embed a canonical element as a plain polynomial.
CycPoly embed(const CyclotomicInt& a);

// Compact rendering such as "0", "1-z", "-z^3" with z the ring's root.
std::string to_string(const CyclotomicInt& a);

}  // namespace grouplab
