// Exact cyclotomic ring layer. Expected values are either hand-derived
// constants or cross-checked against the independent oracle in
// support/poly_oracle.hpp (Moebius-product construction, own division).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "grouplab/cyclotomic.hpp"
#include "support/poly_oracle.hpp"

using namespace grouplab;

namespace {

std::vector<long long> small_coeffs(const CyclotomicInt& a) {
    std::vector<long long> out;
    out.reserve(a.coeffs.size());
    for (const BigInt& c : a.coeffs) out.push_back(c.convert_to<long long>());
    return out;
}

CyclotomicInt random_element(std::mt19937_64& rng, int m) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<long long> raw(2 * m + 1);
    for (auto& c : raw) c = coeff(rng);
    return reduce(poly_from(raw), m);
}

}  // namespace

TEST_CASE("cyclotomic polynomials match the oracle for m up to 64") {
    for (int m = 1; m <= 64; ++m) {
        CycPoly got = cyclotomic_polynomial(m);
        oracle::Poly want = oracle::cyclotomic(m);
        REQUIRE(got.coeffs.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(got.coeffs[i] == want[i]);
        CHECK(poly_degree(got) == totient(m));
        CHECK(totient(m) == oracle::totient(m));
    }
}

TEST_CASE("known cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1).coeffs == poly_from({-1, 1}).coeffs);
    CHECK(cyclotomic_polynomial(2).coeffs == poly_from({1, 1}).coeffs);
    CHECK(cyclotomic_polynomial(6).coeffs == poly_from({1, -1, 1}).coeffs);
    CHECK(cyclotomic_polynomial(8).coeffs == poly_from({1, 0, 0, 0, 1}).coeffs);
    CHECK(cyclotomic_polynomial(12).coeffs == poly_from({1, 0, -1, 0, 1}).coeffs);
}

TEST_CASE("reduction to canonical residues") {
    // zeta_4^2 = -1
    CHECK(small_coeffs(reduce(poly_from({0, 0, 1}), 4)) == std::vector<long long>{-1, 0});
    // zeta_6^3 = -1
    CHECK(small_coeffs(reduce(poly_from({0, 0, 0, 1}), 6)) == std::vector<long long>{-1, 0});
    // zeta_1 = 1
    CHECK(small_coeffs(reduce(poly_from({0, 1}), 1)) == std::vector<long long>{1});

    for (int m : {1, 2, 3, 4, 6, 8, 12, 16})
        CHECK(reduce(poly_from({}), m).coeffs.size() == static_cast<std::size_t>(totient(m)));
}

TEST_CASE("reduce agrees with the oracle and is idempotent") {
    std::mt19937_64 rng(20260816u);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16, 24}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<long long> raw(3 * m + 2);
            for (auto& c : raw) c = coeff(rng);
            CyclotomicInt got = reduce(poly_from(raw), m);
            oracle::Poly want = oracle::reduce_mod_cyclotomic(oracle::Poly(raw.begin(), raw.end()), m);
            CHECK(small_coeffs(got) == want);
            CyclotomicInt again = reduce(embed(got), m);
            CHECK(eq(got, again));
        }
    }
}

TEST_CASE("zeta powers") {
    CHECK(eq(zeta(6, 3), neg(cyc_one(6))));
    for (int n : {2, 4, 6, 8, 10, 12, 14, 16}) CHECK(eq(zeta(n, n / 2), neg(cyc_one(n))));
    CHECK(eq(zeta(8, -1), zeta(8, 7)));
    CHECK(eq(zeta(8, 9), zeta(8, 1)));
    CHECK(eq(zeta(5, -7), zeta(5, 3)));
    CHECK(is_one(zeta(12, 0)));
}

TEST_CASE("multiplicative order of zeta_m^k is m/gcd(m,k)") {
    for (int m = 1; m <= 16; ++m) {
        for (int k = 0; k < m; ++k) {
            CyclotomicInt z = zeta(m, k);
            CyclotomicInt acc = z;
            int ord = 1;
            while (!is_one(acc)) {
                acc = mul(acc, z);
                ++ord;
                REQUIRE(ord <= m);
            }
            CHECK(ord == m / std::gcd(m, k));
            CHECK(ord == oracle::zeta_power_order(m, k));
        }
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937_64 rng(77u);
    for (int m : {1, 2, 3, 4, 6, 8, 12, 16}) {
        CyclotomicInt zero = cyc_zero(m);
        CyclotomicInt one = cyc_one(m);
        for (int trial = 0; trial < 40; ++trial) {
            CyclotomicInt a = random_element(rng, m);
            CyclotomicInt b = random_element(rng, m);
            CyclotomicInt c = random_element(rng, m);
            CHECK(eq(add(a, b), add(b, a)));
            CHECK(eq(mul(a, b), mul(b, a)));
            CHECK(eq(add(add(a, b), c), add(a, add(b, c))));
            CHECK(eq(mul(mul(a, b), c), mul(a, mul(b, c))));
            CHECK(eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))));
            CHECK(eq(add(a, zero), a));
            CHECK(eq(mul(a, one), a));
            CHECK(eq(add(a, neg(a)), zero));
            CHECK(eq(mul(a, zero), zero));
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(eq(conjugate(zeta(4, 1)), neg(zeta(4, 1))));
    CHECK(small_coeffs(conjugate(zeta(8, 1))) == std::vector<long long>{0, 0, 0, -1});
    CHECK(eq(conjugate(zeta(8, 1)), zeta(8, 7)));

    std::mt19937_64 rng(5150u);
    for (int m : {1, 3, 4, 6, 8, 12, 16}) {
        for (int trial = 0; trial < 25; ++trial) {
            CyclotomicInt a = random_element(rng, m);
            CyclotomicInt b = random_element(rng, m);
            CHECK(eq(conjugate(conjugate(a)), a));
            CHECK(eq(conjugate(mul(a, b)), mul(conjugate(a), conjugate(b))));
            CHECK(eq(conjugate(add(a, b)), add(conjugate(a), conjugate(b))));
        }
    }
}

TEST_CASE("zeta_m^k times zeta_m^(m-k) is 1") {
    for (int m = 1; m <= 16; ++m)
        for (int k = 0; k < m; ++k) CHECK(is_one(mul(zeta(m, k), zeta(m, m - k))));
}

TEST_CASE("no implicit coercion across ring orders") {
    CHECK_THROWS_AS(add(zeta(4, 1), zeta(8, 1)), Error);
    CHECK_THROWS_AS(mul(zeta(4, 1), zeta(8, 2)), Error);
    CHECK_FALSE(eq(cyc_one(4), cyc_one(8)));
    try {
        add(zeta(4, 1), zeta(8, 1));
        FAIL("expected an order mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Err::OrderMismatch);
    }
}

TEST_CASE("rendering") {
    CHECK(to_string(cyc_zero(5)) == "0");
    CHECK(to_string(cyc_one(8)) == "1");
    CHECK(to_string(neg(cyc_one(8))) == "-1");
    CHECK(to_string(zeta(8, 3)) == "z^3");
    CHECK(to_string(reduce(poly_from({1, -1}), 6)) == "1-z");
    CHECK(to_string(add(zeta(8, 3), zeta(8, 3))) == "2z^3");
    CHECK(to_string(neg(zeta(4, 1))) == "-z");
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(cyclotomic_polynomial(0), Error);
    CHECK_THROWS_AS(zeta(0, 1), Error);
    CHECK_THROWS_AS(reduce(poly_from({1}), -2), Error);
}
