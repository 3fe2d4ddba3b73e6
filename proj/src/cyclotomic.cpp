#include "grouplab/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace grouplab {

namespace {

void trim(std::vector<BigInt>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const CycPoly& phi_poly(int m) {
    static std::map<int, CycPoly> cache;
    static std::mutex lock;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, cyclotomic_polynomial(m)).first;
    return it->second;
}

}  // namespace

CycPoly poly_from(const std::vector<long long>& c) {
    std::vector<BigInt> out(c.begin(), c.end());
    trim(out);
    return {std::move(out)};
}

int poly_degree(const CycPoly& p) { return static_cast<int>(p.coeffs.size()) - 1; }

CycPoly poly_add(const CycPoly& a, const CycPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
    trim(out);
    return {std::move(out)};
}

CycPoly poly_sub(const CycPoly& a, const CycPoly& b) {
    std::vector<BigInt> out(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out[i] -= b.coeffs[i];
    trim(out);
    return {std::move(out)};
}

CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
    if (a.coeffs.empty() || b.coeffs.empty()) return {};
    std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] += a.coeffs[i] * b.coeffs[j];
    trim(out);
    return {std::move(out)};
}

std::pair<CycPoly, CycPoly> poly_divmod(const CycPoly& num, const CycPoly& den) {
    int dd = poly_degree(den);
    if (dd < 0 || den.coeffs.back() != 1) fail(Err::Parameter, "polynomial divisor must be monic");
    std::vector<BigInt> rem = num.coeffs;
    std::vector<BigInt> quot;
    int dn = poly_degree(num);
    if (dn >= dd) quot.assign(static_cast<std::size_t>(dn - dd) + 1, 0);
    for (int i = dn; i >= dd; --i) {
        BigInt f = rem[i];
        if (f == 0) continue;
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs[j];
    }
    trim(rem);
    trim(quot);
    return {CycPoly{std::move(quot)}, CycPoly{std::move(rem)}};
}

int totient(int m) {
    if (m < 1) fail(Err::Parameter, "totient needs m >= 1");
    int result = m, n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

CycPoly cyclotomic_polynomial(int m) {
    if (m < 1) fail(Err::Parameter, "cyclotomic order must be >= 1");
    CycPoly num;
    num.coeffs.assign(static_cast<std::size_t>(m) + 1, 0);
    num.coeffs[0] = -1;
    num.coeffs[m] = 1;
    CycPoly den{{BigInt(1)}};
    for (int d = 1; d < m; ++d)
        if (m % d == 0) den = poly_mul(den, cyclotomic_polynomial(d));
    auto [q, r] = poly_divmod(num, den);
    if (!r.coeffs.empty()) fail(Err::Parameter, "cyclotomic division left a remainder");
    return q;
}

CyclotomicInt reduce(const CycPoly& raw, int m) {
    if (m < 1) fail(Err::Parameter, "ring order must be >= 1");
    // zeta_m^m = 1, so exponents fold mod m before the division.
    std::vector<BigInt> folded(static_cast<std::size_t>(m), 0);
    for (std::size_t i = 0; i < raw.coeffs.size(); ++i) folded[i % m] += raw.coeffs[i];
    trim(folded);
    auto [q, r] = poly_divmod(CycPoly{std::move(folded)}, phi_poly(m));
    (void)q;
    CyclotomicInt out;
    out.order = m;
    out.coeffs = std::move(r.coeffs);
    out.coeffs.resize(static_cast<std::size_t>(totient(m)), 0);
    return out;
}

CyclotomicInt zeta(int m, long long k) {
    if (m < 1) fail(Err::Parameter, "ring order must be >= 1");
    long long e = k % m;
    if (e < 0) e += m;
    CycPoly p;
    p.coeffs.assign(static_cast<std::size_t>(e) + 1, 0);
    p.coeffs[e] = 1;
    return reduce(p, m);
}

CyclotomicInt cyc_zero(int m) { return reduce(CycPoly{}, m); }

CyclotomicInt cyc_one(int m) { return zeta(m, 0); }

CyclotomicInt cyc_from_int(int m, long long v) {
    CycPoly p;
    if (v != 0) p.coeffs.assign(1, v);
    return reduce(p, m);
}

namespace {

void require_same_order(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.order != b.order)
        fail(Err::OrderMismatch, "cyclotomic orders differ: " + std::to_string(a.order) + " vs " +
                                     std::to_string(b.order));
}

}  // namespace

CyclotomicInt add(const CyclotomicInt& a, const CyclotomicInt& b) {
    require_same_order(a, b);
    CyclotomicInt out;
    out.order = a.order;
    out.coeffs.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] = a.coeffs[i] + b.coeffs[i];
    return out;
}

CyclotomicInt mul(const CyclotomicInt& a, const CyclotomicInt& b) {
    require_same_order(a, b);
    return reduce(poly_mul(embed(a), embed(b)), a.order);
}

CyclotomicInt neg(const CyclotomicInt& a) {
    CyclotomicInt out;
    out.order = a.order;
    out.coeffs.resize(a.coeffs.size());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] = -a.coeffs[i];
    return out;
}

bool eq(const CyclotomicInt& a, const CyclotomicInt& b) {
    return a.order == b.order && a.coeffs == b.coeffs;
}

bool is_zero(const CyclotomicInt& a) {
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](const BigInt& c) { return c == 0; });
}

bool is_one(const CyclotomicInt& a) { return eq(a, cyc_one(a.order)); }

CyclotomicInt conjugate(const CyclotomicInt& a) {
    CycPoly p;
    p.coeffs.assign(static_cast<std::size_t>(a.order), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        std::size_t e = (i * static_cast<std::size_t>(a.order - 1)) % a.order;
        p.coeffs[e] += a.coeffs[i];
    }
    return reduce(p, a.order);
}

CycPoly embed(const CyclotomicInt& a) {
    std::vector<BigInt> c = a.coeffs;
    trim(c);
    return {std::move(c)};
}

std::string to_string(const CyclotomicInt& a) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        const BigInt& c = a.coeffs[i];
        if (c == 0) continue;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? '-' : '+');
        }
        if (i == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str();
            out << 'z';
            if (i > 1) out << '^' << i;
        }
    }
    if (first) return "0";
    return out.str();
}

}  // namespace grouplab
