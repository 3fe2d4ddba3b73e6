#include "grouplab/families.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace grouplab {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

FiniteGroup with_source(FiniteGroup g, std::string source) {
    g.source = std::move(source);
    return g;
}

}  // namespace

FiniteGroup cyclic(int n) {
    if (n < 1) fail(Err::Parameter, "cyclic needs n >= 1");
    FiniteGroup g = generate_group({standard_matrices(n).R});
    if (g.order != n) fail(Err::Parameter, "cyclic closure has unexpected order");
    return with_source(std::move(g), "cyclic(" + std::to_string(n) + ")");
}

FiniteGroup dihedral(int n) {
    if (n < 3) fail(Err::Parameter, "dihedral needs n >= 3");
    StandardMatrices s = standard_matrices(n);
    FiniteGroup g = generate_group({s.R, s.F});
    return with_source(std::move(g), "dihedral(" + std::to_string(n) + ")");
}

FiniteGroup dicyclic(int n) {
    if (n < 4) fail(Err::Parameter, "dicyclic needs n >= 4");
    if (n % 2)
        fail(Err::OddParameter,
             "dicyclic needs even n; an odd root closes over the order-4n group instead");
    StandardMatrices s = standard_matrices(n);
    FiniteGroup g = generate_group({s.R, s.S});
    return with_source(std::move(g), "dicyclic(" + std::to_string(n) + ")");
}

FiniteGroup generalized_quaternion(int n2) {
    if (!is_power_of_two(n2) || n2 < 8)
        fail(Err::Parameter, "generalized quaternion order must be a power of 2, at least 8");
    FiniteGroup g = dicyclic(n2 / 2);
    return with_source(std::move(g), "generalized_quaternion(" + std::to_string(n2) + ")");
}

FiniteGroup diquaternion(int m) {
    if (!is_power_of_two(m) || m < 4)
        fail(Err::Parameter, "diquaternion root order must be a power of 2, at least 4");
    StandardMatrices s = standard_matrices(m);
    FiniteGroup g = generate_group({s.R, s.S, s.F});
    return with_source(std::move(g), "diquaternion(" + std::to_string(m) + ")");
}

FiniteGroup semidihedral(int n) {
    if (!is_power_of_two(n) || n < 8)
        fail(Err::Parameter, "semidihedral needs a power of 2, at least 8");
    StandardMatrices s = standard_matrices(n);
    Mat2 a = mat_make(zeta(n, 1), cyc_zero(n), cyc_zero(n), neg(zeta(n, n - 1)));
    FiniteGroup g = generate_group({a, s.F});
    return with_source(std::move(g), "semidihedral(" + std::to_string(n) + ")");
}

FiniteGroup semiabelian(int n) {
    if (!is_power_of_two(n) || n < 8)
        fail(Err::Parameter, "semiabelian needs a power of 2, at least 8");
    StandardMatrices s = standard_matrices(n);
    Mat2 a = mat_make(zeta(n, 1), cyc_zero(n), cyc_zero(n), neg(zeta(n, 1)));
    FiniteGroup g = generate_group({a, s.F});
    return with_source(std::move(g), "semiabelian(" + std::to_string(n) + ")");
}

FiniteGroup abelian_cn_c2(int n) {
    if (n < 2) fail(Err::Parameter, "abelian_cn_c2 needs n >= 2");
    StandardMatrices s = standard_matrices(n);
    Mat2 a = mat_make(zeta(n, 1), cyc_zero(n), cyc_zero(n), zeta(n, 1));
    FiniteGroup g = generate_group({a, s.F});
    return with_source(std::move(g), "abelian_cn_c2(" + std::to_string(n) + ")");
}

std::vector<int> square_roots_of_one(int n) {
    if (n < 1) fail(Err::Parameter, "modulus must be >= 1");
    std::vector<int> out;
    for (int k = 1; k < n; ++k)
        if ((k * k) % n == 1) out.push_back(k);
    return out;
}

FiniteGroup semidirect_cn_c2(int n, int k) {
    if (n < 2) fail(Err::Parameter, "semidirect_cn_c2 needs n >= 2");
    if (2 * n > 256) fail(Err::CapExceeded, "semidirect order exceeds the table cap of 256");
    if (k < 1 || k >= n || (k * k) % n != 1 || std::gcd(k, n) != 1)
        fail(Err::InvalidTwist, "twist k=" + std::to_string(k) + " is not a unit square root of 1 mod " +
                                    std::to_string(n));
    int order = 2 * n;
    auto idx = [n](int a, int b) { return a + n * b; };
    FiniteGroup g;
    g.order = order;
    g.table.assign(order, std::vector<int>(order));
    // (r^a s^b)(r^c s^d) = r^(a + k^b c) s^(b+d)
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a)
            for (int d = 0; d < 2; ++d)
                for (int c = 0; c < n; ++c) {
                    int shift = b == 0 ? c : (k * c) % n;
                    g.table[idx(a, b)][idx(c, d)] = idx((a + shift) % n, (b + d) % 2);
                }
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a) {
            std::string label;
            if (a == 1)
                label = "r";
            else if (a > 1)
                label = "r^" + std::to_string(a);
            if (b == 1) label += "s";
            if (label.empty()) label = "1";
            g.labels.push_back(label);
        }
    g.generators = {idx(1, 0), idx(0, 1)};
    g.source = "semidirect_cn_c2(" + std::to_string(n) + "," + std::to_string(k) + ")";
    return g;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.order * h.order > 256)
        fail(Err::CapExceeded, "direct product order exceeds the table cap of 256");
    FiniteGroup out;
    out.order = g.order * h.order;
    auto idx = [&](int a, int b) { return a * h.order + b; };
    out.table.assign(out.order, std::vector<int>(out.order));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < h.order; ++b)
            for (int c = 0; c < g.order; ++c)
                for (int d = 0; d < h.order; ++d)
                    out.table[idx(a, b)][idx(c, d)] = idx(g.table[a][c], h.table[b][d]);
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < h.order; ++b)
            out.labels.push_back("(" + g.labels[a] + "," + h.labels[b] + ")");
    for (int gen : g.generators) out.generators.push_back(idx(gen, 0));
    for (int gen : h.generators)
        if (std::find(out.generators.begin(), out.generators.end(), idx(0, gen)) ==
            out.generators.end())
            out.generators.push_back(idx(0, gen));
    out.source = "direct_product(" + g.source + "," + h.source + ")";
    return out;
}

namespace {

// Parses a decimal literal; Parse errors for junk, bounds enforced later
// by the family constructors.
int parse_int(const std::string& text) {
    if (text.empty() || text.size() > 6 ||
        !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
        fail(Err::Parse, "expected a small decimal number, got '" + text + "'");
    return std::stoi(text);
}

std::string lower(const std::string& s) {
    std::string out = s;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

NamedGroup construct_family(const std::string& spec) {
    std::string s = lower(spec);
    if (s.empty()) fail(Err::Parse, "empty family spec");

    if (s == "pauli1") return {"DQ8", diquaternion(4)};

    if (s.rfind("sdp:", 0) == 0) {
        std::string rest = s.substr(4);
        std::size_t colon = rest.find(':');
        if (colon == std::string::npos) fail(Err::Parse, "sdp wants sdp:<n>:<k>");
        int n = parse_int(rest.substr(0, colon));
        int k = parse_int(rest.substr(colon + 1));
        return {"C" + std::to_string(n) + ":C2(k=" + std::to_string(k) + ")",
                semidirect_cn_c2(n, k)};
    }

    if (s.find('x') != std::string::npos) {
        // direct products of cyclic factors, e.g. c8xc2
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t next = s.find('x', pos);
            std::string piece = s.substr(pos, next == std::string::npos ? next : next - pos);
            if (piece.size() < 2 || piece[0] != 'c')
                fail(Err::Parse, "direct product pieces must look like C<n>");
            parts.push_back(parse_int(piece.substr(1)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        if (parts.size() < 2) fail(Err::Parse, "direct product wants at least two factors");
        FiniteGroup acc = cyclic(parts[0]);
        std::string name = "C" + std::to_string(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            acc = direct_product(acc, cyclic(parts[i]));
            name += "xC" + std::to_string(parts[i]);
        }
        return {name, std::move(acc)};
    }

    auto suffix_int = [&](std::size_t prefix_len) { return parse_int(s.substr(prefix_len)); };

    if (s.rfind("dic", 0) == 0) {
        int n = suffix_int(3);
        return {"Dic" + std::to_string(n), dicyclic(n)};
    }
    if (s.rfind("dq", 0) == 0) {
        int n = suffix_int(2);
        if (n % 2) fail(Err::Parameter, "diquaternion order parameter must be even");
        return {"DQ" + std::to_string(n), diquaternion(n / 2)};
    }
    if (s.rfind("sd", 0) == 0) {
        int n = suffix_int(2);
        return {"SD" + std::to_string(n), semidihedral(n)};
    }
    if (s.rfind("sa", 0) == 0) {
        int n = suffix_int(2);
        return {"SA" + std::to_string(n), semiabelian(n)};
    }
    if (s[0] == 'q') {
        int n = suffix_int(1);
        return {"Q" + std::to_string(n), generalized_quaternion(n)};
    }
    if (s[0] == 'd') {
        int n = suffix_int(1);
        return {"D" + std::to_string(n), dihedral(n)};
    }
    if (s[0] == 'c') {
        int n = suffix_int(1);
        return {"C" + std::to_string(n), cyclic(n)};
    }
    fail(Err::Parse, "unknown family spec '" + spec + "'");
}

}  // namespace grouplab
