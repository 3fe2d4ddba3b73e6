#include "grouplab/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "grouplab/cyclotomic.hpp"
#include "grouplab/families.hpp"
#include "grouplab/structure.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

namespace {

// Collects expectations; remembers the first failure.
struct Checker {
    int checks = 0;
    bool ok = true;
    std::string first_fail;
    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && ok) {
            ok = false;
            first_fail = what;
        }
    }
};

struct Claim {
    std::string id;
    std::string statement;
    std::function<void(Checker&)> body;
};

// Named groups of order at most 32 reachable through the family grammar.
const std::vector<std::string>& catalog32() {
    static const std::vector<std::string> specs{
        "C1",   "C2",     "C4",   "C8",   "C16",  "C32",  "C2xC2", "C4xC2", "C8xC2",
        "C16xC2", "C4xC2xC2", "D3", "D4",  "D6",   "D8",   "D16",   "Dic6",  "Q8",
        "Q16",  "Q32",    "SD8",  "SD16", "SA8",  "SA16", "DQ8",   "DQ16",
    };
    return specs;
}

int power(const FiniteGroup& g, int x, int k) {
    int acc = 0;
    for (int i = 0; i < k; ++i) acc = multiply(g, acc, x);
    return acc;
}

int unique_involution(const FiniteGroup& g, Checker& c) {
    std::vector<int> inv;
    for (int x = 0; x < g.order; ++x)
        if (element_order(g, x) == 2) inv.push_back(x);
    c.expect(inv.size() == 1, "the group has one involution");
    return inv.empty() ? 0 : inv[0];
}

int central_involution(const FiniteGroup& g, Checker& c) {
    std::vector<int> inv;
    for (int x : center(g).members)
        if (element_order(g, x) == 2) inv.push_back(x);
    c.expect(inv.size() == 1, "the center has one involution");
    return inv.empty() ? 0 : inv[0];
}

std::string sub_label(const Subgroup& s) { return iso_label(subgroup_group(s)); }

std::vector<std::vector<int>> dihedral_words(int n) {
    return {std::vector<int>(n, 1), {2, 2}, {1, 2, 1, -2}};
}

std::vector<std::vector<int>> dicyclic_words(int n) {
    std::vector<int> half(n / 2, 1);
    half.insert(half.end(), {-2, -2});
    return {std::vector<int>(n, 1), {2, 2, 2, 2}, {1, 2, 1, -2}, half};
}

std::vector<std::vector<int>> twist_words(int n, int k) {
    std::vector<int> tw{2, 1, -2};
    tw.insert(tw.end(), k, -1);
    return {std::vector<int>(n, 1), {2, 2}, tw};
}

// Small deterministic generator for the ring property samples.
struct Lcg {
    std::uint64_t s;
    int next(int lo, int hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<int>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

CyclotomicInt random_element(Lcg& r, int m) {
    std::vector<long long> cs(static_cast<std::size_t>(totient(m)));
    for (auto& v : cs) v = r.next(-3, 3);
    return reduce(poly_from(cs), m);
}

const std::vector<Claim>& registry() {
    static const std::vector<Claim> claims = {
        {"family-orders", "Named family constructions have their advertised orders",
         [](Checker& c) {
             c.expect(generalized_quaternion(8).order == 8, "Q8 has order 8");
             c.expect(dicyclic(6).order == 12, "Dic6 has order 12");
             c.expect(diquaternion(4).order == 16, "DQ8 has order 16");
             c.expect(diquaternion(8).order == 32, "DQ16 has order 32");
             c.expect(semidihedral(8).order == 16, "SD8 has order 16");
             c.expect(semiabelian(8).order == 16, "SA8 has order 16");
             c.expect(abelian_cn_c2(8).order == 16, "C8xC2 has order 16");
             for (int n : {1, 2, 5, 12}) c.expect(cyclic(n).order == n, "cyclic order");
             for (int n : {3, 4, 8}) c.expect(dihedral(n).order == 2 * n, "dihedral order");
             for (int n : {4, 6, 10}) c.expect(dicyclic(n).order == 2 * n, "dicyclic order");
             for (int n : {8, 16}) {
                 c.expect(semidihedral(n).order == 2 * n, "semidihedral order");
                 c.expect(semiabelian(n).order == 2 * n, "semiabelian order");
             }
             c.expect(semidirect_cn_c2(8, 3).order == 16, "twist order");
             c.expect(direct_product(cyclic(4), cyclic(6)).order == 24, "product order");
         }},

        {"family-presentations",
         "Dihedral, dicyclic, twist, and diquaternion generator relations close",
         [](Checker& c) {
             for (int n : {4, 6, 8, 16}) {
                 c.expect(check_relations(dihedral(n), dihedral_words(n)), "dihedral relations");
                 c.expect(check_relations(dicyclic(n), dicyclic_words(n)), "dicyclic relations");
             }
             FiniteGroup dq = diquaternion(4);
             c.expect(check_relations(dq, {{1, 1, 1, 1}, {3, 3}, {1, 1, -2, -2}}),
                      "diquaternion relations a^4, c^2, a^2 = b^2");
             for (auto [n, k] : std::initializer_list<std::pair<int, int>>{
                      {8, 3}, {8, 5}, {8, 7}, {16, 7}, {16, 9}})
                 c.expect(check_relations(semidirect_cn_c2(n, k), twist_words(n, k)),
                          "twist relations");
         }},

        {"quotient-isomorphisms",
         "Central quotients collapse quaternion and diquaternion groups onto dihedral and "
         "elementary abelian types",
         [](Checker& c) {
             FiniteGroup dic6 = dicyclic(6);
             int r3 = power(dic6, dic6.generators.at(0), 3);
             Subgroup n{&dic6, closure_of(dic6, {r3})};
             c.expect(n.size() == 2, "r^3 spans an order-2 subgroup");
             std::vector<int> w;
             c.expect(isomorphic(quotient(dic6, n), dihedral(3), &w), "Dic6 mod r^3 is D3");
             c.expect(w.size() == 6, "witness covers the quotient");

             for (auto [qorder, dn] : std::initializer_list<std::pair<int, int>>{{16, 4}, {32, 8}}) {
                 FiniteGroup q = generalized_quaternion(qorder);
                 Subgroup zz{&q, closure_of(q, {unique_involution(q, c)})};
                 std::vector<int> wq;
                 c.expect(isomorphic(quotient(q, zz), dihedral(dn), &wq),
                          "quaternion quotient is dihedral");
                 c.expect(static_cast<int>(wq.size()) == qorder / 2, "witness size");
             }

             FiniteGroup dq = diquaternion(4);
             Subgroup zz{&dq, closure_of(dq, {central_involution(dq, c)})};
             std::vector<int> we;
             c.expect(isomorphic(quotient(dq, zz), construct_family("C2xC2xC2").group, &we),
                      "DQ8 mod -I is elementary abelian");
         }},

        {"dicyclic12-splits",
         "The order-12 dicyclic group splits as C3 by C4 and never directly",
         [](Checker& c) {
             auto splits = semidirect_decompositions(dicyclic(6));
             c.expect(splits.size() == 3, "exactly three decompositions");
             bool c3c4 = false;
             for (const auto& s : splits) {
                 c.expect(!s.direct, "no decomposition is direct");
                 if (s.kernel_label == "C3" && s.complement_label == "C4") c3c4 = true;
             }
             c.expect(c3c4, "C3 by C4 appears");
         }},

        {"quaternion-no-splits",
         "Generalized quaternion groups admit no semidirect splitting",
         [](Checker& c) {
             for (int n : {8, 16, 32})
                 c.expect(semidirect_decompositions(generalized_quaternion(n)).empty(),
                          "no decomposition at order " + std::to_string(n));
         }},

        {"quaternion-subgroup-overlap",
         "Every nontrivial subgroup of a generalized quaternion group contains the unique "
         "involution",
         [](Checker& c) {
             for (int n : {16, 32, 64}) {
                 FiniteGroup q = generalized_quaternion(n);
                 int z = unique_involution(q, c);
                 std::vector<Subgroup> subs = all_subgroups(q);
                 bool contained = true, overlapping = true;
                 for (std::size_t i = 0; i < subs.size(); ++i) {
                     if (subs[i].size() == 1) continue;
                     if (!std::binary_search(subs[i].members.begin(), subs[i].members.end(), z))
                         contained = false;
                     for (std::size_t j = i + 1; j < subs.size(); ++j) {
                         if (subs[j].size() == 1) continue;
                         Subgroup meet = intersect(subs[i], subs[j]);
                         if (!std::binary_search(meet.members.begin(), meet.members.end(), z))
                             overlapping = false;
                     }
                 }
                 c.expect(contained, "every nontrivial subgroup contains -1");
                 c.expect(overlapping, "every nontrivial pair meets in -1");
             }
         }},

        {"quaternion-reduced-lattices",
         "Quaternion subgroup lattices fold into the expected chain-plus-wings conjugacy classes",
         [](Checker& c) {
             FiniteGroup q16 = generalized_quaternion(16);
             std::vector<Subgroup> subs = all_subgroups(q16);
             c.expect(subs.size() == 11, "Q16 has 11 subgroups");
             auto classes = subgroup_conjugacy_classes(q16, subs);
             c.expect(classes.size() == 9, "Q16 has 9 subgroup classes");
             std::multiset<std::size_t> sizes;
             for (const auto& cl : classes) sizes.insert(cl.size());
             c.expect(sizes == std::multiset<std::size_t>{1, 1, 1, 1, 1, 1, 1, 2, 2},
                      "Q16 class size profile");
             ReducedLattice r16 = reduced_lattice(q16);
             c.expect(std::multiset<std::string>(r16.labels.begin(), r16.labels.end()) ==
                          std::multiset<std::string>{"C1", "C2", "C4", "C4", "C4", "C8", "Q8",
                                                     "Q8", "Q16"},
                      "Q16 class labels");

             FiniteGroup q32 = generalized_quaternion(32);
             c.expect(all_subgroups(q32).size() == 20, "Q32 has 20 subgroups");
             ReducedLattice r32 = reduced_lattice(q32);
             c.expect(std::multiset<std::string>(r32.labels.begin(), r32.labels.end()) ==
                          std::multiset<std::string>{"C1", "C2", "C4", "C4", "C4", "C8", "C16",
                                                     "Q8", "Q8", "Q16", "Q16", "Q32"},
                      "Q32 class labels");
         }},

        {"diquaternion16-structure",
         "The order-16 diquaternion group has center C4, complement-C2 splits with kernel "
         "types C4xC2, D4, Q8, and central products (Q8,C4) and (D4,C4)",
         [](Checker& c) {
             FiniteGroup g = diquaternion(4);
             Subgroup z = center(g);
             c.expect(sub_label(z) == "C4", "center is C4");

             auto splits = semidirect_decompositions(g);
             c.expect(splits.size() == 24, "24 kernel-complement pairs");
             std::set<std::string> kernels;
             for (const auto& s : splits) {
                 c.expect(s.kernel.size() == 8 && s.complement.size() == 2,
                          "index-2 kernel with C2 complement");
                 c.expect(s.complement_label == "C2", "complement label");
                 c.expect(!s.direct, "no direct decomposition");
                 kernels.insert(s.kernel_label);
             }
             c.expect(kernels == std::set<std::string>{"C4xC2", "D4", "Q8"},
                      "exactly three kernel types");

             auto cps = central_product_decompositions(g);
             c.expect(cps.size() == 4, "four central products");
             std::multiset<std::string> lefts;
             for (const auto& cp : cps) {
                 c.expect(cp.right_label == "C4", "right factor is C4");
                 c.expect(cp.right.members == z.members, "right factor is the center");
                 c.expect(cp.intersection_order == 2, "factors overlap in order 2");
                 lefts.insert(cp.left_label);
             }
             c.expect(lefts == std::multiset<std::string>{"D4", "D4", "D4", "Q8"},
                      "left factors are D4 (three ways) and Q8");
         }},

        {"diquaternion32-structure",
         "The order-32 diquaternion group contains D8 and C8xC2 at index 2 and central "
         "products (D8,C4) and (Q16,C4) over its C4 center",
         [](Checker& c) {
             FiniteGroup g = diquaternion(8);
             c.expect(g.order == 32, "order 32");
             Subgroup z = center(g);
             c.expect(sub_label(z) == "C4", "center is C4");

             int ir = g.generators.at(0), is = g.generators.at(1), iw = g.generators.at(2);
             int x = iw;                      // antidiagonal of ones
             int y = multiply(g, iw, ir);     // antidiagonal with conjugate phases
             int zz = multiply(g, iw, is);    // diag(1, -1)
             int xy = multiply(g, x, y);
             Subgroup h1{&g, closure_of(g, {x, y})};
             c.expect(h1.size() == 16, "x and y span half the group");
             c.expect(sub_label(h1) == "D8", "the xy plane subgroup is dihedral");
             Subgroup h2{&g, closure_of(g, {xy, zz})};
             c.expect(h2.size() == 16, "xy and z span half the group");
             c.expect(sub_label(h2) == "C8xC2", "the rotation-diagonal subgroup is abelian");

             std::set<std::pair<std::string, std::string>> pairs;
             for (const auto& cp : central_product_decompositions(g))
                 if (cp.intersection_order == 2 && cp.right.members == z.members)
                     pairs.insert({cp.left_label, cp.right_label});
             c.expect(pairs.count({"D8", "C4"}) == 1, "D8 joins the center in a central product");
             c.expect(pairs.count({"Q16", "C4"}) == 1,
                      "Q16 joins the center in a central product");
         }},

        {"sixteen-twists",
         "The four twists of C16 by C2 are pairwise distinct, abelian at k=1 and dihedral at "
         "k=15",
         [](Checker& c) {
             std::vector<int> ks = square_roots_of_one(16);
             c.expect(ks == std::vector<int>{1, 7, 9, 15}, "square roots of 1 mod 16");
             std::vector<FiniteGroup> gs;
             for (int k : ks) gs.push_back(semidirect_cn_c2(16, k));
             for (std::size_t i = 0; i < gs.size(); ++i)
                 for (std::size_t j = i + 1; j < gs.size(); ++j)
                     c.expect(!isomorphic(gs[i], gs[j]), "twists are pairwise distinct");
             c.expect(center(gs[0]).size() == 32, "k=1 twist is abelian");
             c.expect(isomorphic(gs[0], direct_product(cyclic(16), cyclic(2))),
                      "k=1 twist is C16xC2");
             c.expect(isomorphic(gs[3], dihedral(16)), "k=15 twist is dihedral");
         }},

        {"twist-table-matrix-match",
         "Matrix-built semidihedral and semiabelian groups match their twist table models",
         [](Checker& c) {
             for (int n : {8, 16}) {
                 std::vector<int> w1, w2;
                 c.expect(isomorphic(semidihedral(n), semidirect_cn_c2(n, n / 2 - 1), &w1),
                          "semidihedral matches twist k = n/2 - 1");
                 c.expect(static_cast<int>(w1.size()) == 2 * n, "semidihedral witness size");
                 c.expect(isomorphic(semiabelian(n), semidirect_cn_c2(n, n / 2 + 1), &w2),
                          "semiabelian matches twist k = n/2 + 1");
                 c.expect(static_cast<int>(w2.size()) == 2 * n, "semiabelian witness size");
             }
         }},

        {"semidihedral-vs-dihedral-splits",
         "The order-16 semidihedral and dihedral groups have 15 and 19 subgroups and split "
         "over exactly two kernel types each",
         [](Checker& c) {
             FiniteGroup sd = semidihedral(8);
             FiniteGroup d8 = dihedral(8);
             c.expect(all_subgroups(sd).size() == 15, "SD8 has 15 subgroups");
             c.expect(all_subgroups(d8).size() == 19, "D8 has 19 subgroups");
             auto kernel_types = [](const FiniteGroup& g) {
                 std::set<std::string> t;
                 for (const auto& s : semidirect_decompositions(g))
                     if (s.complement_label == "C2") t.insert(s.kernel_label);
                 return t;
             };
             c.expect(kernel_types(sd) == std::set<std::string>{"C8", "Q8"},
                      "SD8 kernels over C2 are C8 and Q8");
             c.expect(kernel_types(d8) == std::set<std::string>{"C8", "D4"},
                      "D8 kernels over C2 are C8 and D4");
             int r4 = power(sd, sd.generators.at(0), 4);
             Subgroup n{&sd, closure_of(sd, {r4})};
             c.expect(n.size() == 2, "r^4 spans an order-2 subgroup");
             c.expect(isomorphic(quotient(sd, n), dihedral(4)), "SD8 mod r^4 is D4");
         }},

        {"mystery-lattice",
         "C8xC2 and SA8 share an 11-node subgroup lattice without being isomorphic, and "
         "SA8 has exactly two non-normal subgroups forming one conjugacy class",
         [](Checker& c) {
             FiniteGroup a = abelian_cn_c2(8);
             FiniteGroup b = semiabelian(8);
             std::vector<Subgroup> sa = all_subgroups(a), sb = all_subgroups(b);
             c.expect(sa.size() == 11, "C8xC2 has 11 subgroups");
             c.expect(sb.size() == 11, "SA8 has 11 subgroups");

             Lattice la = subgroup_lattice(a), lb = subgroup_lattice(b);
             std::vector<int> w;
             c.expect(lattices_equal(la, lb, &w), "the lattices agree");
             c.expect(w.size() == 11, "witness is a node bijection");
             c.expect(!isomorphic(a, b), "the groups differ");

             int normal_count = 0;
             std::vector<Subgroup> rogue;
             for (const Subgroup& s : sb) {
                 if (is_normal(b, s.members)) ++normal_count;
                 else rogue.push_back(s);
             }
             c.expect(normal_count == 9, "SA8 has exactly 9 normal subgroups");
             c.expect(rogue.size() == 2, "two non-normal subgroups");
             for (const Subgroup& s : rogue) c.expect(s.size() == 2, "rogue subgroups have order 2");

             auto classes = subgroup_conjugacy_classes(b, sb);
             std::vector<std::vector<int>> fused;
             for (const auto& cl : classes)
                 if (cl.size() > 1) fused.push_back(cl);
             c.expect(fused.size() == 1 && fused[0].size() == 2,
                      "one conjugacy class of size 2");
             if (fused.size() == 1 && fused[0].size() == 2)
                 c.expect(!is_normal(b, sb[fused[0][0]].members) &&
                              !is_normal(b, sb[fused[0][1]].members),
                          "the fused pair is the non-normal pair");

             c.expect(lattice_unicorns(la).size() == 7, "C8xC2 has 7 unicorns");
             c.expect(lattice_unicorns(lb).size() == 7, "SA8 has 7 unicorns");
         }},

        {"cycle-graph-coincidences",
         "Cycle graphs coincide for C8xC2 vs SA8 and for C4xC2xC2 vs DQ8 while the groups "
         "differ, and the second pair has different lattices",
         [](Checker& c) {
             FiniteGroup a = abelian_cn_c2(8), b = semiabelian(8);
             c.expect(cycle_graphs_isomorphic(cycle_graph(a), cycle_graph(b)),
                      "C8xC2 and SA8 share a cycle graph");
             c.expect(!isomorphic(a, b), "C8xC2 and SA8 differ as groups");

             FiniteGroup e = construct_family("C4xC2xC2").group;
             FiniteGroup dq = diquaternion(4);
             std::vector<int> w;
             c.expect(cycle_graphs_isomorphic(cycle_graph(e), cycle_graph(dq), &w),
                      "C4xC2xC2 and DQ8 share a cycle graph");
             c.expect(w.size() == 16, "vertex bijection covers both groups");
             c.expect(!isomorphic(e, dq), "C4xC2xC2 and DQ8 differ as groups");
             c.expect(!lattices_equal(subgroup_lattice(e), subgroup_lattice(dq)),
                      "their subgroup lattices differ");
         }},

        {"six-groups-order-32",
         "Six order-32 groups with an element of order 16 are pairwise non-isomorphic",
         [](Checker& c) {
             std::vector<std::string> specs{"C32", "C16xC2", "D16", "SD16", "SA16", "Q32"};
             std::vector<FiniteGroup> gs;
             for (const std::string& s : specs) gs.push_back(construct_family(s).group);
             for (std::size_t i = 0; i < gs.size(); ++i) {
                 c.expect(gs[i].order == 32, specs[i] + " has order 32");
                 bool has16 = false;
                 for (int x = 0; x < gs[i].order; ++x)
                     if (element_order(gs[i], x) == 16) has16 = true;
                 c.expect(has16, specs[i] + " has an element of order 16");
             }
             int pairs = 0;
             for (std::size_t i = 0; i < gs.size(); ++i)
                 for (std::size_t j = i + 1; j < gs.size(); ++j) {
                     c.expect(!isomorphic(gs[i], gs[j]),
                              specs[i] + " and " + specs[j] + " are distinct");
                     ++pairs;
                 }
             c.expect(pairs == 15, "fifteen pairs compared");
         }},

        {"unicorns-normal",
         "Every unicorn subgroup across the order-at-most-32 catalog is normal",
         [](Checker& c) {
             int seen = 0;
             for (const std::string& spec : catalog32()) {
                 NamedGroup ng = construct_family(spec);
                 Lattice l = subgroup_lattice(ng.group);
                 for (int i : lattice_unicorns(l)) {
                     ++seen;
                     c.expect(is_normal(ng.group, l.nodes[i].members),
                              spec + " has a non-normal unicorn");
                 }
             }
             c.expect(seen > 0, "the catalog produced unicorns");
         }},

        {"ring-axioms",
         "Cyclotomic integers form a commutative ring with multiplicative conjugation and "
         "exact root orders",
         [](Checker& c) {
             for (int m : {1, 2, 3, 4, 6, 8, 12, 16, 20}) {
                 Lcg rng{static_cast<std::uint64_t>(m) * 1000003ull + 17ull};
                 for (int t = 0; t < 20; ++t) {
                     CyclotomicInt a = random_element(rng, m);
                     CyclotomicInt b = random_element(rng, m);
                     CyclotomicInt d = random_element(rng, m);
                     c.expect(eq(add(a, b), add(b, a)), "addition commutes");
                     c.expect(eq(add(add(a, b), d), add(a, add(b, d))), "addition associates");
                     c.expect(eq(mul(a, b), mul(b, a)), "multiplication commutes");
                     c.expect(eq(mul(mul(a, b), d), mul(a, mul(b, d))),
                              "multiplication associates");
                     c.expect(eq(mul(a, add(b, d)), add(mul(a, b), mul(a, d))),
                              "multiplication distributes");
                     c.expect(eq(add(a, neg(a)), cyc_zero(m)), "negation cancels");
                     c.expect(eq(mul(a, cyc_one(m)), a), "one is neutral");
                     c.expect(eq(add(a, cyc_zero(m)), a), "zero is neutral");
                     c.expect(eq(conjugate(mul(a, b)), mul(conjugate(a), conjugate(b))),
                              "conjugation is multiplicative");
                     c.expect(eq(conjugate(conjugate(a)), a), "conjugation involutes");
                 }
                 CyclotomicInt p = cyc_one(m);
                 CyclotomicInt z = zeta(m, 1);
                 for (int k = 0; k < m; ++k) {
                     c.expect(eq(p, zeta(m, k)), "zeta powers reach normal form");
                     if (k > 0) c.expect(!is_one(p), "no premature period");
                     p = mul(p, z);
                 }
                 c.expect(is_one(p), "zeta has exact order m");
             }
         }},

        {"table-invariants",
         "Every catalog table is an associative Latin square with identity, inverses, and "
         "unique labels",
         [](Checker& c) {
             std::vector<std::string> specs = catalog32();
             specs.push_back("Q64");
             for (const std::string& spec : specs) {
                 NamedGroup ng = construct_family(spec);
                 const FiniteGroup& g = ng.group;
                 c.expect(table_violation(g).empty(), spec + " violates a table invariant");
                 std::set<std::string> labels(g.labels.begin(), g.labels.end());
                 c.expect(static_cast<int>(labels.size()) == g.order, spec + " labels collide");
                 bool assoc = true;
                 for (int x = 0; x < g.order && assoc; ++x)
                     for (int y = 0; y < g.order && assoc; ++y)
                         for (int t = 0; t < g.order; ++t)
                             if (g.table[g.table[x][y]][t] != g.table[x][g.table[y][t]]) {
                                 assoc = false;
                                 break;
                             }
                 c.expect(assoc, spec + " associativity");
                 bool inverses = true;
                 for (int x = 0; x < g.order; ++x) {
                     int y = inverse(g, x);
                     if (g.table[x][y] != 0 || g.table[y][x] != 0) inverses = false;
                 }
                 c.expect(inverses, spec + " inverses");
             }
         }},

        {"lagrange-class-equation",
         "Subgroup orders divide group orders and conjugacy classes partition each catalog "
         "group",
         [](Checker& c) {
             for (const std::string& spec : catalog32()) {
                 NamedGroup ng = construct_family(spec);
                 const FiniteGroup& g = ng.group;
                 bool lagrange = true;
                 for (const Subgroup& s : all_subgroups(g))
                     if (g.order % s.size() != 0) lagrange = false;
                 c.expect(lagrange, spec + " Lagrange");
                 bool eorders = true;
                 for (int x = 0; x < g.order; ++x)
                     if (g.order % element_order(g, x) != 0) eorders = false;
                 c.expect(eorders, spec + " element orders divide the group order");
                 long long sum = 0;
                 int singles = 0;
                 bool divides = true;
                 for (const auto& cl : conjugacy_classes(g)) {
                     if (g.order % static_cast<int>(cl.size()) != 0) divides = false;
                     sum += static_cast<long long>(cl.size());
                     if (cl.size() == 1) ++singles;
                 }
                 c.expect(divides, spec + " class sizes divide the order");
                 c.expect(sum == g.order, spec + " classes partition the group");
                 c.expect(singles == center(g).size(),
                          spec + " singleton classes match the center");
             }
         }},
    };
    return claims;
}

}  // namespace

std::vector<std::string> claim_ids() {
    std::vector<std::string> ids;
    for (const Claim& cl : registry()) ids.push_back(cl.id);
    return ids;
}

std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids) {
    std::vector<const Claim*> selected;
    if (ids.empty()) {
        for (const Claim& cl : registry()) selected.push_back(&cl);
    } else {
        for (const std::string& id : ids) {
            const Claim* found = nullptr;
            for (const Claim& cl : registry())
                if (cl.id == id) found = &cl;
            if (!found) fail(Err::Parse, "unknown claim id: " + id);
            selected.push_back(found);
        }
    }

    std::vector<ClaimResult> results;
    for (const Claim* cl : selected) {
        ClaimResult r{cl->id, cl->statement, false, ""};
        Checker c;
        try {
            cl->body(c);
            r.pass = c.ok;
            r.detail = c.ok ? std::to_string(c.checks) + " checks" : c.first_fail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string claims_table(const std::vector<ClaimResult>& results, bool color) {
    std::size_t idw = 0;
    for (const ClaimResult& r : results) idw = std::max(idw, r.id.size());
    std::ostringstream out;
    int passed = 0;
    for (const ClaimResult& r : results) {
        std::string tag = r.pass ? "PASS" : "FAIL";
        if (color) tag = (r.pass ? "\x1b[32m" : "\x1b[31m") + tag + "\x1b[0m";
        out << tag << "  " << r.id << std::string(idw - r.id.size() + 2, ' ') << r.statement
            << "\n";
        if (!r.pass) out << "      -> " << r.detail << "\n";
        if (r.pass) ++passed;
    }
    out << passed << "/" << results.size() << " claims passed\n";
    return out.str();
}

std::string claims_json(const std::vector<ClaimResult>& results) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ClaimResult& r : results) {
        nlohmann::json e;
        e["id"] = r.id;
        e["statement"] = r.statement;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        arr.push_back(e);
    }
    return arr.dump(2) + "\n";
}

}  // namespace grouplab
