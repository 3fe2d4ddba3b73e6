// Subgroup enumeration, the full lattice with index-weighted covers, and
// the lattice automorphism machinery.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "doctest.h"
#include "grouplab/families.hpp"
#include "grouplab/subgroups.hpp"
#include "support/table_oracle.hpp"

using namespace grouplab;

namespace {

int find_of_order(const FiniteGroup& g, int k) {
    for (int x = 0; x < g.order; ++x)
        if (element_order(g, x) == k) return x;
    FAIL("no element of order " << k);
    return -1;
}

Subgroup cyclic_sub(const FiniteGroup& g, int x) { return {&g, closure_of(g, {x})}; }

}  // namespace

TEST_CASE("subgroup counts across the catalog") {
    CHECK(all_subgroups(cyclic(1)).size() == 1);
    CHECK(all_subgroups(generalized_quaternion(8)).size() == 6);
    CHECK(all_subgroups(dicyclic(6)).size() == 8);
    CHECK(all_subgroups(generalized_quaternion(16)).size() == 11);
    CHECK(all_subgroups(semidihedral(8)).size() == 15);
    CHECK(all_subgroups(dihedral(6)).size() == 16);
    CHECK(all_subgroups(dihedral(8)).size() == 19);
    CHECK(all_subgroups(generalized_quaternion(32)).size() == 20);
    CHECK(all_subgroups(diquaternion(4)).size() == 23);
    CHECK(all_subgroups(abelian_cn_c2(8)).size() == 11);
    CHECK(all_subgroups(semiabelian(8)).size() == 11);
    CHECK(all_subgroups(abelian_cn_c2(16)).size() == 14);
    CHECK(all_subgroups(direct_product(cyclic(4), direct_product(cyclic(2), cyclic(2)))).size() ==
          27);
    CHECK(all_subgroups(dihedral(16)).size() == 36);
    CHECK(all_subgroups(generalized_quaternion(64)).size() == 37);
}

TEST_CASE("enumeration agrees with the exhaustive small-subset oracle") {
    for (const FiniteGroup& g : {generalized_quaternion(8), dihedral(6), diquaternion(4),
                                 abelian_cn_c2(8), semidihedral(8), semidirect_cn_c2(8, 5)}) {
        std::set<std::vector<int>> expected = table_oracle::all_subgroups_small(g);
        std::set<std::vector<int>> got;
        for (const Subgroup& s : all_subgroups(g)) got.insert(s.members);
        CHECK(got == expected);
    }
}

TEST_CASE("every enumerated member set is a subgroup containing the identity") {
    FiniteGroup g = semidihedral(8);
    for (const Subgroup& s : all_subgroups(g)) {
        CHECK(is_subgroup_set(g, s.members));
        REQUIRE(!s.members.empty());
        CHECK(s.members[0] == 0);
        CHECK(g.order % s.size() == 0);
    }
}

TEST_CASE("enumeration rejects oversized groups") {
    FiniteGroup big = direct_product(cyclic(10), cyclic(10));
    try {
        all_subgroups(big);
        FAIL("expected a size rejection");
    } catch (const Error& e) {
        CHECK(e.code() == Err::TooLarge);
    }
}

TEST_CASE("meet and join in the dihedral group on six points") {
    FiniteGroup d6 = dihedral(6);
    int r = find_of_order(d6, 6);
    int r2 = d6.table[r][r];
    int r3 = d6.table[r2][r];
    Subgroup c3 = cyclic_sub(d6, r2), c2 = cyclic_sub(d6, r3);
    CHECK(c3.size() == 3);
    CHECK(c2.size() == 2);
    CHECK(intersect(c3, c2).size() == 1);
    CHECK(join(c3, c2).members == closure_of(d6, {r}));

    int s = -1;
    for (int x = 1; x < d6.order; ++x)
        if (element_order(d6, x) == 2 && !is_normal(d6, closure_of(d6, {x}))) {
            s = x;
            break;
        }
    REQUIRE(s >= 0);
    int rs = d6.table[r][s];
    Subgroup a = cyclic_sub(d6, s), b = cyclic_sub(d6, rs);
    CHECK(intersect(a, b).size() == 1);
    CHECK(join(a, b).size() == 12);  // adjacent reflections generate everything
}

TEST_CASE("subgroup materialization produces sound tables") {
    FiniteGroup d6 = dihedral(6);
    for (const Subgroup& s : all_subgroups(d6)) {
        FiniteGroup h = subgroup_group(s);
        CHECK(h.order == s.size());
        CHECK(table_violation(h).empty());
        CHECK(table_oracle::associative(h));
        CHECK(h.labels[0] == d6.labels[0]);
    }
}

TEST_CASE("conjugation permutes the subgroup list") {
    FiniteGroup g = dicyclic(6);
    std::vector<Subgroup> subs = all_subgroups(g);
    std::set<std::vector<int>> all;
    for (const Subgroup& s : subs) all.insert(s.members);
    for (const Subgroup& s : subs)
        for (int by = 0; by < g.order; ++by) {
            Subgroup c = conjugate_subgroup(s, by);
            CHECK(c.size() == s.size());
            CHECK(all.count(c.members) == 1);
        }
}

TEST_CASE("subgroup conjugacy classes of the order-12 dicyclic group") {
    FiniteGroup g = dicyclic(6);
    std::vector<Subgroup> subs = all_subgroups(g);
    auto classes = subgroup_conjugacy_classes(g, subs);
    CHECK(classes.size() == 6);
    // the three order-4 subgroups fuse into one class
    int fused = 0;
    for (const auto& cls : classes)
        if (cls.size() == 3) {
            ++fused;
            for (int i : cls) CHECK(subs[i].size() == 4);
        }
    CHECK(fused == 1);
    // a subgroup is normal exactly when its class is a singleton
    for (const auto& cls : classes)
        for (int i : cls) CHECK(is_normal(g, subs[i].members) == (cls.size() == 1));
}

TEST_CASE("subgroup class statistics of the order-16 quaternion group") {
    FiniteGroup q16 = generalized_quaternion(16);
    std::vector<Subgroup> subs = all_subgroups(q16);
    REQUIRE(subs.size() == 11);
    auto classes = subgroup_conjugacy_classes(q16, subs);
    std::multiset<std::size_t> sizes;
    for (const auto& cls : classes) sizes.insert(cls.size());
    CHECK(classes.size() == 9);
    CHECK(sizes == std::multiset<std::size_t>{1, 1, 1, 1, 1, 1, 1, 2, 2});
}

TEST_CASE("order-16 layer profile of the rank-three abelian group") {
    FiniteGroup g = direct_product(cyclic(4), direct_product(cyclic(2), cyclic(2)));
    std::map<int, int> by_size;
    for (const Subgroup& s : all_subgroups(g)) ++by_size[s.size()];
    CHECK(by_size[1] == 1);
    CHECK(by_size[2] == 7);
    CHECK(by_size[4] == 11);
    CHECK(by_size[8] == 7);
    CHECK(by_size[16] == 1);
}

TEST_CASE("lattice of the quaternion group") {
    FiniteGroup q8 = generalized_quaternion(8);
    Lattice l = subgroup_lattice(q8);
    REQUIRE(l.nodes.size() == 6);
    CHECK(l.covers.size() == 7);
    for (const CoverEdge& e : l.covers) {
        CHECK(e.index == 2);
        CHECK(l.nodes[e.upper].size() == 2 * l.nodes[e.lower].size());
    }
    CHECK(lattice_automorphism_count(l) == 6);
    std::vector<int> fixed = lattice_unicorns(l);
    REQUIRE(fixed.size() == 3);
    CHECK(l.nodes[fixed[0]].size() == 1);
    CHECK(l.nodes[fixed[1]].size() == 2);
    CHECK(l.nodes[fixed[2]].size() == 8);
}

TEST_CASE("cover edges carry the subgroup index") {
    FiniteGroup dic6 = dicyclic(6);
    Lattice l = subgroup_lattice(dic6);
    for (const CoverEdge& e : l.covers) {
        CHECK(l.nodes[e.lower].size() * e.index == l.nodes[e.upper].size());
        CHECK(std::includes(l.nodes[e.upper].members.begin(), l.nodes[e.upper].members.end(),
                            l.nodes[e.lower].members.begin(), l.nodes[e.lower].members.end()));
    }
    // bottom to {C2,C3}: 2; C2 to {C4 x3, C6}: 4; C3 to C6: 1; {C4 x3, C6} to G: 4
    CHECK(l.covers.size() == 11);
}

TEST_CASE("dihedral lattice on sixteen points has a huge symmetry group") {
    FiniteGroup d16 = dihedral(16);
    Lattice l = subgroup_lattice(d16);
    REQUIRE(l.nodes.size() == 36);
    CHECK(lattice_automorphism_count(l) == 32768);
    std::vector<int> fixed = lattice_unicorns(l);
    REQUIRE(fixed.size() == 6);
    std::vector<int> sizes;
    for (int i : fixed) {
        sizes.push_back(l.nodes[i].size());
        CHECK(is_normal(*l.parent, l.nodes[i].members));
    }
    CHECK(sizes == std::vector<int>{1, 2, 4, 8, 16, 32});
}

TEST_CASE("two groups of order sixteen with the same weighted lattice") {
    FiniteGroup ga = abelian_cn_c2(8), gb = semiabelian(8);
    Lattice a = subgroup_lattice(ga);
    Lattice b = subgroup_lattice(gb);
    REQUIRE(a.nodes.size() == 11);
    REQUIRE(b.nodes.size() == 11);

    std::vector<int> witness;
    REQUIRE(lattices_equal(a, b, &witness));
    // the witness is a genuine weighted-cover bijection
    std::vector<char> hit(b.nodes.size(), 0);
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
        CHECK(a.nodes[i].size() == b.nodes[witness[i]].size());
        CHECK(!hit[witness[i]]);
        hit[witness[i]] = 1;
    }
    std::set<std::tuple<int, int, int>> covers_b;
    for (const CoverEdge& e : b.covers) covers_b.insert({e.lower, e.upper, e.index});
    for (const CoverEdge& e : a.covers)
        CHECK(covers_b.count({witness[e.lower], witness[e.upper], e.index}) == 1);
    CHECK(a.covers.size() == b.covers.size());

    CHECK(lattice_automorphism_count(a) == 4);
    CHECK(lattice_automorphism_count(b) == 4);
    CHECK(lattice_unicorns(a).size() == 7);
    CHECK(lattice_unicorns(b).size() == 7);
}

TEST_CASE("weighted comparison separates lattices plain order type cannot") {
    // both chains of length two; the edge weights differ
    CHECK_FALSE(lattices_equal(subgroup_lattice(cyclic(2)), subgroup_lattice(cyclic(3))));
    CHECK(lattices_equal(subgroup_lattice(cyclic(2)), subgroup_lattice(cyclic(2))));
    // different node counts
    CHECK_FALSE(lattices_equal(
        subgroup_lattice(direct_product(cyclic(4), direct_product(cyclic(2), cyclic(2)))),
        subgroup_lattice(diquaternion(4))));
}
