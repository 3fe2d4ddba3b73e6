#include "grouplab/subgroups.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "grouplab/digraph_iso.hpp"
#include "grouplab/error.hpp"

namespace grouplab {
namespace {

// order <= 64, so member sets fit in one word
std::uint64_t mask_of(const std::vector<int>& members) {
    std::uint64_t m = 0;
    for (int x : members) m |= std::uint64_t(1) << x;
    return m;
}

void check_same_parent(const Subgroup& a, const Subgroup& b) {
    if (a.parent == nullptr || a.parent != b.parent)
        fail(Err::Parameter, "subgroup operation needs a shared parent group");
}

WeightedDigraph lattice_digraph(const Lattice& l) {
    WeightedDigraph d;
    d.n = static_cast<int>(l.nodes.size());
    d.w.assign(d.n, std::vector<int>(d.n, 0));
    for (const CoverEdge& e : l.covers) d.w[e.lower][e.upper] = e.index;
    d.node_invariant.reserve(d.n);
    for (const Subgroup& s : l.nodes) d.node_invariant.push_back(s.size());
    return d;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    if (g.order > 64) fail(Err::TooLarge, "subgroup enumeration supports order <= 64");
    std::map<std::uint64_t, int> seen;
    std::vector<std::vector<int>> subs;
    auto add = [&](std::vector<int> members) {
        std::uint64_t key = mask_of(members);
        if (seen.emplace(key, static_cast<int>(subs.size())).second) {
            subs.push_back(std::move(members));
            if (subs.size() > 512) fail(Err::TooLarge, "subgroup lattice exceeds 512 nodes");
        }
    };

    add({0});
    for (int x = 1; x < g.order; ++x) add(closure_of(g, {x}));

    // close under pairwise joins; each round only pairs a frontier subgroup
    // with everything before it
    std::size_t frontier = 0;
    while (frontier < subs.size()) {
        std::size_t end = subs.size();
        for (std::size_t i = frontier; i < end; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                std::vector<int> seed = subs[i];
                seed.insert(seed.end(), subs[j].begin(), subs[j].end());
                add(closure_of(g, std::move(seed)));
            }
        frontier = end;
    }

    std::sort(subs.begin(), subs.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Subgroup> out;
    out.reserve(subs.size());
    for (std::vector<int>& members : subs) out.push_back({&g, std::move(members)});
    return out;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    check_same_parent(a, b);
    std::vector<int> members;
    std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                          std::back_inserter(members));
    return {a.parent, std::move(members)};
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    check_same_parent(a, b);
    std::vector<int> seed = a.members;
    seed.insert(seed.end(), b.members.begin(), b.members.end());
    return {a.parent, closure_of(*a.parent, std::move(seed))};
}

Subgroup conjugate_subgroup(const Subgroup& s, int by) {
    if (s.parent == nullptr) fail(Err::Parameter, "subgroup has no parent group");
    std::vector<int> members;
    members.reserve(s.members.size());
    for (int x : s.members) members.push_back(conjugate_element(*s.parent, by, x));
    std::sort(members.begin(), members.end());
    return {s.parent, std::move(members)};
}

std::vector<std::vector<int>> subgroup_conjugacy_classes(const FiniteGroup& g,
                                                         const std::vector<Subgroup>& subs) {
    std::map<std::uint64_t, int> index_of;
    for (std::size_t i = 0; i < subs.size(); ++i)
        index_of[mask_of(subs[i].members)] = static_cast<int>(i);

    std::vector<std::vector<int>> classes;
    std::vector<char> placed(subs.size(), 0);
    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (placed[i]) continue;
        std::vector<int> cls;
        for (int by = 0; by < g.order; ++by) {
            Subgroup c = conjugate_subgroup(subs[i], by);
            auto it = index_of.find(mask_of(c.members));
            if (it == index_of.end())
                fail(Err::Parameter, "conjugate fell outside the supplied subgroup list");
            if (!placed[it->second]) {
                placed[it->second] = 1;
                cls.push_back(it->second);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

FiniteGroup subgroup_group(const Subgroup& s) {
    const FiniteGroup& g = *s.parent;
    int n = s.size();
    std::vector<int> local(g.order, -1);
    for (int i = 0; i < n; ++i) local[s.members[i]] = i;
    if (s.members.empty() || s.members[0] != 0)
        fail(Err::NotASubgroup, "member set lacks the identity");

    FiniteGroup h;
    h.order = n;
    h.source = "subgroup of order " + std::to_string(n);
    h.table.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        h.labels.push_back(g.labels[s.members[i]]);
        for (int j = 0; j < n; ++j) {
            int prod = local[g.table[s.members[i]][s.members[j]]];
            if (prod < 0) fail(Err::NotASubgroup, "member set is not closed");
            h.table[i][j] = prod;
        }
    }

    if (n == 1) {
        h.generators = {0};
        return h;
    }
    // greedy generating set: highest element order first
    std::vector<int> by_order(n);
    for (int i = 0; i < n; ++i) by_order[i] = i;
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&](int x, int y) { return element_order(h, x) > element_order(h, y); });
    std::vector<int> gens;
    std::vector<int> span{0};
    for (int x : by_order) {
        if (static_cast<int>(span.size()) == n) break;
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        std::vector<int> seed = span;
        seed.push_back(x);
        span = closure_of(h, std::move(seed));
    }
    std::sort(gens.begin(), gens.end());
    h.generators = gens;
    return h;
}

Lattice subgroup_lattice(const FiniteGroup& g) {
    Lattice l;
    l.parent = &g;
    l.nodes = all_subgroups(g);
    int n = static_cast<int>(l.nodes.size());
    std::vector<std::uint64_t> masks(n);
    for (int i = 0; i < n; ++i) masks[i] = mask_of(l.nodes[i].members);

    auto below = [&](int i, int j) {
        return i != j && (masks[i] & masks[j]) == masks[i];
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!below(i, j)) continue;
            bool covered = false;
            for (int k = 0; k < n && !covered; ++k)
                if (below(i, k) && below(k, j)) covered = true;
            if (!covered)
                l.covers.push_back({i, j, l.nodes[j].size() / l.nodes[i].size()});
        }
    std::sort(l.covers.begin(), l.covers.end(), [](const CoverEdge& a, const CoverEdge& b) {
        if (a.lower != b.lower) return a.lower < b.lower;
        return a.upper < b.upper;
    });
    return l;
}

long long lattice_automorphism_count(const Lattice& l) {
    if (l.nodes.size() > 64) fail(Err::TooLarge, "lattice automorphism search supports <= 64 nodes");
    return automorphism_census(lattice_digraph(l), nullptr);
}

std::vector<int> lattice_unicorns(const Lattice& l) {
    if (l.nodes.size() > 64) fail(Err::TooLarge, "lattice automorphism search supports <= 64 nodes");
    std::vector<char> moved;
    automorphism_census(lattice_digraph(l), &moved);
    std::vector<int> fixed;
    for (std::size_t i = 0; i < moved.size(); ++i)
        if (!moved[i]) fixed.push_back(static_cast<int>(i));
    return fixed;
}

bool lattices_equal(const Lattice& a, const Lattice& b, std::vector<int>* witness) {
    if (a.nodes.size() > 64 || b.nodes.size() > 64)
        fail(Err::TooLarge, "lattice comparison supports <= 64 nodes");
    return digraphs_isomorphic(lattice_digraph(a), lattice_digraph(b), witness);
}

}  // namespace grouplab
