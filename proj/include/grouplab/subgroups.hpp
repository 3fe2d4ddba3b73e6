#pragma once

#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

/// Cover relation in a subgroup lattice: lower is maximal in upper, and
/// index = |upper| / |lower|.
struct CoverEdge {
    int lower = 0;
    int upper = 0;
    int index = 0;
};

/// Full subgroup lattice. nodes is sorted by (size, members); nodes.front()
/// is the trivial subgroup and nodes.back() the whole group. covers is
/// sorted by (lower, upper).
struct Lattice {
    const FiniteGroup* parent = nullptr;
    std::vector<Subgroup> nodes;
    std::vector<CoverEdge> covers;
};

/// Every subgroup, sorted by (size, members). Rejects groups of order > 64
/// with Err::TooLarge.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Subgroup& s, int by);

/// Orbits of subs under conjugation, as index lists into subs. Each class
/// is sorted; classes appear in order of their smallest index.
std::vector<std::vector<int>> subgroup_conjugacy_classes(const FiniteGroup& g,
                                                         const std::vector<Subgroup>& subs);

/// Materializes a subgroup as a standalone group. Element 0 is the
/// identity; labels are inherited from the parent.
FiniteGroup subgroup_group(const Subgroup& s);

Lattice subgroup_lattice(const FiniteGroup& g);

/// Number of permutations of the lattice nodes preserving the cover
/// relation together with every cover's index.
long long lattice_automorphism_count(const Lattice& l);

/// Indices of nodes fixed by every index-preserving lattice automorphism.
std::vector<int> lattice_unicorns(const Lattice& l);

/// True when the two lattices are isomorphic as index-weighted order
/// structures; witness receives a node bijection when requested.
bool lattices_equal(const Lattice& a, const Lattice& b, std::vector<int>* witness = nullptr);

}  // namespace grouplab
