#pragma once

#include <string>
#include <utility>
#include <vector>

#include "grouplab/group.hpp"
#include "grouplab/subgroups.hpp"

namespace grouplab {

/// Group isomorphism with a verified witness: on success, witness[x] is the
/// image of x and the map has been checked to be a bijective homomorphism.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>* witness = nullptr);

/// Canonical name for the isomorphism type: C1, Cn, V4, invariant-factor
/// products like C4xC2, and the named nonabelian families (Dn, Qn, Dicn,
/// SDn, SAn, DQn). Falls back to a deterministic fingerprint tag.
std::string iso_label(const FiniteGroup& g);

/// Inner split of g: kernel is normal, the parts intersect trivially, and
/// their sizes multiply to |g|. direct marks the complement also normal.
struct SplitDecomposition {
    Subgroup kernel;
    Subgroup complement;
    std::string kernel_label;
    std::string complement_label;
    bool direct = false;
};
std::vector<SplitDecomposition> semidirect_decompositions(const FiniteGroup& g);

/// Inner central product: the parts commute elementwise, generate g, and
/// overlap in a nontrivial (hence central) subgroup.
struct CentralProduct {
    Subgroup left;
    Subgroup right;
    std::string left_label;
    std::string right_label;
    int intersection_order = 0;
};
std::vector<CentralProduct> central_product_decompositions(const FiniteGroup& g);

/// Subgroup lattice folded along conjugacy: one node per conjugacy class
/// of subgroups, with covers of the induced order.
struct ReducedLattice {
    std::vector<std::vector<int>> classes;  // indices into the full lattice nodes
    std::vector<int> sizes;                 // subgroup order per class
    std::vector<std::string> labels;        // iso label per class
    std::vector<std::pair<int, int>> edges; // lower class -> upper class covers
};
ReducedLattice reduced_lattice(const FiniteGroup& g);

/// Union of polygons, one per maximal cyclic subgroup: an order-k subgroup
/// with k >= 3 contributes a k-gon through its elements in power order, an
/// order-2 subgroup a single edge at the identity.
struct CycleGraph {
    int vertices = 0;
    std::vector<std::vector<int>> cycles;    // element orbits, identity first
    std::vector<std::pair<int, int>> edges;  // undirected, first < second
};
CycleGraph cycle_graph(const FiniteGroup& g);

/// witness, when requested, receives a vertex bijection realizing the match.
bool cycle_graphs_isomorphic(const CycleGraph& a, const CycleGraph& b,
                             std::vector<int>* witness = nullptr);

}  // namespace grouplab
