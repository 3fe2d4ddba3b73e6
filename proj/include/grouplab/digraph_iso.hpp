#pragma once

#include <vector>

namespace grouplab {

/// Dense edge-weighted digraph. w[i][j] is the weight of the edge i -> j,
/// with 0 meaning no edge. node_invariant, when non-empty, seeds the color
/// refinement with a per-vertex value that any isomorphism must preserve.
struct WeightedDigraph {
    int n = 0;
    std::vector<std::vector<int>> w;
    std::vector<long long> node_invariant;
};

/// Number of weight-preserving automorphisms. When moved is non-null it is
/// resized to n and moved[v] is set iff some automorphism displaces v.
long long automorphism_census(const WeightedDigraph& g, std::vector<char>* moved = nullptr);

/// First weight-preserving isomorphism from a onto b, written into witness
/// (witness[i] = image of vertex i) when one exists.
bool digraphs_isomorphic(const WeightedDigraph& a, const WeightedDigraph& b,
                         std::vector<int>* witness = nullptr);

}  // namespace grouplab
