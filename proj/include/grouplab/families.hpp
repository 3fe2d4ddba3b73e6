#pragma once

#include <string>
#include <vector>

#include "grouplab/group.hpp"

namespace grouplab {

// Group families built from the standard 2x2 representations.
// Parameter rules raise Parameter, OddParameter or InvalidTwist.

FiniteGroup cyclic(int n);                    // <R(n)>, n >= 1
FiniteGroup dihedral(int n);                  // <R(n), F>, n >= 3, order 2n
FiniteGroup dicyclic(int n);                  // <R(n), S>, n even >= 4, order 2n
FiniteGroup generalized_quaternion(int n2);   // dicyclic(n2/2), n2 a power of 2 >= 8
FiniteGroup diquaternion(int m);              // <R(m), S, F>, m a power of 2 >= 4, order 4m
FiniteGroup semidihedral(int n);              // <diag(z, -conj z), F>, n a power of 2 >= 8
FiniteGroup semiabelian(int n);               // <diag(z, -z), F>, n a power of 2 >= 8
FiniteGroup abelian_cn_c2(int n);             // <diag(z, z), F>, n >= 2

// All k in [1, n) with k*k = 1 mod n, by exhaustive scan.
std::vector<int> square_roots_of_one(int n);

// C_n x| C_2 with s r s = r^k, built directly on normal forms r^a s^b.
// Requires n >= 2, 1 <= k < n, k*k = 1 mod n and gcd(k, n) = 1.
FiniteGroup semidirect_cn_c2(int n, int k);

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// A constructed group together with its display name.
struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

// Case-insensitive family grammar used by the command line:
//   C<n>            cyclic
//   C<a>xC<b>[x...] direct product of cyclics
//   D<n>            dihedral (order 2n)
//   Dic<n>          dicyclic (order 2n, n even)
//   Q<n>            generalized quaternion (order n, a power of 2 >= 8)
//   DQ<n>           diquaternion of order 2n (n = 8 or 16, ...)
//   SD<n>, SA<n>    semidihedral / semiabelian (order 2n, n a power of 2 >= 8)
//   sdp:<n>:<k>     semidirect_cn_c2(n, k)
//   pauli1          the 16-element 1-qubit Pauli group (same as DQ8)
// Unknown shapes raise Parse; out-of-range parameters raise the
// constructor's error.
NamedGroup construct_family(const std::string& spec);

}  // namespace grouplab
