#pragma once

#include <string>
#include <vector>

#include "grouplab/mat2.hpp"

namespace grouplab {

// A finite group captured as a full multiplication table.
// Element 0 is always the identity and table[a][b] is the index of a*b
// (products read left to right).
struct FiniteGroup {
    int order = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    std::vector<int> generators;
    std::string source;
};

// A subgroup is a sorted member list inside a parent group.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members;
    int size() const { return static_cast<int>(members.size()); }
};

// Breadth-first closure of the generators under mat_mul, starting from the
// identity. Element identity is the canonical matrix form; afterwards all
// operations are table lookups. Throws CapExceeded when the closure grows
// past cap and OrderMismatch when generators live in different rings.
FiniteGroup generate_group(const std::vector<Mat2>& gens, int cap = 256);

int multiply(const FiniteGroup& g, int a, int b);
int inverse(const FiniteGroup& g, int x);
int element_order(const FiniteGroup& g, int x);
int conjugate_element(const FiniteGroup& g, int by, int x);  // by * x * by^-1

// Closure of a seed set under the group operation.
std::vector<int> closure_of(const FiniteGroup& g, std::vector<int> seed);
bool is_subgroup_set(const FiniteGroup& g, const std::vector<int>& members);

Subgroup center(const FiniteGroup& g);
std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);

bool is_normal(const FiniteGroup& g, const std::vector<int>& members);

// G/N for a normal N. Coset representatives are the minimal element
// indices; the identity coset is labelled "N", others "<rep>N".
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

// Words are sequences of nonzero letters: +i means generator i-1,
// -i its inverse. True iff every word evaluates to the identity.
// Letters referring to generators that do not exist raise BadWord.
bool check_relations(const FiniteGroup& g, const std::vector<std::vector<int>>& words);

// Structural invariants every table must satisfy: square shape, identity
// row and column, Latin rows and columns, in-range generators that
// generate everything. Returns an empty string when the table is sound,
// otherwise a one-line description of the first violation.
std::string table_violation(const FiniteGroup& g);

}  // namespace grouplab
