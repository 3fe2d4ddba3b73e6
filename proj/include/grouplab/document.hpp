#pragma once

#include <string>

#include "grouplab/families.hpp"

namespace grouplab {

// Serialized group document, schema 1. Fields: generators, labels, name,
// order, provenance, schema, table. Emission is byte-deterministic.
std::string group_document_json(const NamedGroup& g, const std::string& provenance);

// Parses and validates a schema-1 document. Shape problems and table
// violations raise Parse; the loaded table is checked like a fresh one.
NamedGroup group_from_document(const std::string& text);

// Cayley graph in DOT, one color per generator, right multiplication.
// Generators of order 2 are drawn as single undirected edges. Nodes carry
// polar position hints: the orbits of the first generator fall on
// concentric circles, roots of unity at their circle angles.
std::string dot_cayley(const NamedGroup& g);

// Cycle graph in DOT: the union of the maximal cyclic subgroup polygons.
std::string dot_cycle(const NamedGroup& g);

// Full subgroup lattice in DOT as a bottom-to-top DAG. Nodes are labelled
// with isomorphism-type names and cover edges with their index.
std::string dot_lattice(const NamedGroup& g);

// Structural report as JSON: order data, subgroup and normal counts,
// lattice statistics, unicorns, conjugacy class sizes, decompositions
// with isomorphism labels, and cycle graph size.
std::string analyze_json(const NamedGroup& g);

}  // namespace grouplab
