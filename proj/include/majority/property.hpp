#pragma once

#include <optional>

#include "majority/hypergraph.hpp"

namespace majority {

struct PropertyWitness {
  bool colorable = false;
  std::optional<Coloring> witness;
};

// Property B: some two-coloring leaves no edge monochromatic. Exact.
PropertyWitness has_property_b(const Hypergraph& h);

// Property C: some two-coloring makes every edge balanced, i.e. the two color
// classes inside each edge differ in size by at most one. Exact. Every edge
// must have at least two members.
PropertyWitness has_property_c(const Hypergraph& h);

// Reference decisions by trying all 2^n colorings; n <= 26.
bool naive_property_b(const Hypergraph& h);
bool naive_property_c(const Hypergraph& h);

bool is_monochromatic(VertexSet edge, const Coloring& c);
bool is_balanced(VertexSet edge, const Coloring& c);

}  // namespace majority
