#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "majority/hypergraph.hpp"

namespace majority {

// Sorted relabeled edge words. Two hypergraphs on the same vertex count are
// isomorphic exactly when their canonical forms are equal.
using CanonicalForm = std::vector<std::uint64_t>;

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> perm;  // perm[v] = canonical label of v
};

// Individualization/refinement over the vertex-edge incidence structure.
// Refinement only narrows the set of labelings that are compared; the least
// form over the surviving labelings is returned, so the result is exact for
// every refinement strength.
CanonicalLabeling canonical_labeling(const Hypergraph& h);
CanonicalForm canonical_form(const Hypergraph& h);

// Reference canonical form by trying all n! labelings. Small n only.
CanonicalForm brute_force_canonical_form(const Hypergraph& h);

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

Hypergraph from_canonical_form(int n, int uniform_k, const CanonicalForm& form);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

}  // namespace majority
