#pragma once

#include <optional>

#include "majority/hypergraph.hpp"
#include "majority/search_budget.hpp"

namespace majority {

struct MinSearchResult {
  int k = 0;
  int n = 0;
  int q_cap = 0;
  // Least edge count of a k-uniform hypergraph on n vertices lacking the
  // property; empty when that count exceeds q_cap.
  std::optional<int> value;
  std::optional<Hypergraph> witness;
  long candidates = 0;  // non-isomorphic hypergraphs examined
};

// m(k, n): the fewest edges of a k-uniform hypergraph on n vertices without
// Property B. Exhaustive up to isomorphism for every edge count <= q_cap.
MinSearchResult min_non_property_b(int k, int n, int q_cap, const SearchBudget& budget = {});

// d(k, n): the same for Property C.
MinSearchResult min_non_property_c(int k, int n, int q_cap, const SearchBudget& budget = {});

}  // namespace majority
