#pragma once

#include <optional>
#include <vector>

#include "majority/hypergraph.hpp"
#include "majority/models.hpp"
#include "majority/search_budget.hpp"
#include "majority/verifier.hpp"

namespace majority {

struct ExactOptions {
  // First query count to test. Smaller counts are skipped without being
  // certified insufficient, so leave unset when the value itself is on trial.
  std::optional<int> start_q;
  // Known upper bound, reported in the bracket when the budget runs out.
  std::optional<int> upper_hint;
  // Also return every non-isomorphic sufficient set at the optimal count.
  bool collect_all_optimal = false;
  SearchBudget budget;
  VerifyOptions verify;
};

struct ExactResult {
  ModelId model = ModelId::OM;
  int k = 0;
  int n = 0;
  // N(model, k, n); empty when even the set of all k-subsets is insufficient.
  std::optional<int> value;
  std::optional<Hypergraph> optimal_queries;
  std::vector<Hypergraph> all_optimal;
  long candidates = 0;  // non-isomorphic query sets verified
};

// Least number of non-adaptive k-queries that always determine a valid
// output, by testing query sets of increasing size, one representative per
// orbit of the ball permutations. Desk scale only (n around 8).
ExactResult exact_n(ModelId model, int k, int n, const ExactOptions& options = {});

}  // namespace majority
