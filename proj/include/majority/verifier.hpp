#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "majority/hypergraph.hpp"
#include "majority/models.hpp"

namespace majority {

// Node of the BM decoding DAG. Nodes at depth d have seen the answers to
// queries 0..d-1. A node either carries the output (valid for every coloring
// still consistent there) or routes on the answer to query d.
struct BmNode {
  int depth = 0;
  std::optional<Output> output;
  std::vector<std::pair<BmAnswer, int>> children;
};

// Proof that a query set always determines a valid output.
struct Certificate {
  ModelId model = ModelId::OM;
  Hypergraph queries;
  // OM/CM/GM: answer words (see answer_word) of every achievable vector.
  std::map<std::vector<std::uint64_t>, Output> table;
  // BM: decoding DAG rooted at node 0.
  std::vector<BmNode> nodes;

  // Output for an achievable answer vector; throws NoConsistentColoring when
  // the vector is not covered.
  Output lookup(const AnswerVector& answers) const;
};

// Jointly achievable answers shared by colorings with no common valid output.
struct FailureWitness {
  ModelId model = ModelId::OM;
  Hypergraph queries;
  AnswerVector answers;
  std::vector<Coloring> colorings;
};

using Verdict = std::variant<Certificate, FailureWitness>;

inline bool is_certificate(const Verdict& v) { return std::holds_alternative<Certificate>(v); }

struct VerifyOptions {
  int max_n_deterministic = 24;
  int max_n_bm = 14;
  // Upper limit on memoized BM search states; beyond it states are recomputed.
  std::size_t memo_cap = std::size_t{1} << 20;
};

// Groups all 2^n colorings by answer vector and intersects valid outputs per
// class. Classes are visited in order of their least coloring.
Verdict verify_deterministic(ModelId model, const Hypergraph& queries,
                             const VerifyOptions& options = {});

// Depth-first search over per-query adversary answers, carrying the set of
// colorings still consistent. A subtree is closed as soon as that set shares
// a valid output; states are memoized on (depth, coloring set).
Verdict verify_bm(const Hypergraph& queries, const VerifyOptions& options = {});

Verdict verify(ModelId model, const Hypergraph& queries, const VerifyOptions& options = {});

// Sufficiency only, without building the certificate.
bool is_sufficient(ModelId model, const Hypergraph& queries, const VerifyOptions& options = {});

// Reference decision by the plain double loop over colorings, with no grouping.
bool naive_sufficient(ModelId model, const Hypergraph& queries);

// True when naive_sufficient agrees with verify_deterministic.
bool cross_check_class_verifier(ModelId model, const Hypergraph& queries);

// Seeded k-uniform query sets for cross-checking the verifiers: model in
// OM/CM/GM, k in {2, 3, 4}, k <= n <= 10, 1 <= q <= 6 distinct queries.
// Depends only on the seed (std::mt19937_64 with plain modular reduction).
struct RandomQuerySet {
  ModelId model = ModelId::OM;
  Hypergraph queries;
};
std::vector<RandomQuerySet> random_query_sets(std::uint64_t seed, int count);

// Re-derive validity from scratch against every coloring (and every BM
// adversary choice).
bool replay(const Certificate& cert);
bool replay(const FailureWitness& witness);

// Some coloring producing (or, for BM, permitting) every answer; ball 0 is red.
std::optional<Coloring> find_consistent_coloring(const Hypergraph& queries,
                                                 const AnswerVector& answers);

}  // namespace majority
