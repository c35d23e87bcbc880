#pragma once

#include <optional>
#include <string>

#include "majority/hypergraph.hpp"
#include "majority/models.hpp"

namespace majority {

// Construction-specific data kept next to the queries.
struct StrategyAux {
  std::optional<int> spare;           // OM, odd n: the ball left out of the chain
  std::optional<VertexSet> core;      // CM, even k: the fixed (k-1)-set
  std::optional<Hypergraph> family;   // CM odd k: F'; GM/BM: F
  std::optional<VertexSet> extra_edge;  // CM odd k: edge appended to F, if any
  bool operator==(const StrategyAux&) const = default;
};

struct Strategy {
  ModelId model = ModelId::OM;
  int n = 0;
  int k = 0;
  std::string provenance;
  Hypergraph queries;
  StrategyAux aux;
  bool operator==(const Strategy&) const = default;
};

inline constexpr const char* kOmChain = "om-connected-chain";
inline constexpr const char* kCmEvenCore = "cm-even-core-supersets";
inline constexpr const char* kCmOddFamily = "cm-odd-unbalanced-family-supersets";
inline constexpr const char* kGmNonB = "gm-non-property-b-supersets";

// Default edge cap when a construction has to search for its family.
inline constexpr int kDefaultFamilyCap = 12;

// A connected k-uniform chain on all balls (n even) or on balls 0..n-2 with
// ball n-1 spare (n odd). Needs 2 <= k <= n.
Strategy build_om(int n, int k);

// All k-sets containing the core {0..k-2}. Needs k even and n >= 2k-1.
Strategy build_cm_even(int n, int k);

// All k-supersets of the edges of F', where F is a (k-1)-uniform hypergraph
// without Property C and F' adds one edge when needed so that the queries
// themselves lack Property C. Needs k odd >= 3 and n >= 2k-1. F defaults to
// a minimum one found by search.
Strategy build_cm_odd(int n, int k, std::optional<Hypergraph> family = std::nullopt,
                      int family_cap = kDefaultFamilyCap);

// All k-supersets of the edges of F, a (k-1)-uniform hypergraph on balls
// 0..n-2 without Property B. Serves GM and BM (pass model = BM).
Strategy build_gm(int n, int k, std::optional<Hypergraph> family = std::nullopt,
                  ModelId model = ModelId::GM, int family_cap = kDefaultFamilyCap);

// Constructive decoding of the strategy's answers. Throws NoConsistentColoring
// when no coloring produces the answers.
Output decode(const Strategy& strategy, const AnswerVector& answers);

}  // namespace majority
