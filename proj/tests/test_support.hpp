#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "majority/hypergraph.hpp"

namespace majority::testing {

inline Hypergraph graph(int n, std::vector<VertexSet> edges, int k = 0) {
  return Hypergraph(n, std::move(edges), k);
}

inline Hypergraph fano() {
  return Hypergraph(7,
                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}},
                    3);
}

// q distinct random k-subsets of [0, n).
inline Hypergraph random_uniform(std::mt19937_64& rng, int n, int k, int q) {
  const auto pool = k_subsets(n, k);
  std::vector<VertexSet> chosen;
  while (static_cast<int>(chosen.size()) < q) {
    const VertexSet e = pool[rng() % pool.size()];
    bool fresh = true;
    for (VertexSet f : chosen) fresh = fresh && f != e;
    if (fresh) chosen.push_back(e);
  }
  return Hypergraph(n, std::move(chosen), k);
}

// Every coloring of n balls, as blue sets.
inline std::vector<Coloring> all_colorings(int n) {
  std::vector<Coloring> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.emplace_back(n, VertexSet(b));
  return out;
}

}  // namespace majority::testing
