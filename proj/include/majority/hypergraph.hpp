#pragma once

#include <optional>
#include <string>
#include <vector>

#include "majority/vertex_set.hpp"

namespace majority {

// n labeled vertices and an ordered list of edges. Doubles as a query set,
// where each edge is one query.
//
// Edges are nonempty subsets of [0, n). When `uniform_k` is nonzero every edge
// has exactly that many members. Repeated edges are rejected unless the
// hypergraph is built as a multi-hypergraph.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(int n, std::vector<VertexSet> edges = {}, int uniform_k = 0,
                      bool multi = false);

  int n() const { return n_; }
  int uniform_k() const { return uniform_k_; }
  bool is_multi() const { return multi_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const VertexSet& operator[](int i) const { return edges_[i]; }

  VertexSet support() const;
  int degree(int v) const;
  std::vector<int> degrees() const;
  int total_size() const;
  bool contains_edge(VertexSet e) const;

  // Copy with `e` appended (same uniformity / multiplicity rules).
  Hypergraph with_edge(VertexSet e) const;
  // Copy with the same edges on a larger or equal vertex count.
  Hypergraph with_vertex_count(int n) const;
  // Relabels vertices through `perm` (perm[old] = new, a permutation of [0, n)).
  Hypergraph relabeled(const std::vector<int>& perm) const;
  // Relabels the covered vertices onto {0, ..., |support| - 1} keeping their
  // relative order.
  Hypergraph compacted() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
  int uniform_k_ = 0;
  bool multi_ = false;
};

// Two-coloring of [0, n); the complement of `blue` is red.
struct Coloring {
  int n = 0;
  VertexSet blue;

  Coloring() = default;
  Coloring(int n, VertexSet blue);

  VertexSet red() const { return VertexSet::all(n) - blue; }
  bool is_blue(int v) const { return blue.contains(v); }
  Coloring swapped() const { return Coloring{n, red()}; }
  bool operator==(const Coloring&) const = default;
};

// Connected components of H over all n vertices; isolated vertices are
// singleton parts. Parts are ordered by their least member.
std::vector<VertexSet> components(const Hypergraph& h);
bool is_connected(const Hypergraph& h);

// Any two edges share at most one vertex.
bool is_linear(const Hypergraph& h);

struct LinearCycle {
  std::vector<int> edges;  // indices into H, in cyclic order
  std::vector<int> joints; // joints[j] is the single vertex shared by edges[j] and edges[j+1]
  int covered = 0;         // |union of the cycle's edges|
};

// All linear cycles with at most `len_cap` edges. A cycle h_1..h_l (l >= 3)
// qualifies when consecutive edges (cyclically) meet in exactly one vertex,
// these joint vertices are distinct, and non-consecutive edges are disjoint.
// Each cycle is reported once, starting at its least edge index and walking
// towards the smaller of the two neighbours.
std::vector<LinearCycle> linear_cycles(const Hypergraph& h, int len_cap);

// All k-subsets of [0, n) in lexicographic order of their sorted members.
std::vector<VertexSet> k_subsets(int n, int k);

// Smallest positive integer that does not divide i (i >= 1).
long snd(long i);

}  // namespace majority
