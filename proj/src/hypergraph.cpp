#include "majority/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "majority/errors.hpp"

namespace majority {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges, int uniform_k, bool multi)
    : n_(n), edges_(std::move(edges)), uniform_k_(uniform_k), multi_(multi) {
  if (n_ < 0 || n_ > kMaxVertices)
    throw InvalidParameters("vertex count must be in [0, 64], got " + std::to_string(n_));
  if (uniform_k_ < 0 || uniform_k_ > n_)
    throw InvalidParameters("uniform edge size " + std::to_string(uniform_k_) +
                            " out of range for n = " + std::to_string(n_));
  const VertexSet ground = VertexSet::all(n_);
  for (const VertexSet& e : edges_) {
    if (e.empty()) throw InvalidParameters("empty edge");
    if (!e.subset_of(ground)) throw InvalidParameters("edge leaves [0, n)");
    if (uniform_k_ != 0 && e.size() != uniform_k_)
      throw InvalidParameters("edge of size " + std::to_string(e.size()) +
                              " in a " + std::to_string(uniform_k_) + "-uniform hypergraph");
  }
  if (!multi_) {
    std::vector<VertexSet> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidParameters("duplicate edge in a simple hypergraph");
  }
}

VertexSet Hypergraph::support() const {
  VertexSet s;
  for (const VertexSet& e : edges_) s |= e;
  return s;
}

int Hypergraph::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](VertexSet e) { return e.contains(v); }));
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const VertexSet& e : edges_)
    for (int v : e) ++deg[v];
  return deg;
}

int Hypergraph::total_size() const {
  int total = 0;
  for (const VertexSet& e : edges_) total += e.size();
  return total;
}

bool Hypergraph::contains_edge(VertexSet e) const {
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

Hypergraph Hypergraph::with_edge(VertexSet e) const {
  std::vector<VertexSet> edges = edges_;
  edges.push_back(e);
  return Hypergraph(n_, std::move(edges), uniform_k_, multi_);
}

Hypergraph Hypergraph::with_vertex_count(int n) const {
  return Hypergraph(n, edges_, uniform_k_, multi_);
}

Hypergraph Hypergraph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidParameters("permutation size mismatch");
  std::vector<VertexSet> edges;
  edges.reserve(edges_.size());
  for (const VertexSet& e : edges_) {
    VertexSet mapped;
    for (int v : e) mapped.insert(perm[v]);
    edges.push_back(mapped);
  }
  return Hypergraph(n_, std::move(edges), uniform_k_, multi_);
}

Hypergraph Hypergraph::compacted() const {
  std::vector<int> perm(n_);
  const VertexSet covered = support();
  int next = 0;
  for (int v = 0; v < n_; ++v)
    if (covered.contains(v)) perm[v] = next++;
  for (int v = 0; v < n_; ++v)
    if (!covered.contains(v)) perm[v] = next++;
  return relabeled(perm);
}

Coloring::Coloring(int n_, VertexSet blue_) : n(n_), blue(blue_) {
  if (n < 0 || n > kMaxVertices) throw InvalidParameters("coloring vertex count out of range");
  if (!blue.subset_of(VertexSet::all(n))) throw InvalidParameters("blue set leaves [0, n)");
}

std::vector<VertexSet> components(const Hypergraph& h) {
  std::vector<int> parent(h.n());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const VertexSet& e : h.edges()) {
    const int root = find(e.min());
    for (int v : e) parent[find(v)] = root;
  }
  std::vector<VertexSet> parts;
  std::vector<int> part_of_root(h.n(), -1);
  for (int v = 0; v < h.n(); ++v) {
    const int r = find(v);
    if (part_of_root[r] < 0) {
      part_of_root[r] = static_cast<int>(parts.size());
      parts.emplace_back();
    }
    parts[part_of_root[r]].insert(v);
  }
  return parts;
}

bool is_connected(const Hypergraph& h) { return components(h).size() <= 1; }

bool is_linear(const Hypergraph& h) {
  const auto& e = h.edges();
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if ((e[a] & e[b]).size() > 1) return false;
  return true;
}

namespace {

struct CycleSearch {
  const std::vector<VertexSet>& edges;
  int len_cap;
  std::vector<LinearCycle>& out;
  std::vector<int> path;
  std::vector<int> joints;
  VertexSet used_joints;

  // path[0] is the start; extends while keeping the chain linear.
  void extend() {
    const int last = path.back();
    const int first = path.front();
    const int len = static_cast<int>(path.size());
    // try closing
    if (len >= 3) {
      const VertexSet meet = edges[last] & edges[first];
      if (meet.size() == 1 && !used_joints.intersects(meet) && path[1] < last &&
          closes_cleanly()) {
        LinearCycle c;
        c.edges = path;
        c.joints = joints;
        c.joints.push_back(meet.min());
        VertexSet covered;
        for (int i : path) covered |= edges[i];
        c.covered = covered.size();
        out.push_back(std::move(c));
      }
    }
    if (len >= len_cap) return;
    for (int next = first + 1; next < static_cast<int>(edges.size()); ++next) {
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      const VertexSet meet = edges[last] & edges[next];
      if (meet.size() != 1 || used_joints.intersects(meet)) continue;
      // next may touch the start edge only if it ends up closing the cycle;
      // closes_cleanly() rejects the rest.
      bool ok = true;
      for (int i = 0; i + 1 < len && ok; ++i)
        if (i != 0 && edges[path[i]].intersects(edges[next])) ok = false;
      if (!ok) continue;
      path.push_back(next);
      joints.push_back(meet.min());
      used_joints |= meet;
      extend();
      used_joints -= meet;
      joints.pop_back();
      path.pop_back();
    }
  }

  // Non-consecutive pairs must be disjoint once the cycle closes: the start
  // edge may only meet path[1] and path.back().
  bool closes_cleanly() const {
    const int len = static_cast<int>(path.size());
    for (int i = 2; i + 1 < len; ++i)
      if (edges[path[0]].intersects(edges[path[i]])) return false;
    // joints distinct and each joint lies in exactly its two edges
    for (std::size_t j = 0; j < joints.size(); ++j) {
      const int v = joints[j];
      int count = 0;
      for (int i : path)
        if (edges[i].contains(v)) ++count;
      if (count != 2) return false;
    }
    return true;
  }
};

}  // namespace

std::vector<LinearCycle> linear_cycles(const Hypergraph& h, int len_cap) {
  std::vector<LinearCycle> out;
  const auto& edges = h.edges();
  for (int start = 0; start < h.size(); ++start) {
    CycleSearch search{edges, len_cap, out, {start}, {}, {}};
    search.extend();
  }
  return out;
}

std::vector<VertexSet> k_subsets(int n, int k) {
  std::vector<VertexSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(VertexSet::of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

long snd(long i) {
  if (i < 1) throw InvalidParameters("snd requires a positive integer");
  long j = 1;
  while (i % j == 0) ++j;
  return j;
}

}  // namespace majority
