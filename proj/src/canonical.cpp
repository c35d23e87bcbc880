#include "majority/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "majority/errors.hpp"

namespace majority {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.n()) {
    incident_.resize(n_);
    for (int i = 0; i < h.size(); ++i)
      for (int v : h[i]) incident_[v].push_back(i);
    sorted_edges_ = h.edges();
    std::sort(sorted_edges_.begin(), sorted_edges_.end());
  }

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells.front().begin(), cells.front().end(), 0);
    }
    search(std::move(cells));
    return {best_form_, best_perm_};
  }

 private:
  // Splits cells by a multiset hash of the cells seen through incident edges
  // until stable. Ordering of the new cells depends only on hash values, so
  // the procedure commutes with relabeling.
  void refine(Cells& cells) const {
    std::vector<int> cell_of(n_);
    std::vector<std::uint64_t> edge_sig(h_.size());
    std::vector<std::uint64_t> vertex_sig(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      for (int i = 0; i < h_.size(); ++i) {
        std::uint64_t s = 0;
        for (int v : h_[i]) s += mix(static_cast<std::uint64_t>(cell_of[v]) + 1);
        edge_sig[i] = mix(s ^ (static_cast<std::uint64_t>(h_[i].size()) << 56));
      }
      for (int v = 0; v < n_; ++v) {
        std::uint64_t s = 0;
        for (int e : incident_[v]) s += mix(edge_sig[e]);
        vertex_sig[v] = s;
      }
      Cells next;
      next.reserve(n_);
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::stable_sort(cell.begin(), cell.end(),
                         [&](int a, int b) { return vertex_sig[a] < vertex_sig[b]; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || vertex_sig[cell[i]] != vertex_sig[cell[start]]) {
            next.emplace_back(cell.begin() + start, cell.begin() + i);
            start = i;
          }
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  std::size_t edge_count(VertexSet e) const {
    auto [lo, hi] = std::equal_range(sorted_edges_.begin(), sorted_edges_.end(), e);
    return static_cast<std::size_t>(hi - lo);
  }

  // Swapping u and v maps the edge multiset onto itself.
  bool twins(int u, int v) const {
    for (const VertexSet& e : h_.edges()) {
      const bool has_u = e.contains(u), has_v = e.contains(v);
      if (has_u == has_v) continue;
      VertexSet swapped = e;
      swapped.erase(has_u ? u : v);
      swapped.insert(has_u ? v : u);
      if (edge_count(swapped) != edge_count(e)) return false;
    }
    return true;
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm(n_);
    for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = static_cast<int>(c);
    CanonicalForm form;
    form.reserve(h_.size());
    for (const VertexSet& e : h_.edges()) {
      std::uint64_t w = 0;
      for (int v : e) w |= std::uint64_t{1} << perm[v];
      form.push_back(w);
    }
    std::sort(form.begin(), form.end());
    if (!have_best_ || form < best_form_) {
      have_best_ = true;
      best_form_ = std::move(form);
      best_perm_ = std::move(perm);
    }
  }

  void search(Cells cells) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> reps;
    for (int v : cells[t]) {
      const bool covered = std::any_of(reps.begin(), reps.end(),
                                       [&](int r) { return twins(r, v); });
      if (!covered) reps.push_back(v);
    }
    for (int v : reps) {
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + t);
      child.push_back({v});
      std::vector<int> rest;
      for (int u : cells[t])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + t + 1, cells.end());
      search(std::move(child));
    }
  }

  const Hypergraph& h_;
  int n_;
  std::vector<std::vector<int>> incident_;
  std::vector<VertexSet> sorted_edges_;
  bool have_best_ = false;
  CanonicalForm best_form_;
  std::vector<int> best_perm_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Hypergraph& h) { return Canonizer(h).run(); }

CanonicalForm canonical_form(const Hypergraph& h) { return canonical_labeling(h).form; }

CanonicalForm brute_force_canonical_form(const Hypergraph& h) {
  if (h.n() > 10) throw InvalidParameters("brute-force canonical form is limited to n <= 10");
  std::vector<int> perm(h.n());
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best;
  bool first = true;
  do {
    CanonicalForm form;
    for (const VertexSet& e : h.edges()) {
      std::uint64_t w = 0;
      for (int v : e) w |= std::uint64_t{1} << perm[v];
      form.push_back(w);
    }
    std::sort(form.begin(), form.end());
    if (first || form < best) best = std::move(form);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

Hypergraph from_canonical_form(int n, int uniform_k, const CanonicalForm& form) {
  std::vector<VertexSet> edges;
  edges.reserve(form.size());
  for (std::uint64_t w : form) edges.emplace_back(w);
  const bool multi = std::adjacent_find(form.begin(), form.end()) != form.end();
  return Hypergraph(n, std::move(edges), uniform_k, multi);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::uint64_t h = f.size();
  for (std::uint64_t w : f) h = mix(h ^ w);
  return static_cast<std::size_t>(h);
}

}  // namespace majority
