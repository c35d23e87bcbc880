#include "majority/min_search.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_set>

#include "majority/canonical.hpp"
#include "majority/errors.hpp"
#include "majority/property.hpp"

namespace majority {

namespace {

enum class Target { B, C };

bool lacks(Target target, const Hypergraph& h) {
  return target == Target::B ? !has_property_b(h).colorable : !has_property_c(h).colorable;
}

int count_degree_one(const Hypergraph& h) {
  const auto deg = h.degrees();
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

// Level-by-level generation of connected k-uniform hypergraphs on n vertices,
// one representative per isomorphism class. A connected hypergraph always has
// an edge whose removal leaves it connected, so extending connected
// representatives by one intersecting edge reaches every class.
class ConnectedLevels {
 public:
  ConnectedLevels(int n, int k, const BudgetClock& clock, long& candidates)
      : n_(n), k_(k), subsets_(k_subsets(n, k)), clock_(clock), candidates_(candidates) {
    level_.push_back({});
  }

  // keep(h, level) filters the new level before deduplication.
  template <class Keep>
  void advance(int next_level, Keep keep) {
    std::vector<std::vector<CanonicalForm>> found(level_.size());
    parallel_for(level_.size(), clock_.threads(), [&](std::size_t r) {
      const Hypergraph rep = from_canonical_form(n_, k_, level_[r]);
      const VertexSet support = rep.support();
      for (VertexSet e : subsets_) {
        if (rep.size() > 0 && !e.intersects(support)) continue;
        if (rep.contains_edge(e)) continue;
        Hypergraph grown = rep.with_edge(e);
        if (!keep(grown, next_level)) continue;
        found[r].push_back(canonical_form(grown));
      }
    });
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<CanonicalForm> next;
    for (auto& forms : found)
      for (auto& f : forms)
        if (seen.insert(f).second) next.push_back(std::move(f));
    std::sort(next.begin(), next.end());
    candidates_ += static_cast<long>(next.size());
    level_ = std::move(next);
  }

  const std::vector<CanonicalForm>& level() const { return level_; }
  Hypergraph at(std::size_t i) const { return from_canonical_form(n_, k_, level_[i]); }

 private:
  int n_, k_;
  std::vector<VertexSet> subsets_;
  const BudgetClock& clock_;
  long& candidates_;
  std::vector<CanonicalForm> level_;
};

// Index of the first representative lacking the property, in level order.
std::optional<std::size_t> first_lacking(const ConnectedLevels& levels, Target target,
                                         int threads) {
  const auto& level = levels.level();
  std::vector<char> bad(level.size(), 0);
  parallel_for(level.size(), threads,
               [&](std::size_t i) { bad[i] = lacks(target, levels.at(i)) ? 1 : 0; });
  for (std::size_t i = 0; i < bad.size(); ++i)
    if (bad[i]) return i;
  return std::nullopt;
}

void check_params(int k, int n, int q_cap) {
  if (k < 1) throw InvalidParameters("edge size k must be >= 1");
  if (n < k) throw InvalidParameters("need n >= k (n = " + std::to_string(n) +
                                     ", k = " + std::to_string(k) + ")");
  if (n > kMaxVertices) throw InvalidParameters("n exceeds 64");
  if (q_cap < 1) throw InvalidParameters("edge cap must be >= 1");
}

void budget_check(const BudgetClock& clock, long candidates, int completed_q) {
  if (clock.expired(candidates))
    throw ResourceLimit("minimal hypergraph search exceeded its budget after " +
                            std::to_string(candidates) + " candidates",
                        completed_q + 1, std::nullopt);
}

// Vertex count that suffices for a Property B search capped at q edges:
// a minimal hypergraph without Property B has no vertex of degree one when
// k >= 2 (such a vertex could always be recolored), so q edges cover at most
// floor(k*q/2) vertices.
int b_vertex_bound(int k, int n, int q) {
  if (k == 1) return n;
  return std::min(n, std::max(k, k * q / 2));
}

MinSearchResult search_b(int k, int n, int q_cap, const SearchBudget& budget) {
  BudgetClock clock(budget);
  MinSearchResult result{k, n, q_cap, std::nullopt, std::nullopt, 0};
  for (int q = 1; q <= q_cap; ++q) {
    const int nq = b_vertex_bound(k, n, q);
    ConnectedLevels levels(nq, k, clock, result.candidates);
    for (int j = 1; j <= q; ++j) {
      levels.advance(j, [&](const Hypergraph& h, int level) {
        // each remaining edge can give a second incidence to at most k
        // degree-one vertices
        return k == 1 || count_degree_one(h) <= k * (q - level);
      });
      budget_check(clock, result.candidates, q - 1);
      if (levels.level().empty()) break;
    }
    if (auto hit = first_lacking(levels, Target::B, clock.threads())) {
      result.value = q;
      result.witness = levels.at(*hit).with_vertex_count(n).compacted();
      return result;
    }
  }
  return result;
}

MinSearchResult search_c(int k, int n, int q_cap, const SearchBudget& budget) {
  BudgetClock clock(budget);
  MinSearchResult result{k, n, q_cap, std::nullopt, std::nullopt, 0};
  ConnectedLevels levels(n, k, clock, result.candidates);
  for (int q = 1; q <= q_cap; ++q) {
    levels.advance(q, [](const Hypergraph&, int) { return true; });
    budget_check(clock, result.candidates, q - 1);
    if (levels.level().empty()) break;
    if (auto hit = first_lacking(levels, Target::C, clock.threads())) {
      result.value = q;
      result.witness = levels.at(*hit).compacted();
      return result;
    }
  }
  return result;
}

using CacheKey = std::tuple<int, int, int, int>;  // target, k, normalized n, cap

std::mutex cache_mutex;
std::map<CacheKey, MinSearchResult>& cache() {
  static std::map<CacheKey, MinSearchResult> c;
  return c;
}

template <class Search>
MinSearchResult cached(Target target, int k, int n, int n_key, int q_cap,
                       const SearchBudget& budget, Search search) {
  const CacheKey key{static_cast<int>(target), k, n_key, q_cap};
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache().find(key); it != cache().end()) {
      MinSearchResult r = it->second;
      r.n = n;
      if (r.witness) r.witness = r.witness->with_vertex_count(n);
      return r;
    }
  }
  MinSearchResult r = search(k, n_key, q_cap, budget);
  {
    std::lock_guard lock(cache_mutex);
    cache().emplace(key, r);
  }
  r.n = n;
  if (r.witness) r.witness = r.witness->with_vertex_count(n);
  return r;
}

}  // namespace

MinSearchResult min_non_property_b(int k, int n, int q_cap, const SearchBudget& budget) {
  check_params(k, n, q_cap);
  return cached(Target::B, k, n, b_vertex_bound(k, n, q_cap), q_cap, budget, search_b);
}

MinSearchResult min_non_property_c(int k, int n, int q_cap, const SearchBudget& budget) {
  check_params(k, n, q_cap);
  if (k < 2) throw InvalidParameters("Property C needs k >= 2");
  return cached(Target::C, k, n, n, q_cap, budget, search_c);
}

}  // namespace majority
