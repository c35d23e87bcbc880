#include "majority/exact.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "majority/canonical.hpp"
#include "majority/errors.hpp"

namespace majority {

namespace {

std::vector<CanonicalForm> next_level(const std::vector<CanonicalForm>& level, int n, int k,
                                      const std::vector<VertexSet>& subsets, int threads) {
  std::vector<std::vector<CanonicalForm>> found(level.size());
  parallel_for(level.size(), threads, [&](std::size_t r) {
    const Hypergraph rep = from_canonical_form(n, k, level[r]);
    for (VertexSet e : subsets) {
      if (rep.contains_edge(e)) continue;
      found[r].push_back(canonical_form(rep.with_edge(e)));
    }
  });
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<CanonicalForm> next;
  for (auto& forms : found)
    for (auto& f : forms)
      if (seen.insert(f).second) next.push_back(std::move(f));
  std::sort(next.begin(), next.end());
  return next;
}

}  // namespace

ExactResult exact_n(ModelId model, int k, int n, const ExactOptions& options) {
  if (k < 2 || k > n) throw InvalidParameters("exact_n needs 2 <= k <= n");
  const int cap = model == ModelId::BM ? options.verify.max_n_bm : options.verify.max_n_deterministic;
  if (n > cap) throw ResourceLimit("n exceeds the coloring cap for exact search");

  BudgetClock clock(options.budget);
  ExactResult result{model, k, n, std::nullopt, std::nullopt, {}, 0};
  const auto subsets = k_subsets(n, k);
  const int start = options.start_q.value_or(0);
  std::vector<CanonicalForm> level{CanonicalForm{}};

  for (int q = 0; q <= static_cast<int>(subsets.size()); ++q) {
    if (q > 0) level = next_level(level, n, k, subsets, clock.threads());
    if (level.empty()) break;
    if (q < start) continue;

    result.candidates += static_cast<long>(level.size());
    if (clock.expired(result.candidates))
      throw ResourceLimit("exact search for N(" + std::string(to_string(model)) + ", " +
                              std::to_string(k) + ", " + std::to_string(n) +
                              ") exceeded its budget at q = " + std::to_string(q),
                          q, options.upper_hint);

    std::vector<char> ok(level.size(), 0);
    parallel_for(level.size(), clock.threads(), [&](std::size_t i) {
      ok[i] = is_sufficient(model, from_canonical_form(n, k, level[i]), options.verify) ? 1 : 0;
    });
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (!ok[i]) continue;
      Hypergraph h = from_canonical_form(n, k, level[i]);
      if (!result.value) {
        result.value = q;
        result.optimal_queries = h;
        if (!options.collect_all_optimal) break;
      }
      result.all_optimal.push_back(std::move(h));
    }
    if (result.value) return result;
  }
  return result;
}

}  // namespace majority
