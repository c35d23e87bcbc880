#include "majority/strategies.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "majority/errors.hpp"
#include "majority/min_search.hpp"
#include "majority/property.hpp"
#include "majority/verifier.hpp"

namespace majority {

namespace {

std::string params(int n, int k) {
  return "(n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")";
}

// Every k-set containing some edge of `family`, in order of first discovery.
Hypergraph supersets(const Hypergraph& family, int n, int k) {
  std::vector<VertexSet> queries;
  for (const VertexSet& e : family.edges())
    for (int j = 0; j < n; ++j) {
      if (e.contains(j)) continue;
      VertexSet q = e;
      q.insert(j);
      if (std::find(queries.begin(), queries.end(), q) == queries.end()) queries.push_back(q);
    }
  return Hypergraph(n, std::move(queries), k);
}

Hypergraph checked_family(const Hypergraph& f, int n, int edge_size) {
  if (f.n() > n) throw InvalidParameters("family has more vertices than there are balls");
  for (const VertexSet& e : f.edges())
    if (e.size() != edge_size)
      throw InvalidParameters("family must be " + std::to_string(edge_size) + "-uniform");
  return Hypergraph(n, f.edges(), edge_size);
}

std::map<std::uint64_t, int> query_index(const Hypergraph& queries) {
  std::map<std::uint64_t, int> index;
  for (int t = 0; t < queries.size(); ++t) index.emplace(queries[t].bits(), t);
  return index;
}

// ------------------------------------------------------------------ decoding

Output decode_om(const Strategy& s, const AnswerVector& a) {
  const int n = s.n;
  std::vector<int> side(n, -1);  // 0 = same color as the chain's first ball
  bool changed = true;
  if (s.queries.size() > 0) side[s.queries[0].min()] = 0;
  while (changed) {
    changed = false;
    for (int t = 0; t < s.queries.size(); ++t) {
      const auto& om = std::get<OmAnswer>(a.answers[t]);
      int anchor = -1;
      for (int v : s.queries[t])
        if (side[v] >= 0) anchor = v;
      if (anchor < 0) continue;
      const bool anchor_first = om.first.contains(anchor);
      for (int v : s.queries[t]) {
        const int value = (om.first.contains(v) == anchor_first) ? side[anchor] : 1 - side[anchor];
        if (side[v] < 0) {
          side[v] = value;
          changed = true;
        }
      }
    }
  }
  VertexSet zero, one;
  for (int v = 0; v < n; ++v) {
    if (side[v] == 0) zero.insert(v);
    if (side[v] == 1) one.insert(v);
  }
  if (zero.size() > one.size()) return Output::ball(zero.min());
  if (one.size() > zero.size()) return Output::ball(one.min());
  if (s.aux.spare) return Output::ball(*s.aux.spare);
  return Output::no_majority();
}

// Shared by the two CM constructions: `base` is a (k-1)-set known to be
// unbalanced (or, for even k, any core); answers[j] is the answer to
// base + {j} for every ball j outside base.
Output decode_around(const VertexSet& base, const std::map<int, int>& answer_of_ball) {
  int lo = answer_of_ball.begin()->second, hi = lo;
  for (const auto& [j, v] : answer_of_ball) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (lo == hi) return Output::ball(answer_of_ball.begin()->first);
  // balls answering `lo` carry the color that is in excess inside base
  VertexSet excess, deficit;
  for (const auto& [j, v] : answer_of_ball) (v == lo ? excess : deficit).insert(j);
  const int excess_total = (base.size() - lo) + excess.size();
  const int deficit_total = lo + deficit.size();
  if (excess_total > deficit_total) return Output::ball(excess.min());
  if (deficit_total > excess_total) return Output::ball(deficit.min());
  return Output::no_majority();
}

std::map<int, int> counts_around(const Strategy& s, const AnswerVector& a, VertexSet base,
                                 const std::map<std::uint64_t, int>& index) {
  std::map<int, int> out;
  for (int j = 0; j < s.n; ++j) {
    if (base.contains(j)) continue;
    VertexSet q = base;
    q.insert(j);
    out[j] = std::get<CmAnswer>(a.answers[index.at(q.bits())]).count;
  }
  return out;
}

Output decode_cm_even(const Strategy& s, const AnswerVector& a) {
  const auto index = query_index(s.queries);
  return decode_around(*s.aux.core, counts_around(s, a, *s.aux.core, index));
}

Output decode_cm_odd(const Strategy& s, const AnswerVector& a) {
  const auto index = query_index(s.queries);
  const int balanced = (s.k - 1) / 2;
  for (const VertexSet& g : s.aux.family->edges()) {
    const auto counts = counts_around(s, a, g, index);
    const bool unbalanced = std::any_of(counts.begin(), counts.end(),
                                        [&](const auto& jv) { return jv.second != balanced; });
    if (unbalanced) return decode_around(g, counts);
  }
  throw NoConsistentColoring("every query answered as balanced");
}

Output decode_gm(const Strategy& s, const AnswerVector& a) {
  const auto index = query_index(s.queries);
  auto said_yes = [&](int t) {
    const Answer& ans = a.answers[t];
    if (const auto* gm = std::get_if<GmAnswer>(&ans)) return gm->yes;
    return std::get<BmAnswer>(ans).yes;
  };
  for (const VertexSet& g : s.aux.family->edges()) {
    VertexSet same = g, other;
    bool found_no = false;
    for (int j = 0; j < s.n; ++j) {
      if (g.contains(j)) continue;
      VertexSet q = g;
      q.insert(j);
      if (said_yes(index.at(q.bits()))) {
        other.insert(j);
      } else {
        same.insert(j);
        found_no = true;
      }
    }
    if (!found_no) continue;
    if (same.size() > other.size()) return Output::ball(same.min());
    if (other.size() > same.size()) return Output::ball(other.min());
    return Output::no_majority();
  }
  // some edge of the family is monochromatic, and every ball outside it has
  // the other color; ball n-1 lies outside every edge
  return Output::ball(s.n - 1);
}

}  // namespace

Strategy build_om(int n, int k) {
  if (k < 2 || k > n || n > kMaxVertices)
    throw InvalidParameters("build_om needs 2 <= k <= n <= 64 " + params(n, k));
  Strategy s{ModelId::OM, n, k, kOmChain, Hypergraph(n, {}, k), {}};
  const int chained = n % 2 == 0 ? n : n - 1;
  std::vector<VertexSet> edges;
  if (chained < k) {
    // n = k odd: the only k-set is all balls
    edges.push_back(VertexSet::all(n));
  } else {
    const int count = (chained - 1 + k - 2) / (k - 1);
    for (int t = 0; t < count; ++t) {
      const int start = std::min(t * (k - 1), chained - k);
      edges.push_back(VertexSet::range(start, start + k));
    }
    if (chained < n) s.aux.spare = n - 1;
  }
  s.queries = Hypergraph(n, std::move(edges), k);
  return s;
}

Strategy build_cm_even(int n, int k) {
  if (k < 2 || k % 2 != 0 || n < 2 * k - 1 || n > kMaxVertices)
    throw InvalidParameters("build_cm_even needs even k >= 2 and n >= 2k-1 " + params(n, k));
  const VertexSet core = VertexSet::range(0, k - 1);
  std::vector<VertexSet> edges;
  for (int j = k - 1; j < n; ++j) edges.push_back(core | VertexSet{j});
  Strategy s{ModelId::CM, n, k, kCmEvenCore, Hypergraph(n, std::move(edges), k), {}};
  s.aux.core = core;
  return s;
}

Strategy build_cm_odd(int n, int k, std::optional<Hypergraph> family, int family_cap) {
  if (k < 3 || k % 2 == 0 || n < 2 * k - 1 || n > kMaxVertices)
    throw InvalidParameters("build_cm_odd needs odd k >= 3 and n >= 2k-1 " + params(n, k));
  Hypergraph f;
  if (family) {
    f = checked_family(*family, n, k - 1);
    if (has_property_c(f).colorable)
      throw InvalidParameters("family for build_cm_odd must lack Property C");
  } else {
    const auto found = min_non_property_c(k - 1, n, family_cap);
    if (!found.value)
      throw InvalidParameters("no " + std::to_string(k - 1) +
                              "-uniform family without Property C within the edge cap");
    f = *found.witness;
  }

  Strategy s{ModelId::CM, n, k, kCmOddFamily, supersets(f, n, k), {}};
  if (has_property_c(s.queries).colorable) {
    // every query could then be answered as balanced; add the
    // lexicographically least (k-1)-set that rules this out
    bool added = false;
    for (VertexSet e : k_subsets(n, k - 1)) {
      if (f.contains_edge(e)) continue;
      Hypergraph grown = f.with_edge(e);
      Hypergraph queries = supersets(grown, n, k);
      if (has_property_c(queries).colorable) continue;
      f = std::move(grown);
      s.queries = std::move(queries);
      s.aux.extra_edge = e;
      added = true;
      break;
    }
    if (!added)
      throw InvalidParameters("no extra edge makes the query set unbalanceable " + params(n, k));
  }
  s.aux.family = f;
  return s;
}

Strategy build_gm(int n, int k, std::optional<Hypergraph> family, ModelId model,
                  int family_cap) {
  if (model != ModelId::GM && model != ModelId::BM)
    throw InvalidParameters("build_gm serves GM and BM only");
  if (k < 2 || n < 2 * k - 1 || n > kMaxVertices)
    throw InvalidParameters("build_gm needs k >= 2 and n >= 2k-1 " + params(n, k));
  Hypergraph f;
  if (family) {
    f = checked_family(*family, n, k - 1);
    if (f.support().contains(n - 1))
      throw InvalidParameters("family for build_gm must avoid ball n-1");
    if (has_property_b(f).colorable)
      throw InvalidParameters("family for build_gm must lack Property B");
  } else {
    const auto found = min_non_property_b(k - 1, n - 1, family_cap);
    if (!found.value)
      throw InvalidParameters("no " + std::to_string(k - 1) +
                              "-uniform family without Property B within the edge cap");
    f = found.witness->with_vertex_count(n);
  }
  Strategy s{model, n, k, kGmNonB, supersets(f, n, k), {}};
  s.aux.family = f;
  return s;
}

Output decode(const Strategy& strategy, const AnswerVector& answers) {
  if (static_cast<int>(answers.answers.size()) != strategy.queries.size())
    throw InvalidParameters("answer vector length does not match the query count");
  if (answers.model != strategy.model)
    throw InvalidParameters("answers are for a different model than the strategy");
  for (const Answer& a : answers.answers)
    if (model_of(a) != strategy.model) throw InvalidParameters("answer of the wrong model");
  if (!find_consistent_coloring(strategy.queries, answers))
    throw NoConsistentColoring("no coloring produces these answers");

  if (strategy.provenance == kOmChain) return decode_om(strategy, answers);
  if (strategy.provenance == kCmEvenCore) return decode_cm_even(strategy, answers);
  if (strategy.provenance == kCmOddFamily) return decode_cm_odd(strategy, answers);
  if (strategy.provenance == kGmNonB) return decode_gm(strategy, answers);
  throw InvalidParameters("unknown strategy provenance '" + strategy.provenance + "'");
}

}  // namespace majority
