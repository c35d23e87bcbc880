#include "majority/analysis.hpp"

#include <algorithm>
#include <string>

#include "majority/errors.hpp"
#include "majority/min_search.hpp"
#include "majority/strategies.hpp"

namespace majority {

std::int64_t ceil_of(const Rational& r) {
  const auto num = r.numerator(), den = r.denominator();  // den > 0
  return num >= 0 ? (num + den - 1) / den : -((-num) / den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

PropertyValues searched_property_values(int q_cap) {
  PropertyValues v;
  v.d = [q_cap](int k, int n) -> std::optional<long> {
    if (k < 2 || n < k) return std::nullopt;
    return min_non_property_c(k, n, q_cap).value;
  };
  v.m = [q_cap](int k, int n) -> std::optional<long> {
    if (k < 1 || n < k) return std::nullopt;
    return min_non_property_b(k, n, q_cap).value;
  };
  v.m_limit = [q_cap](int k) -> std::optional<long> {
    if (k < 1) return std::nullopt;
    const int n = std::min(kMaxVertices, std::max(k, k * q_cap / 2));
    return min_non_property_b(k, n, q_cap).value;
  };
  return v;
}

FormulaBound lb_cm(int k, int n, const PropertyValues& values) {
  if (k < 2 || n < k) throw InvalidParameters("lb_cm needs 2 <= k <= n");
  FormulaBound b;
  if (k % 2 == 0 && n % 2 == 0) {
    b.name = "cm-degree-count 2n/(k+1)";
    b.value = Rational(2 * n, k + 1);
    // the degree-one argument needs (k-2)/2 red balls among the other (n-4)/2
    b.conditions_met = n >= k + 2;
    return b;
  }
  if (k % 2 == 0) {
    b.name = "cm-degree-count (2n-1)/(k+1)";
    b.value = Rational(2 * n - 1, k + 1);
    b.requires_large_n = true;
    return b;
  }
  const auto d = values.d ? values.d(k - 1, n - 1) : std::nullopt;
  b.requires_large_n = true;
  if (n % 2 == 0) {
    b.name = "cm-link-balance ceil(n/k d(k-1,n-1))";
    if (d) b.value = Rational(ceil_of(Rational(n, k) * static_cast<std::int64_t>(*d)));
  } else {
    b.name = "cm-link-balance ceil((n-1)/(2k) d(k-1,n-1))";
    if (d) b.value = Rational(ceil_of(Rational(n - 1, 2 * k) * static_cast<std::int64_t>(*d)));
  }
  if (!d) b.note = "d(" + std::to_string(k - 1) + "," + std::to_string(n - 1) + ") unavailable";
  return b;
}

Rational lb_cm_improved(int k, int n, int i) {
  if (k % 2 != 0 || k < 4) throw InvalidParameters("lb_cm_improved needs even k >= 4");
  if (!(2 * i > k && i < k)) throw InvalidParameters("lb_cm_improved needs k/2 < i < k");
  const std::int64_t K = k, N = n, I = i;
  return Rational(N * (5 * I * K - K + I + I * I) - 2 * (K - I), (2 * K + 3 + I) * I * K);
}

BestI optimize_i(int k, int n) {
  BestI best;
  for (int i = k / 2 + 1; i < k; ++i) {
    const Rational v = lb_cm_improved(k, n, i);
    if (best.i == 0 || v > best.value) best = {i, v};
  }
  if (best.i == 0) throw InvalidParameters("no admissible i");
  return best;
}

FormulaBound lb_gm_bm(ModelId model, int k, int n, const PropertyValues& values) {
  if (model != ModelId::GM && model != ModelId::BM)
    throw InvalidParameters("lb_gm_bm applies to GM and BM");
  if (k < 3 || n < k) throw InvalidParameters("lb_gm_bm needs 3 <= k <= n");
  FormulaBound b;
  b.requires_large_n = true;
  const Rational f = n % 2 == 0 ? Rational(n, k) : Rational(n - 1, 2 * k);
  const int edge = (model == ModelId::BM && n % 2 == 1) ? k - 2 : k - 1;
  b.name = "link-coloring f(n,k) m(" + std::to_string(edge) + ")";
  const auto m = values.m_limit ? values.m_limit(edge) : std::nullopt;
  if (m)
    b.value = f * static_cast<std::int64_t>(*m);
  else
    b.note = "m(" + std::to_string(edge) + ") unavailable";
  return b;
}

bool DegreeReport::hard_checks_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) {
    return !c.applicable || c.requires_large_n || c.holds.value_or(false);
  });
}

namespace {

int degree_one_in(VertexSet q, const std::vector<int>& deg) {
  int count = 0;
  for (int v : q)
    if (deg[v] == 1) ++count;
  return count;
}

// Balls whose degree is below `bound` (as a rational threshold).
int count_below(const std::vector<int>& deg, const Rational& bound) {
  return static_cast<int>(std::count_if(deg.begin(), deg.end(), [&](int d) {
    return Rational(d) < bound;
  }));
}

LemmaCheck degree_floor(const std::string& name, const std::vector<int>& deg,
                        std::optional<long> value, bool all_but_one) {
  LemmaCheck c{name, true, true, std::nullopt, {}};
  if (!value) {
    c.detail = "property value unavailable";
    return c;
  }
  const Rational bound = all_but_one ? Rational(*value, 2) : Rational(*value);
  const int below = count_below(deg, bound);
  c.holds = all_but_one ? below <= 1 : below == 0;
  c.detail = std::to_string(below) + " ball(s) below " + to_string(bound);
  return c;
}

}  // namespace

DegreeReport check_degree_lemmas(ModelId model, const Hypergraph& queries,
                                 const PropertyValues& values) {
  DegreeReport r;
  const int n = queries.n();
  int k = queries.uniform_k();
  if (k == 0)
    for (const VertexSet& q : queries.edges()) k = std::max(k, q.size());
  r.degrees = queries.degrees();
  r.components = components(queries);
  const auto& deg = r.degrees;
  const bool n_even = n % 2 == 0;

  switch (model) {
    case ModelId::OM: {
      const int parts = static_cast<int>(r.components.size());
      LemmaCheck c{n_even ? "connected" : "at most two components", true, false, {}, {}};
      c.holds = n_even ? parts == 1 : parts <= 2;
      c.detail = std::to_string(parts) + " component(s)";
      r.checks.push_back(c);
      break;
    }
    case ModelId::CM: {
      if (k % 2 == 0 && n_even) {
        LemmaCheck zero{"no ball of degree 0", true, false, {}, {}};
        const int zeros = static_cast<int>(std::count(deg.begin(), deg.end(), 0));
        zero.holds = zeros == 0;
        zero.detail = std::to_string(zeros) + " ball(s) of degree 0";
        r.checks.push_back(zero);

        LemmaCheck ones{"at most one degree-one ball per query", n >= k + 2, false, {}, {}};
        int worst = 0;
        for (const VertexSet& q : queries.edges()) worst = std::max(worst, degree_one_in(q, deg));
        ones.holds = worst <= 1;
        ones.detail = "max " + std::to_string(worst) + " degree-one ball(s) in a query";
        r.checks.push_back(ones);
      } else if (k % 2 == 0) {
        LemmaCheck pairs{"at most one query with two degree-one balls", n >= k + 5, false, {}, {}};
        int heavy = 0;
        for (const VertexSet& q : queries.edges())
          if (degree_one_in(q, deg) >= 2) ++heavy;
        pairs.holds = heavy <= 1;
        pairs.detail = std::to_string(heavy) + " such queries";
        r.checks.push_back(pairs);
      } else {
        const auto d = values.d && n >= 2 ? values.d(k - 1, n - 1) : std::nullopt;
        r.checks.push_back(n_even ? degree_floor("every degree >= d(k-1,n-1)", deg, d, false)
                                  : degree_floor("all but one degree >= d(k-1,n-1)/2", deg, d, true));
      }
      break;
    }
    case ModelId::GM:
    case ModelId::BM: {
      if (k < 3) break;
      const int edge = (model == ModelId::BM && !n_even) ? k - 2 : k - 1;
      const auto m = values.m_limit ? values.m_limit(edge) : std::nullopt;
      const std::string mk = "m(" + std::to_string(edge) + ")";
      r.checks.push_back(n_even ? degree_floor("every degree >= " + mk, deg, m, false)
                                : degree_floor("all but one degree >= " + mk + "/2", deg, m, true));
      break;
    }
  }
  return r;
}

SparseStructureReport check_sparse_structure(const Hypergraph& queries, int i) {
  const int k = queries.uniform_k();
  const int n = queries.n();
  if (k < 4 || k % 2 != 0) throw InvalidParameters("sparse structure check needs even uniform k >= 4");
  if (!(2 * i > k && i < k)) throw InvalidParameters("sparse structure check needs k/2 < i < k");

  SparseStructureReport r;
  r.i = i;
  const auto deg = queries.degrees();
  VertexSet low;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 2) low.insert(v);
  std::vector<VertexSet> trimmed;
  for (int t = 0; t < queries.size(); ++t) {
    if ((queries[t] & low).size() < i + 1) continue;
    r.selected.push_back(t);
    trimmed.push_back(queries[t] & low);
  }
  r.trimmed = Hypergraph(n, std::move(trimmed), 0, true);
  r.linear = is_linear(r.trimmed);
  r.cycles = linear_cycles(r.trimmed, r.trimmed.size());
  r.short_cycles = static_cast<int>(std::count_if(r.cycles.begin(), r.cycles.end(),
                                                  [&](const LinearCycle& c) {
                                                    return 2 * c.covered <= n + 6;
                                                  }));
  r.total_size = r.trimmed.total_size();
  r.size_cap = Rational(2 * k) + Rational(static_cast<std::int64_t>(i + 1) * n, i);
  r.within_cap = Rational(r.total_size) <= r.size_cap;
  return r;
}

std::vector<std::string> BoundReport::violations() const {
  std::vector<std::string> out;
  if (!exact_attempted) return out;
  for (const BoundRow& row : rows) {
    const FormulaBound& b = row.bound;
    if (!b.asserted()) continue;
    if (row.kind == BoundRow::Kind::Lower) {
      if (exact && *b.value > Rational(*exact))
        out.push_back(b.name + " = " + to_string(*b.value) + " exceeds exact " +
                      std::to_string(*exact));
    } else if (exact && *b.value < Rational(*exact)) {
      out.push_back(b.name + " = " + to_string(*b.value) + " is below exact " +
                    std::to_string(*exact));
    } else if (!exact && exact_note.empty()) {
      out.push_back(b.name + " claims a sufficient set but none exists");
    }
  }
  return out;
}

namespace {

FormulaBound om_formula(int k, int n) {
  FormulaBound b;
  b.name = n % 2 == 0 ? "connectivity ceil((n-1)/(k-1))" : "connectivity ceil((n-2)/(k-1))";
  b.value = Rational(ceil_of(Rational(n % 2 == 0 ? n - 1 : n - 2, k - 1)));
  return b;
}

}  // namespace

BoundReport bounds_report(ModelId model, int k, int n, const ReportOptions& options) {
  if (k < 2 || k > n) throw InvalidParameters("bounds_report needs 2 <= k <= n");
  BoundReport r{model, k, n, {}, false, std::nullopt, {}};
  const PropertyValues values = searched_property_values(options.property_cap);
  using Kind = BoundRow::Kind;
  const bool room = n >= 2 * k - 1;

  // refinement: every model needs at least as many queries as OM
  FormulaBound om_lower = om_formula(k, n);
  if (model != ModelId::OM) om_lower.name = "refines OM: " + om_lower.name;
  r.rows.push_back({Kind::Lower, om_lower});

  switch (model) {
    case ModelId::OM: {
      FormulaBound chain = om_formula(k, n);
      chain.name = "chain construction";
      chain.value = Rational(build_om(n, k).queries.size());
      r.rows.push_back({Kind::Upper, chain});
      break;
    }
    case ModelId::CM: {
      r.rows.push_back({Kind::Lower, lb_cm(k, n, values)});
      if (k % 2 == 0 && k >= 4 && n % 2 == 0) {
        const BestI best = optimize_i(k, n);
        FormulaBound improved{"sparse-structure bound, i = " + std::to_string(best.i), best.value,
                              true, true, "claimed for large even k and n"};
        r.rows.push_back({Kind::Lower, improved});
      }
      if (k % 2 == 0) {
        FormulaBound up{"core construction n-k+1", Rational(n - k + 1), room, false, {}};
        r.rows.push_back({Kind::Upper, up});
      } else {
        FormulaBound up{"(n-k+1)(1+d(k-1,n))", std::nullopt, room, false, {}};
        if (auto d = values.d(k - 1, n))
          up.value = Rational(static_cast<std::int64_t>(n - k + 1) * (1 + *d));
        else
          up.note = "d(k-1,n) unavailable";
        r.rows.push_back({Kind::Upper, up});
        if (room) {
          try {
            FormulaBound built{"unbalanced-family construction",
                               Rational(build_cm_odd(n, k).queries.size()), true, false, {}};
            r.rows.push_back({Kind::Upper, built});
          } catch (const InvalidParameters&) {
          }
        }
      }
      break;
    }
    case ModelId::GM:
    case ModelId::BM: {
      if (k >= 3) r.rows.push_back({Kind::Lower, lb_gm_bm(model, k, n, values)});
      FormulaBound up{"(n-k+1) m(k-1,n-1)", std::nullopt, room, false, {}};
      if (n - 1 >= k - 1) {
        if (auto m = values.m(k - 1, n - 1))
          up.value = Rational(static_cast<std::int64_t>(n - k + 1) * *m);
        else
          up.note = "m(k-1,n-1) unavailable";
      }
      r.rows.push_back({Kind::Upper, up});
      if (room) {
        try {
          FormulaBound built{"non-B family construction",
                             Rational(build_gm(n, k, std::nullopt, model).queries.size()), true,
                             false, {}};
          r.rows.push_back({Kind::Upper, built});
        } catch (const InvalidParameters&) {
        }
      }
      break;
    }
  }

  if (options.run_exact) {
    r.exact_attempted = true;
    try {
      const ExactResult ex = exact_n(model, k, n, options.exact);
      r.exact = ex.value;
    } catch (const ResourceLimit& e) {
      r.exact_note = e.what();
    }
  }
  return r;
}

}  // namespace majority
