#include <doctest.h>

#include "majority/errors.hpp"
#include "majority/exact.hpp"

using namespace majority;

namespace {

int om_closed_form(int k, int n) {
  const int span = n % 2 == 0 ? n - 1 : n - 2;
  return (span + k - 2) / (k - 1);
}

// Least q such that some q-subset of all k-sets is sufficient, trying every
// subset with no symmetry reduction.
std::optional<int> brute_force_exact(ModelId model, int k, int n) {
  const auto pool = k_subsets(n, k);
  const int m = static_cast<int>(pool.size());
  for (int q = 1; q <= m; ++q) {
    std::vector<int> idx(q);
    for (int i = 0; i < q; ++i) idx[i] = i;
    while (true) {
      std::vector<VertexSet> edges;
      for (int i : idx) edges.push_back(pool[i]);
      if (naive_sufficient(model, Hypergraph(n, edges, k))) return q;
      int i = q - 1;
      while (i >= 0 && idx[i] == m - q + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("exact search agrees with unreduced brute force") {
  for (ModelId m : {ModelId::OM, ModelId::CM, ModelId::GM})
    for (int k = 2; k <= 3; ++k)
      for (int n = k; n <= 5; ++n) {
        CAPTURE(to_string(m));
        CAPTURE(k);
        CAPTURE(n);
        CHECK(exact_n(m, k, n).value == brute_force_exact(m, k, n));
      }
  CHECK(exact_n(ModelId::CM, 2, 6).value == brute_force_exact(ModelId::CM, 2, 6));
  CHECK(exact_n(ModelId::OM, 3, 6).value == brute_force_exact(ModelId::OM, 3, 6));
}

TEST_CASE("exact OM values") {
  CHECK(exact_n(ModelId::OM, 2, 4).value == 3);
  CHECK(exact_n(ModelId::OM, 3, 5).value == 2);
  const ExactResult r = exact_n(ModelId::OM, 3, 7);
  CHECK(r.value == 3);
  REQUIRE(r.optimal_queries);
  CHECK(r.optimal_queries->size() == 3);
  CHECK(is_sufficient(ModelId::OM, *r.optimal_queries));
  for (int k = 2; k <= 5; ++k)
    for (int n = k; n <= 6; ++n) CHECK(exact_n(ModelId::OM, k, n).value == om_closed_form(k, n));
}

TEST_CASE("unsolvable instances and small exact values") {
  CHECK_FALSE(exact_n(ModelId::GM, 3, 3).value);
  CHECK_FALSE(exact_n(ModelId::CM, 3, 3).value);
  CHECK(exact_n(ModelId::BM, 3, 3).value == 1);
  CHECK(exact_n(ModelId::CM, 2, 5).value == exact_n(ModelId::OM, 2, 5).value);
}

TEST_CASE("all optimal orbits are sufficient and distinct") {
  ExactOptions opt;
  opt.collect_all_optimal = true;
  const ExactResult r = exact_n(ModelId::OM, 2, 4, opt);
  REQUIRE(r.value == 3);
  CHECK(r.all_optimal.size() == 2);  // the path and the star
  for (const Hypergraph& h : r.all_optimal) CHECK(is_sufficient(ModelId::OM, h));
}

TEST_CASE("budget and parameter errors") {
  ExactOptions opt;
  opt.budget.max_candidates = 1;
  opt.upper_hint = 6;
  try {
    (void)exact_n(ModelId::GM, 3, 7, opt);
    FAIL("expected ResourceLimit");
  } catch (const ResourceLimit& e) {
    CHECK(e.upper() == 6);
    REQUIRE(e.lower());
    CHECK(*e.lower() >= 1);
  }
  CHECK_THROWS_AS(exact_n(ModelId::OM, 4, 3), InvalidParameters);
}

TEST_CASE("thread count does not change the result") {
  ExactOptions par;
  par.budget.threads = 3;
  const ExactResult a = exact_n(ModelId::CM, 3, 6);
  const ExactResult b = exact_n(ModelId::CM, 3, 6, par);
  CHECK(a.value == b.value);
  CHECK(a.optimal_queries == b.optimal_queries);
}
