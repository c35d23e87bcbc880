#include <doctest.h>

#include "majority/analysis.hpp"
#include "majority/errors.hpp"
#include "majority/strategies.hpp"
#include "majority/verifier.hpp"

using namespace majority;

namespace {

PropertyValues fixed_values() {
  PropertyValues v;
  v.d = [](int k, int) -> std::optional<long> { return k == 2 ? std::optional<long>(3) : std::nullopt; };
  v.m = [](int k, int) -> std::optional<long> { return k == 2 ? std::optional<long>(3) : std::nullopt; };
  v.m_limit = [](int k) -> std::optional<long> {
    if (k == 1) return 1;
    if (k == 2) return 3;
    if (k == 3) return 7;
    return std::nullopt;
  };
  return v;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(ceil_of(Rational(13, 3)) == 5);
  CHECK(ceil_of(Rational(4)) == 4);
  CHECK(ceil_of(Rational(-7, 2)) == -3);
  CHECK(to_string(Rational(26, 6)) == "13/3");
}

TEST_CASE("counting-model lower bound") {
  const PropertyValues v = fixed_values();
  const auto even = lb_cm(2, 6, v);
  CHECK(even.value == Rational(4));
  CHECK(even.asserted());
  const auto odd_n = lb_cm(2, 7, v);
  CHECK(odd_n.value == Rational(13, 3));
  CHECK(odd_n.requires_large_n);
  const auto odd_k = lb_cm(3, 8, v);
  CHECK(odd_k.value == Rational(8));
  CHECK_FALSE(odd_k.asserted());
  CHECK_FALSE(lb_cm(2, 2, v).asserted());

  PropertyValues missing;
  const auto partial = lb_cm(5, 10, missing);
  CHECK_FALSE(partial.value);
  CHECK_FALSE(partial.note.empty());
}

TEST_CASE("improved even-k bound") {
  CHECK(lb_cm_improved(8, 960, 5) == Rational(213114, 960));
  CHECK_THROWS_AS(lb_cm_improved(8, 960, 4), InvalidParameters);
  CHECK_THROWS_AS(lb_cm_improved(8, 960, 8), InvalidParameters);
  CHECK_THROWS_AS(lb_cm_improved(7, 960, 5), InvalidParameters);
  for (int n = 9; n <= 2000; n += 7) {
    CHECK(lb_cm_improved(8, n, 5) > Rational(2 * n, 9));
    CHECK(optimize_i(8, n).i == 5);
  }
}

TEST_CASE("improved bound ratio tends to 11/5") {
  Rational prev(1000);
  for (int k : {10, 20, 40, 80}) {
    const std::int64_t n = static_cast<std::int64_t>(k) * 1000000;
    const Rational ratio = lb_cm_improved(k, static_cast<int>(n), k / 2 + 1) * k / n;
    Rational dist = ratio - Rational(11, 5);
    if (dist < 0) dist = -dist;
    CHECK(dist < prev);
    prev = dist;
  }
  CHECK(prev < Rational(1, 20));
}

TEST_CASE("link-coloring bound") {
  const PropertyValues v = fixed_values();
  CHECK(lb_gm_bm(ModelId::GM, 3, 12, v).value == Rational(12));
  CHECK(lb_gm_bm(ModelId::BM, 4, 13, v).value == Rational(9, 2));
  CHECK(lb_gm_bm(ModelId::GM, 3, 13, v).value == Rational(6));
  CHECK(lb_gm_bm(ModelId::GM, 3, 12, v).requires_large_n);
  CHECK_THROWS_AS(lb_gm_bm(ModelId::CM, 3, 12, v), InvalidParameters);
}

TEST_CASE("degree lemmas on constructions") {
  const PropertyValues v = searched_property_values(8);
  const auto star = check_degree_lemmas(ModelId::CM, build_cm_even(9, 4).queries, v);
  CHECK(star.hard_checks_hold());
  const auto cm10 = check_degree_lemmas(ModelId::CM, build_cm_even(10, 4).queries, v);
  CHECK(cm10.hard_checks_hold());
  bool saw_degree_one = false;
  for (const auto& c : cm10.checks) saw_degree_one = saw_degree_one || c.name.find("degree-one") != std::string::npos;
  CHECK(saw_degree_one);

  const auto gm = check_degree_lemmas(ModelId::GM, build_gm(7, 3).queries, v);
  CHECK(gm.degrees.size() == 7);
  CHECK(gm.hard_checks_hold());

  const Hypergraph two(6, {{0, 1, 2}, {3, 4, 5}}, 3);
  const auto om = check_degree_lemmas(ModelId::OM, two, v);
  CHECK(om.components.size() == 2);
  CHECK_FALSE(om.hard_checks_hold());
}

TEST_CASE("degree-one lemma catches a bad counting-model query set") {
  const PropertyValues v = searched_property_values(8);
  // two queries each holding two balls that appear nowhere else
  const Hypergraph q(6, {{0, 1, 2, 3}, {2, 3, 4, 5}}, 4);
  const auto r = check_degree_lemmas(ModelId::CM, q, v);
  CHECK_FALSE(r.hard_checks_hold());
  CHECK_FALSE(is_sufficient(ModelId::CM, q));
}

TEST_CASE("sparse structure report") {
  const auto star = check_sparse_structure(build_cm_even(12, 4).queries, 3);
  CHECK(star.i == 3);
  CHECK(star.cycles.empty());
  CHECK(star.short_cycles == 0);

  // two queries sharing two private balls: the trimmed edges are not linear
  const Hypergraph shared(8, {{0, 1, 2, 3}, {0, 1, 4, 5}, {2, 4, 6, 7}}, 4);
  const auto r = check_sparse_structure(shared, 3);
  CHECK_FALSE(r.linear);
  CHECK_FALSE(is_sufficient(ModelId::CM, shared));
  CHECK_THROWS_AS(check_sparse_structure(Hypergraph(6, {{0, 1, 2}}, 3), 2), InvalidParameters);
  CHECK_THROWS_AS(check_sparse_structure(shared, 2), InvalidParameters);
}

TEST_CASE("bounds reports") {
  const BoundReport om = bounds_report(ModelId::OM, 3, 8);
  CHECK(om.exact == 4);
  CHECK(om.violations().empty());
  for (const auto& row : om.rows) CHECK(row.bound.value == Rational(4));

  const BoundReport cm = bounds_report(ModelId::CM, 2, 6);
  CHECK(cm.violations().empty());
  bool lower4 = false, upper5 = false;
  for (const auto& row : cm.rows) {
    lower4 = lower4 || (row.kind == BoundRow::Kind::Lower && row.bound.value == Rational(4));
    upper5 = upper5 || (row.kind == BoundRow::Kind::Upper && row.bound.value == Rational(5));
  }
  CHECK(lower4);
  CHECK(upper5);

  ReportOptions no_exact;
  no_exact.run_exact = false;
  const BoundReport gm = bounds_report(ModelId::GM, 3, 9, no_exact);
  bool lower = false, upper = false;
  for (const auto& row : gm.rows) {
    lower = lower || (row.kind == BoundRow::Kind::Lower && row.bound.value == Rational(4) &&
                      row.bound.requires_large_n);
    upper = upper || (row.kind == BoundRow::Kind::Upper && row.bound.value == Rational(21));
  }
  CHECK(lower);
  CHECK(upper);
  CHECK_FALSE(gm.exact_attempted);
}

TEST_CASE("violations are detected") {
  BoundReport r;
  r.exact_attempted = true;
  r.exact = 3;
  r.rows.push_back({BoundRow::Kind::Lower, FormulaBound{"too high", Rational(4), true, false, {}}});
  r.rows.push_back({BoundRow::Kind::Upper, FormulaBound{"too low", Rational(2), true, false, {}}});
  r.rows.push_back({BoundRow::Kind::Lower, FormulaBound{"large n", Rational(9), true, true, {}}});
  CHECK(r.violations().size() == 2);
}
