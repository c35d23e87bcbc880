#include <doctest.h>

#include "majority/errors.hpp"
#include "majority/serialize.hpp"
#include "test_support.hpp"

using namespace majority;
using namespace majority::testing;

TEST_CASE("hypergraph text format") {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}}, 3);
  const std::string text = hypergraph_to_text(h);
  CHECK(text == "5 3\n0 1 2\n2 3 4\n");
  CHECK(hypergraph_from_text(text) == h);
  CHECK(hypergraph_from_text("# comment\n4 0\n\n0 1\n1 2 3\n") ==
        Hypergraph(4, {{0, 1}, {1, 2, 3}}));
  CHECK_THROWS_AS(hypergraph_from_text("3 2\n1 0\n"), InvalidParameters);
  CHECK_THROWS_AS(hypergraph_from_text("3 2\n0 3\n"), InvalidParameters);
  CHECK_THROWS_AS(hypergraph_from_text("3 2\n0 x\n"), InvalidParameters);
  CHECK_THROWS_AS(hypergraph_from_text(""), InvalidParameters);
  CHECK_THROWS_AS(hypergraph_from_text("3 2\n0 1 2\n"), InvalidParameters);
}

TEST_CASE("hypergraph JSON") {
  const Hypergraph h(5, {{0, 1, 2}, {2, 3, 4}}, 3);
  const Json j = to_json(h);
  CHECK(j.dump() == R"({"n":5,"k":3,"edges":[[0,1,2],[2,3,4]]})");
  CHECK(hypergraph_from_json(j) == h);
  CHECK(parse_hypergraph(j.dump()) == h);
  CHECK(parse_hypergraph(hypergraph_to_text(h)) == h);
}

TEST_CASE("answer vector JSON") {
  AnswerVector om{ModelId::OM, {OmAnswer{{0, 2}, {1}}}};
  CHECK(to_json(om).dump() == R"({"model":"OM","answers":[{"sides":[[0,2],[1]]}]})");
  CHECK(answer_vector_from_json(to_json(om)) == om);
  AnswerVector cm{ModelId::CM, {CmAnswer{1}, CmAnswer{0}}};
  CHECK(answer_vector_from_json(to_json(cm)) == cm);
  AnswerVector gm{ModelId::GM, {GmAnswer{true}}};
  CHECK(to_json(gm).dump() == R"({"model":"GM","answers":[{"yes":true}]})");
  AnswerVector bm{ModelId::BM, {BmAnswer{true, 1, 3}, BmAnswer{false, -1, -1}}};
  CHECK(to_json(bm).dump() ==
        R"({"model":"BM","answers":[{"yes":true,"pair":[1,3]},{"yes":false}]})");
  CHECK(answer_vector_from_json(to_json(bm)) == bm);
}

TEST_CASE("strategies round-trip through JSON and text") {
  for (const Strategy& s : {build_om(9, 3), build_cm_even(7, 4), build_cm_odd(7, 3), build_gm(7, 3)}) {
    CHECK(strategy_from_json(to_json(s)) == s);
    const auto [text, sidecar] = strategy_to_text(s);
    CHECK(strategy_from_text(text, sidecar) == s);
    CHECK(dump(to_json(s)) == dump(to_json(strategy_from_json(Json::parse(dump(to_json(s)))))));
  }
}

TEST_CASE("certificates and witnesses round-trip") {
  for (ModelId m : {ModelId::OM, ModelId::CM, ModelId::GM, ModelId::BM}) {
    const Verdict good = verify(m, build_gm(6, 3).queries);
    REQUIRE(is_certificate(good));
    const Certificate back = certificate_from_json(Json::parse(dump(to_json(good))));
    CHECK(replay(back));
    CHECK(dump(to_json(back)) == dump(to_json(good)));

    const Verdict bad = verify(m, Hypergraph(6, {{0, 1, 2}, {3, 4, 5}}, 3));
    REQUIRE_FALSE(is_certificate(bad));
    const FailureWitness w = failure_witness_from_json(Json::parse(dump(to_json(bad))));
    CHECK(replay(w));
    CHECK(dump(to_json(w)) == dump(to_json(bad)));
  }
  CHECK_THROWS_AS(certificate_from_json(to_json(build_om(4, 2))), InvalidParameters);
}

TEST_CASE("search results and reports round-trip") {
  const ExactResult e = exact_n(ModelId::OM, 2, 4);
  const ExactResult eb = exact_result_from_json(to_json(e));
  CHECK(eb.value == e.value);
  CHECK(eb.optimal_queries == e.optimal_queries);

  const MinSearchResult m = min_non_property_c(2, 3, 4);
  const MinSearchResult mb = min_search_result_from_json(to_json(m, "C"));
  CHECK(mb.value == 3);
  CHECK(mb.witness == m.witness);

  const BoundReport r = bounds_report(ModelId::CM, 2, 6);
  const BoundReport rb = bound_report_from_json(to_json(r));
  CHECK(dump(to_json(rb)) == dump(to_json(r)));
  const std::string table = bound_report_table(r);
  CHECK(table.find("exact: 5") != std::string::npos);
  CHECK(table.find("2n/(k+1)") != std::string::npos);
}
