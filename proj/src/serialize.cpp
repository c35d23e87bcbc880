#include "majority/serialize.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include "majority/errors.hpp"

namespace majority {

namespace {

Json members_json(VertexSet s) { return Json(s.members()); }

VertexSet set_from_json(const Json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int i = v.get<int>();
    if (i < 0 || i >= kMaxVertices) throw InvalidParameters("vertex index out of range");
    s.insert(i);
  }
  return s;
}

void expect_artifact(const Json& j, std::string_view kind) {
  if (j.contains("artifact") && j.at("artifact").get<std::string>() != kind)
    throw InvalidParameters("expected a " + std::string(kind) + " artifact");
}

std::string rational_text(const std::optional<Rational>& r) {
  return r ? to_string(*r) : std::string("-");
}

Json rational_json(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

std::optional<Rational> rational_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto text = j.get<std::string>();
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

std::string hypergraph_to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.n() << ' ' << h.uniform_k() << '\n';
  for (const VertexSet& e : h.edges()) {
    bool first = true;
    for (int v : e) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph hypergraph_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::pair<int, int>> header;
  std::vector<VertexSet> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream fields(line);
    std::vector<long> values;
    long v;
    while (fields >> v) values.push_back(v);
    if (!fields.eof())
      throw InvalidParameters("line " + std::to_string(lineno) + ": expected integers");
    if (!header) {
      if (values.size() != 2)
        throw InvalidParameters("line " + std::to_string(lineno) + ": header must be \"n k\"");
      header = {static_cast<int>(values[0]), static_cast<int>(values[1])};
      continue;
    }
    VertexSet e;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i > 0 && values[i] <= values[i - 1])
        throw InvalidParameters("line " + std::to_string(lineno) + ": indices must increase");
      if (values[i] < 0 || values[i] >= header->first)
        throw InvalidParameters("line " + std::to_string(lineno) + ": index out of range");
      e.insert(static_cast<int>(values[i]));
    }
    edges.push_back(e);
  }
  if (!header) throw InvalidParameters("missing \"n k\" header");
  std::vector<VertexSet> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  const bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  return Hypergraph(header->first, std::move(edges), header->second, repeats);
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '{') {
    const Json j = Json::parse(text);
    if (j.contains("queries") && !j.contains("edges")) return hypergraph_from_json(j.at("queries"));
    return hypergraph_from_json(j);
  }
  return hypergraph_from_text(text);
}

Json to_json(const Hypergraph& h) {
  Json edges = Json::array();
  for (const VertexSet& e : h.edges()) edges.push_back(members_json(e));
  Json j{{"n", h.n()}, {"k", h.uniform_k()}, {"edges", edges}};
  if (h.is_multi()) j["multi"] = true;
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  std::vector<VertexSet> edges;
  for (const auto& e : j.at("edges")) {
    const auto list = e.get<std::vector<int>>();
    if (!std::is_sorted(list.begin(), list.end()) ||
        std::adjacent_find(list.begin(), list.end()) != list.end())
      throw InvalidParameters("edge indices must increase");
    edges.push_back(set_from_json(e));
  }
  return Hypergraph(j.at("n").get<int>(), std::move(edges), j.value("k", 0),
                    j.value("multi", false));
}

Json to_json(const Output& o) {
  return o.is_ball() ? Json(o.ball_index()) : Json("no-majority");
}

Output output_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "no-majority") throw InvalidParameters("bad output");
    return Output::no_majority();
  }
  return Output::ball(j.get<int>());
}

Json to_json(const Coloring& c) { return Json{{"n", c.n}, {"blue", members_json(c.blue)}}; }

Coloring coloring_from_json(const Json& j) {
  return Coloring(j.at("n").get<int>(), set_from_json(j.at("blue")));
}

Json to_json(const Answer& a) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, OmAnswer>)
          return Json{{"sides", Json::array({members_json(v.first), members_json(v.second)})}};
        else if constexpr (std::is_same_v<T, CmAnswer>)
          return Json{{"count", v.count}};
        else if constexpr (std::is_same_v<T, GmAnswer>)
          return Json{{"yes", v.yes}};
        else if (v.yes)
          return Json{{"yes", true}, {"pair", Json::array({v.x, v.y})}};
        else
          return Json{{"yes", false}};
      },
      a);
}

Answer answer_from_json(ModelId model, const Json& j) {
  switch (model) {
    case ModelId::OM: {
      const auto& sides = j.at("sides");
      if (sides.size() != 2) throw InvalidParameters("OM answer needs two sides");
      return OmAnswer{set_from_json(sides[0]), set_from_json(sides[1])};
    }
    case ModelId::CM: return CmAnswer{j.at("count").get<int>()};
    case ModelId::GM: return GmAnswer{j.at("yes").get<bool>()};
    case ModelId::BM: {
      BmAnswer b{j.at("yes").get<bool>(), -1, -1};
      if (b.yes) {
        const auto& p = j.at("pair");
        b.x = p.at(0).get<int>();
        b.y = p.at(1).get<int>();
      }
      return b;
    }
  }
  throw InvalidParameters("unknown model");
}

Json to_json(const AnswerVector& v) {
  Json answers = Json::array();
  for (const Answer& a : v.answers) answers.push_back(to_json(a));
  return Json{{"model", std::string(to_string(v.model))}, {"answers", answers}};
}

AnswerVector answer_vector_from_json(const Json& j) {
  AnswerVector v{parse_model(j.at("model").get<std::string>()), {}};
  for (const auto& a : j.at("answers")) v.answers.push_back(answer_from_json(v.model, a));
  return v;
}

Json to_json(const StrategyAux& aux) {
  Json j = Json::object();
  if (aux.spare) j["spare"] = *aux.spare;
  if (aux.core) j["core"] = members_json(*aux.core);
  if (aux.family) j["family"] = to_json(*aux.family);
  if (aux.extra_edge) j["extra_edge"] = members_json(*aux.extra_edge);
  return j;
}

StrategyAux strategy_aux_from_json(const Json& j) {
  StrategyAux aux;
  if (j.contains("spare")) aux.spare = j.at("spare").get<int>();
  if (j.contains("core")) aux.core = set_from_json(j.at("core"));
  if (j.contains("family")) aux.family = hypergraph_from_json(j.at("family"));
  if (j.contains("extra_edge")) aux.extra_edge = set_from_json(j.at("extra_edge"));
  return aux;
}

Json to_json(const Strategy& s) {
  return Json{{"artifact", "strategy"},
              {"model", std::string(to_string(s.model))},
              {"n", s.n},
              {"k", s.k},
              {"provenance", s.provenance},
              {"queries", to_json(s.queries)},
              {"aux", to_json(s.aux)}};
}

Strategy strategy_from_json(const Json& j) {
  expect_artifact(j, "strategy");
  Strategy s;
  s.model = parse_model(j.at("model").get<std::string>());
  s.n = j.at("n").get<int>();
  s.k = j.at("k").get<int>();
  s.provenance = j.at("provenance").get<std::string>();
  s.queries = hypergraph_from_json(j.at("queries"));
  s.aux = strategy_aux_from_json(j.value("aux", Json::object()));
  return s;
}

std::pair<std::string, std::string> strategy_to_text(const Strategy& s) {
  Json side = to_json(s);
  side.erase("queries");
  side["artifact"] = "strategy-sidecar";
  return {hypergraph_to_text(s.queries), dump(side)};
}

Strategy strategy_from_text(std::string_view queries_text, std::string_view sidecar) {
  Json j = Json::parse(sidecar);
  expect_artifact(j, "strategy-sidecar");
  j["artifact"] = "strategy";
  j["queries"] = to_json(hypergraph_from_text(queries_text));
  return strategy_from_json(j);
}

Json to_json(const Certificate& c) {
  Json j{{"artifact", "certificate"},
         {"model", std::string(to_string(c.model))},
         {"queries", to_json(c.queries)}};
  if (c.model == ModelId::BM) {
    Json nodes = Json::array();
    for (const BmNode& node : c.nodes) {
      Json nj{{"depth", node.depth}};
      if (node.output) nj["output"] = to_json(*node.output);
      Json children = Json::array();
      for (const auto& [a, next] : node.children)
        children.push_back(Json{{"answer", to_json(Answer{a})}, {"next", next}});
      if (!node.output) nj["children"] = children;
      nodes.push_back(nj);
    }
    j["nodes"] = nodes;
  } else {
    Json table = Json::array();
    for (const auto& [words, out] : c.table) {
      AnswerVector v{c.model, {}};
      for (int t = 0; t < c.queries.size(); ++t)
        v.answers.push_back(answer_from_word(c.model, c.queries[t], words[t]));
      table.push_back(Json{{"answers", to_json(v).at("answers")}, {"output", to_json(out)}});
    }
    j["table"] = table;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  expect_artifact(j, "certificate");
  Certificate c;
  c.model = parse_model(j.at("model").get<std::string>());
  c.queries = hypergraph_from_json(j.at("queries"));
  if (c.model == ModelId::BM) {
    for (const auto& nj : j.at("nodes")) {
      BmNode node;
      node.depth = nj.at("depth").get<int>();
      if (nj.contains("output")) node.output = output_from_json(nj.at("output"));
      if (nj.contains("children"))
        for (const auto& ch : nj.at("children"))
          node.children.emplace_back(
              std::get<BmAnswer>(answer_from_json(ModelId::BM, ch.at("answer"))),
              ch.at("next").get<int>());
      c.nodes.push_back(std::move(node));
    }
  } else {
    for (const auto& row : j.at("table")) {
      const auto& answers = row.at("answers");
      if (static_cast<int>(answers.size()) != c.queries.size())
        throw InvalidParameters("certificate row length differs from the query count");
      std::vector<std::uint64_t> words;
      for (int t = 0; t < c.queries.size(); ++t)
        words.push_back(word_from_answer(answer_from_json(c.model, answers[t]), c.queries[t]));
      c.table.emplace(std::move(words), output_from_json(row.at("output")));
    }
  }
  return c;
}

Json to_json(const FailureWitness& w) {
  Json colorings = Json::array();
  for (const Coloring& c : w.colorings) colorings.push_back(to_json(c));
  return Json{{"artifact", "failure-witness"},
              {"model", std::string(to_string(w.model))},
              {"queries", to_json(w.queries)},
              {"answers", to_json(w.answers)},
              {"colorings", colorings}};
}

FailureWitness failure_witness_from_json(const Json& j) {
  expect_artifact(j, "failure-witness");
  FailureWitness w;
  w.model = parse_model(j.at("model").get<std::string>());
  w.queries = hypergraph_from_json(j.at("queries"));
  w.answers = answer_vector_from_json(j.at("answers"));
  for (const auto& c : j.at("colorings")) w.colorings.push_back(coloring_from_json(c));
  return w;
}

Json to_json(const Verdict& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

Json to_json(const ExactResult& r) {
  Json all = Json::array();
  for (const Hypergraph& h : r.all_optimal) all.push_back(to_json(h));
  Json j{{"artifact", "exact"},
         {"model", std::string(to_string(r.model))},
         {"k", r.k},
         {"n", r.n},
         {"value", optional_json(r.value)},
         {"optimal_queries", r.optimal_queries ? to_json(*r.optimal_queries) : Json(nullptr)},
         {"candidates", r.candidates}};
  if (!r.all_optimal.empty()) j["all_optimal"] = all;
  return j;
}

ExactResult exact_result_from_json(const Json& j) {
  expect_artifact(j, "exact");
  ExactResult r;
  r.model = parse_model(j.at("model").get<std::string>());
  r.k = j.at("k").get<int>();
  r.n = j.at("n").get<int>();
  r.value = optional_from<int>(j, "value");
  if (!j.at("optimal_queries").is_null())
    r.optimal_queries = hypergraph_from_json(j.at("optimal_queries"));
  if (j.contains("all_optimal"))
    for (const auto& h : j.at("all_optimal")) r.all_optimal.push_back(hypergraph_from_json(h));
  r.candidates = j.value("candidates", 0L);
  return r;
}

Json to_json(const MinSearchResult& r, std::string_view property) {
  return Json{{"artifact", "min-search"},
              {"property", std::string(property)},
              {"k", r.k},
              {"n", r.n},
              {"cap", r.q_cap},
              {"value", optional_json(r.value)},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)},
              {"candidates", r.candidates}};
}

MinSearchResult min_search_result_from_json(const Json& j) {
  expect_artifact(j, "min-search");
  MinSearchResult r;
  r.k = j.at("k").get<int>();
  r.n = j.at("n").get<int>();
  r.q_cap = j.at("cap").get<int>();
  r.value = optional_from<int>(j, "value");
  if (!j.at("witness").is_null()) r.witness = hypergraph_from_json(j.at("witness"));
  r.candidates = j.value("candidates", 0L);
  return r;
}

Json to_json(const FormulaBound& b) {
  Json j{{"name", b.name},
         {"value", rational_json(b.value)},
         {"conditions_met", b.conditions_met},
         {"requires_large_n", b.requires_large_n},
         {"asserted", b.asserted()}};
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

namespace {

FormulaBound formula_bound_from_json(const Json& j) {
  FormulaBound b;
  b.name = j.at("name").get<std::string>();
  b.value = rational_from_json(j.at("value"));
  b.conditions_met = j.at("conditions_met").get<bool>();
  b.requires_large_n = j.at("requires_large_n").get<bool>();
  b.note = j.value("note", std::string());
  return b;
}

Json lemma_json(const LemmaCheck& c) {
  return Json{{"name", c.name},
              {"applicable", c.applicable},
              {"requires_large_n", c.requires_large_n},
              {"holds", optional_json(c.holds)},
              {"detail", c.detail}};
}

}  // namespace

Json to_json(const DegreeReport& r) {
  Json comps = Json::array();
  for (VertexSet c : r.components) comps.push_back(members_json(c));
  Json checks = Json::array();
  for (const LemmaCheck& c : r.checks) checks.push_back(lemma_json(c));
  return Json{{"degrees", r.degrees},
              {"components", comps},
              {"checks", checks},
              {"hard_checks_hold", r.hard_checks_hold()}};
}

Json to_json(const SparseStructureReport& r) {
  Json cycles = Json::array();
  for (const LinearCycle& c : r.cycles)
    cycles.push_back(Json{{"edges", c.edges}, {"joints", c.joints}, {"covered", c.covered}});
  return Json{{"i", r.i},
              {"selected", r.selected},
              {"trimmed", to_json(r.trimmed)},
              {"linear", r.linear},
              {"cycles", cycles},
              {"short_cycles", r.short_cycles},
              {"total_size", r.total_size},
              {"size_cap", to_string(r.size_cap)},
              {"within_cap", r.within_cap}};
}

Json to_json(const BoundReport& r) {
  Json rows = Json::array();
  for (const BoundRow& row : r.rows) {
    Json b = to_json(row.bound);
    Json entry{{"kind", row.kind == BoundRow::Kind::Lower ? "lower" : "upper"}};
    entry.update(b);
    rows.push_back(entry);
  }
  Json j{{"artifact", "bound-report"},
         {"model", std::string(to_string(r.model))},
         {"k", r.k},
         {"n", r.n},
         {"rows", rows},
         {"exact_attempted", r.exact_attempted},
         {"exact", optional_json(r.exact)}};
  if (!r.exact_note.empty()) j["exact_note"] = r.exact_note;
  j["violations"] = r.violations();
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  expect_artifact(j, "bound-report");
  BoundReport r;
  r.model = parse_model(j.at("model").get<std::string>());
  r.k = j.at("k").get<int>();
  r.n = j.at("n").get<int>();
  for (const auto& row : j.at("rows")) {
    const auto kind = row.at("kind").get<std::string>() == "lower" ? BoundRow::Kind::Lower
                                                                   : BoundRow::Kind::Upper;
    r.rows.push_back({kind, formula_bound_from_json(row)});
  }
  r.exact_attempted = j.at("exact_attempted").get<bool>();
  r.exact = optional_from<int>(j, "exact");
  r.exact_note = j.value("exact_note", std::string());
  return r;
}

std::string bound_report_table(const BoundReport& r) {
  std::vector<std::array<std::string, 4>> cells{{"kind", "bound", "value", "status"}};
  for (const BoundRow& row : r.rows) {
    const FormulaBound& b = row.bound;
    std::string status = b.asserted() ? "asserted"
                         : !b.value   ? "unavailable"
                         : b.requires_large_n ? "large n only"
                                              : "conditions unmet";
    cells.push_back({row.kind == BoundRow::Kind::Lower ? "lower" : "upper", b.name,
                     rational_text(b.value), status});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& line : cells)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], line[c].size());

  std::ostringstream out;
  out << to_string(r.model) << " k=" << r.k << " n=" << r.n << '\n';
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < 3; ++c)
      out << std::left << std::setw(static_cast<int>(width[c])) << line[c] << "  ";
    out << line[3] << '\n';
  }
  out << "exact: ";
  if (!r.exact_attempted)
    out << "not attempted";
  else if (r.exact)
    out << *r.exact;
  else if (!r.exact_note.empty())
    out << "unknown (" << r.exact_note << ")";
  else
    out << "no sufficient query set";
  out << '\n';
  for (const auto& v : r.violations()) out << "VIOLATION: " << v << '\n';
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace majority
