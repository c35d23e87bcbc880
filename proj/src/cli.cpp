#include "majority/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "majority/analysis.hpp"
#include "majority/errors.hpp"
#include "majority/exact.hpp"
#include "majority/min_search.hpp"
#include "majority/property.hpp"
#include "majority/serialize.hpp"
#include "majority/strategies.hpp"
#include "majority/verifier.hpp"

namespace majority {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw Usage("--input is required");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot write " + path);
  f << text;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty())
    out << text;
  else
    write_file(cfg.output, text);
}

ModelId need_model(const RunConfig& cfg) {
  if (!cfg.model) throw Usage("--model is required");
  return *cfg.model;
}
int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw Usage(std::string(flag) + " is required");
  return *v;
}

SearchBudget budget_of(const RunConfig& cfg) {
  SearchBudget b;
  if (cfg.time_budget) b.time_limit = std::chrono::seconds(*cfg.time_budget);
  b.threads = cfg.threads;
  return b;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions v;
  v.max_n_deterministic = cfg.coloring_cap;
  v.max_n_bm = std::min(cfg.coloring_cap, v.max_n_bm);
  v.memo_cap = cfg.memo_cap;
  return v;
}

Json budget_json(const std::string& command, const ResourceLimit& e) {
  return Json{{"artifact", "budget-exceeded"},
              {"command", command},
              {"message", e.what()},
              {"lower", e.lower() ? Json(*e.lower()) : Json(nullptr)},
              {"upper", e.upper() ? Json(*e.upper()) : Json(nullptr)}};
}

// Queries plus model: a strategy JSON supplies its own model.
std::pair<ModelId, Hypergraph> load_queries(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  std::optional<ModelId> model = cfg.model;
  const auto start = text.find_first_not_of(" \t\r\n");
  if (!model && start != std::string::npos && text[start] == '{') {
    const Json j = Json::parse(text);
    if (j.contains("model")) model = parse_model(j.at("model").get<std::string>());
  }
  if (!model) throw Usage("--model is required");
  return {*model, parse_hypergraph(text)};
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  const ModelId model = need_model(cfg);
  const int n = need(cfg.n, "--n");
  const int k = need(cfg.k, "--k");
  Strategy s;
  switch (model) {
    case ModelId::OM: s = build_om(n, k); break;
    case ModelId::CM:
      s = k % 2 == 0 ? build_cm_even(n, k) : build_cm_odd(n, k, std::nullopt, cfg.family_cap);
      break;
    case ModelId::GM:
    case ModelId::BM: s = build_gm(n, k, std::nullopt, model, cfg.family_cap); break;
  }
  if (cfg.format == "text") {
    auto [queries, sidecar] = strategy_to_text(s);
    if (cfg.output.empty()) {
      out << queries;
    } else {
      write_file(cfg.output, queries);
      write_file(cfg.output + ".aux.json", sidecar);
    }
  } else {
    emit(cfg, out, dump(to_json(s)));
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto [model, queries] = load_queries(cfg);
  const Verdict v = verify(model, queries, verify_options(cfg));
  emit(cfg, out, dump(to_json(v)));
  if (is_certificate(v)) return kExitOk;
  if (!cfg.emit_witness.empty())
    write_file(cfg.emit_witness, dump(to_json(std::get<FailureWitness>(v))));
  err << "insufficient: the queries cannot always determine a valid output\n";
  return kExitInvalid;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  ExactOptions opt;
  opt.collect_all_optimal = cfg.all_optimal;
  opt.budget = budget_of(cfg);
  opt.verify = verify_options(cfg);
  const ExactResult r = exact_n(need_model(cfg), need(cfg.k, "--k"), need(cfg.n, "--n"), opt);
  emit(cfg, out, dump(to_json(r)));
  return kExitOk;
}

int cmd_min(const RunConfig& cfg, std::ostream& out, bool property_b) {
  const int k = need(cfg.k, "--k");
  const int n = need(cfg.n, "--n");
  const MinSearchResult r = property_b ? min_non_property_b(k, n, cfg.cap, budget_of(cfg))
                                       : min_non_property_c(k, n, cfg.cap, budget_of(cfg));
  emit(cfg, out, dump(to_json(r, property_b ? "B" : "C")));
  return kExitOk;
}

Json analysis_json(ModelId model, const Hypergraph& queries, std::optional<int> i, int cap) {
  Json j{{"artifact", "analysis"},
         {"model", std::string(to_string(model))},
         {"cap", cap},
         {"queries", to_json(queries)},
         {"degree", to_json(check_degree_lemmas(model, queries, searched_property_values(cap)))}};
  if (i) {
    j["i"] = *i;
    j["sparse_structure"] = to_json(check_sparse_structure(queries, *i));
  }
  return j;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto [model, queries] = load_queries(cfg);
  emit(cfg, out, dump(analysis_json(model, queries, cfg.i, cfg.cap)));
  return kExitOk;
}

int cmd_report(const RunConfig& cfg, std::ostream& out) {
  ReportOptions opt;
  opt.run_exact = !cfg.no_exact;
  opt.exact.budget = budget_of(cfg);
  opt.exact.verify = verify_options(cfg);
  opt.property_cap = cfg.cap;
  const BoundReport r =
      bounds_report(need_model(cfg), need(cfg.k, "--k"), need(cfg.n, "--n"), opt);
  emit(cfg, out, cfg.format == "text" ? bound_report_table(r) : dump(to_json(r)));
  return r.violations().empty() ? kExitOk : kExitInvalid;
}

Json crosscheck_json(std::uint64_t seed, int count) {
  Json bad = Json::array();
  int agree = 0;
  const auto sets = random_query_sets(seed, count);
  for (std::size_t t = 0; t < sets.size(); ++t) {
    if (cross_check_class_verifier(sets[t].model, sets[t].queries)) {
      ++agree;
      continue;
    }
    bad.push_back(Json{{"index", t},
                       {"model", std::string(to_string(sets[t].model))},
                       {"queries", to_json(sets[t].queries)}});
  }
  return Json{{"artifact", "crosscheck"},
              {"seed", seed},
              {"count", count},
              {"agree", agree},
              {"disagreements", bad}};
}

int cmd_crosscheck(const RunConfig& cfg, std::ostream& out) {
  const Json j = crosscheck_json(cfg.seed, cfg.count);
  emit(cfg, out, dump(j));
  return j.at("disagreements").empty() ? kExitOk : kExitInvalid;
}

bool replay_strategy(const Strategy& s, const VerifyOptions& opt) {
  if (s.queries.n() != s.n) return false;
  for (const VertexSet& q : s.queries.edges())
    if (q.size() != s.k) return false;
  if (!is_sufficient(s.model, s.queries, opt)) return false;
  if (!is_deterministic(s.model) || s.n > 16) return true;
  // The constructive decoder must also land on a valid output everywhere.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s.n); ++bits) {
    const Coloring c{s.n, VertexSet(bits)};
    if (!valid_outputs(c).contains(decode(s, answer_vector(s.model, s.queries, c)))) return false;
  }
  return true;
}

bool replay_min_search(const Json& j) {
  const MinSearchResult r = min_search_result_from_json(j);
  const bool b = j.at("property").get<std::string>() == "B";
  if (!r.value) return !r.witness;
  if (!r.witness || r.witness->size() != *r.value || r.witness->n() != r.n) return false;
  for (const VertexSet& e : r.witness->edges())
    if (e.size() != r.k) return false;
  return !(b ? naive_property_b(*r.witness) : naive_property_c(*r.witness));
}

bool replay_exact(const ExactResult& r, const VerifyOptions& opt) {
  if (!r.value) {
    // Unsolvable claim: even every k-subset together is insufficient.
    return !is_sufficient(r.model, Hypergraph(r.n, k_subsets(r.n, r.k), r.k), opt);
  }
  if (!r.optimal_queries || r.optimal_queries->size() != *r.value) return false;
  for (const VertexSet& q : r.optimal_queries->edges())
    if (q.size() != r.k) return false;
  if (!is_sufficient(r.model, *r.optimal_queries, opt)) return false;
  return std::all_of(r.all_optimal.begin(), r.all_optimal.end(), [&](const Hypergraph& h) {
    return h.size() == *r.value && is_sufficient(r.model, h, opt);
  });
}

bool replay_report(const BoundReport& stored, int cap) {
  if (!stored.violations().empty()) return false;
  ReportOptions opt;
  opt.run_exact = false;
  opt.property_cap = cap;
  const BoundReport fresh = bounds_report(stored.model, stored.k, stored.n, opt);
  if (fresh.rows.size() != stored.rows.size()) return false;
  for (std::size_t t = 0; t < fresh.rows.size(); ++t) {
    const auto& a = fresh.rows[t].bound;
    const auto& b = stored.rows[t].bound;
    if (a.name != b.name || a.value != b.value || a.asserted() != b.asserted()) return false;
  }
  return true;
}

int cmd_replay(const RunConfig& cfg, std::ostream& out) {
  const std::string text = read_file(cfg.input);
  bool ok = false;
  std::string kind;
  try {
    const Json j = Json::parse(text);
    kind = j.value("artifact", std::string());
    const VerifyOptions opt = verify_options(cfg);
    if (kind == "certificate") {
      ok = replay(certificate_from_json(j));
    } else if (kind == "failure-witness") {
      ok = replay(failure_witness_from_json(j));
    } else if (kind == "strategy") {
      ok = replay_strategy(strategy_from_json(j), opt);
    } else if (kind == "exact") {
      ok = replay_exact(exact_result_from_json(j), opt);
    } else if (kind == "min-search") {
      ok = replay_min_search(j);
    } else if (kind == "bound-report") {
      ok = replay_report(bound_report_from_json(j), cfg.cap);
    } else if (kind == "analysis") {
      const ModelId model = parse_model(j.at("model").get<std::string>());
      const Hypergraph queries = hypergraph_from_json(j.at("queries"));
      std::optional<int> i;
      if (j.contains("i")) i = j.at("i").get<int>();
      ok = analysis_json(model, queries, i, j.at("cap").get<int>()) == j;
    } else if (kind == "crosscheck") {
      ok = crosscheck_json(j.at("seed").get<std::uint64_t>(), j.at("count").get<int>()) == j;
    } else if (kind == "budget-exceeded") {
      const auto& lo = j.at("lower");
      const auto& hi = j.at("upper");
      ok = lo.is_null() || hi.is_null() || lo.get<long>() <= hi.get<long>();
    } else {
      kind = kind.empty() ? "unrecognised" : kind;
    }
  } catch (const Json::exception&) {
    ok = false;
  } catch (const InvalidParameters&) {
    ok = false;
  } catch (const NoConsistentColoring&) {
    ok = false;
  }
  out << (ok ? "valid " : "invalid ") << (kind.empty() ? "artifact" : kind) << '\n';
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.cap < 1 || cfg.family_cap < 1 || cfg.coloring_cap < 1 || cfg.memo_cap < 1 ||
        cfg.threads < 1 || cfg.count < 0 || (cfg.time_budget && *cfg.time_budget < 1))
      throw Usage("caps, budgets and thread counts must be positive");
    if (cfg.format != "json" && cfg.format != "text") throw Usage("--format is json or text");
    const std::string& c = cfg.command;
    if (c == "construct") return cmd_construct(cfg, out);
    if (c == "verify") return cmd_verify(cfg, out, err);
    if (c == "exact") return cmd_exact(cfg, out);
    if (c == "min-b") return cmd_min(cfg, out, true);
    if (c == "min-c") return cmd_min(cfg, out, false);
    if (c == "analyze") return cmd_analyze(cfg, out);
    if (c == "report") return cmd_report(cfg, out);
    if (c == "crosscheck") return cmd_crosscheck(cfg, out);
    if (c == "replay") return cmd_replay(cfg, out);
    throw Usage("unknown command '" + c + "'");
  } catch (const Usage& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "budget exceeded: " << e.what() << '\n';
    try {
      emit(cfg, out, dump(budget_json(cfg.command, e)));
    } catch (const Usage&) {
    }
    return kExitBudget;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Non-adaptive strategies for the two-color majority problem"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string model;

  const auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", model, "om, cm, gm or bm");
  };
  const auto add_nk = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of balls");
    sub->add_option("--k", cfg.k, "query size");
  };
  const auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input, "input file (hypergraph text or JSON)");
    sub->add_option("--output", cfg.output, "artifact path (default: stdout)");
  };
  const auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--time-budget", cfg.time_budget, "wall-clock limit in seconds");
    sub->add_option("--threads", cfg.threads, "worker threads");
    sub->add_option("--coloring-cap", cfg.coloring_cap, "largest n for exhaustive scans");
    sub->add_option("--memo-cap", cfg.memo_cap, "BM memo entries");
  };

  auto* construct = app.add_subcommand("construct", "emit a strategy");
  add_model(construct);
  add_nk(construct);
  construct->add_option("--output", cfg.output, "artifact path (default: stdout)");
  construct->add_option("--cap", cfg.family_cap, "edge cap when searching a family");
  construct->add_option("--format", cfg.format, "json or text (text writes an .aux.json sidecar)");

  auto* verify_cmd = app.add_subcommand("verify", "certify or refute a query set");
  add_model(verify_cmd);
  add_io(verify_cmd);
  add_budget(verify_cmd);
  verify_cmd->add_option("--emit-witness", cfg.emit_witness, "write the failure witness here");

  auto* exact = app.add_subcommand("exact", "exact number of queries");
  add_model(exact);
  add_nk(exact);
  exact->add_option("--output", cfg.output, "artifact path (default: stdout)");
  exact->add_flag("--all", cfg.all_optimal, "list every optimal query set up to isomorphism");
  add_budget(exact);

  for (const char* name : {"min-b", "min-c"}) {
    auto* sub = app.add_subcommand(name, std::string("fewest edges without Property ") +
                                             (name[4] == 'b' ? "B" : "C"));
    add_nk(sub);
    sub->add_option("--cap", cfg.cap, "largest edge count searched");
    sub->add_option("--output", cfg.output, "artifact path (default: stdout)");
    sub->add_option("--time-budget", cfg.time_budget, "wall-clock limit in seconds");
    sub->add_option("--threads", cfg.threads, "worker threads");
  }

  auto* analyze = app.add_subcommand("analyze", "degree and sparse-structure checks");
  add_model(analyze);
  add_io(analyze);
  analyze->add_option("--i", cfg.i, "sparse-structure parameter, k/2 < i < k");
  analyze->add_option("--cap", cfg.cap, "edge cap for property values");

  auto* report = app.add_subcommand("report", "bounds next to the exact value");
  add_model(report);
  add_nk(report);
  report->add_option("--output", cfg.output, "artifact path (default: stdout)");
  report->add_option("--cap", cfg.cap, "edge cap for property values");
  report->add_option("--format", cfg.format, "json or text");
  report->add_flag("--no-exact", cfg.no_exact, "skip the exact search");
  add_budget(report);

  auto* crosscheck = app.add_subcommand("crosscheck", "seeded verifier cross-check");
  crosscheck->add_option("--seed", cfg.seed, "random seed");
  crosscheck->add_option("--count", cfg.count, "number of query sets");
  crosscheck->add_option("--output", cfg.output, "artifact path (default: stdout)");

  auto* replay_cmd = app.add_subcommand("replay", "recheck any emitted artifact");
  replay_cmd->add_option("--input", cfg.input, "artifact file")->required();
  replay_cmd->add_option("--cap", cfg.cap, "edge cap for recomputed property values");
  add_budget(replay_cmd);

  try {
    app.parse(argc, argv);
    if (!model.empty()) cfg.model = parse_model(model);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    const int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const InvalidParameters& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return run(cfg, out, err);
}

}  // namespace majority
