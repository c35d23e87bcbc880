#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "majority/analysis.hpp"
#include "majority/exact.hpp"
#include "majority/min_search.hpp"
#include "majority/models.hpp"
#include "majority/strategies.hpp"
#include "majority/verifier.hpp"

namespace majority {

// Field order is insertion order, so equal values dump to identical bytes.
using Json = nlohmann::ordered_json;

// Text format: "n k" on the first line (k = 0 when not uniform), then one
// edge per line as strictly increasing 0-based indices. Blank lines and
// lines starting with '#' are skipped.
std::string hypergraph_to_text(const Hypergraph& h);
Hypergraph hypergraph_from_text(std::string_view text);

// Either format; JSON is recognised by a leading '{'.
Hypergraph parse_hypergraph(std::string_view text);

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json to_json(const Output& o);
Output output_from_json(const Json& j);

Json to_json(const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json to_json(const Answer& a);
Answer answer_from_json(ModelId model, const Json& j);
Json to_json(const AnswerVector& v);
AnswerVector answer_vector_from_json(const Json& j);

Json to_json(const StrategyAux& aux);
StrategyAux strategy_aux_from_json(const Json& j);
Json to_json(const Strategy& s);
Strategy strategy_from_json(const Json& j);
// Queries in the text format plus a JSON sidecar with everything else.
std::pair<std::string, std::string> strategy_to_text(const Strategy& s);
Strategy strategy_from_text(std::string_view queries_text, std::string_view sidecar);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);
Json to_json(const FailureWitness& w);
FailureWitness failure_witness_from_json(const Json& j);
Json to_json(const Verdict& v);

Json to_json(const ExactResult& r);
ExactResult exact_result_from_json(const Json& j);
// `property` is "B" or "C".
Json to_json(const MinSearchResult& r, std::string_view property);
MinSearchResult min_search_result_from_json(const Json& j);

Json to_json(const FormulaBound& b);
Json to_json(const DegreeReport& r);
Json to_json(const SparseStructureReport& r);
Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);
std::string bound_report_table(const BoundReport& r);

// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace majority
