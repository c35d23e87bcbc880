#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "majority/exact.hpp"
#include "majority/hypergraph.hpp"
#include "majority/models.hpp"

namespace majority {

using Rational = boost::rational<std::int64_t>;

std::int64_t ceil_of(const Rational& r);
std::string to_string(const Rational& r);

// Property B / C minima feeding the bound formulas. Each accessor returns
// nothing when the value is unavailable (for instance above a search cap).
struct PropertyValues {
  std::function<std::optional<long>(int k, int n)> d;  // d(k, n)
  std::function<std::optional<long>(int k, int n)> m;  // m(k, n)
  std::function<std::optional<long>(int k)> m_limit;   // m(k), any vertex count
};

// Accessors backed by the exhaustive searches with the given edge cap. m(k)
// is exact whenever it is at most the cap: a minimum hypergraph without
// Property B has no degree-one vertex, so it fits on floor(k*cap/2) vertices.
PropertyValues searched_property_values(int q_cap = 10);

struct FormulaBound {
  std::string name;
  std::optional<Rational> value;  // empty when an input value is missing
  bool conditions_met = true;     // parity and size conditions of the statement
  bool requires_large_n = false;  // only claimed beyond an unspecified n
  std::string note;

  // Whether the bound is a hard claim at this (k, n).
  bool asserted() const { return value && conditions_met && !requires_large_n; }
};

// Counting-model lower bound for the parity case of (k, n).
//   k even, n even: 2n/(k+1), claimed for n >= k+2
//   k even, n odd:  (2n-1)/(k+1), large n
//   k odd,  n even: ceil(n/k * d(k-1, n-1)), large n
//   k odd,  n odd:  ceil((n-1)/(2k) * d(k-1, n-1)), large n
FormulaBound lb_cm(int k, int n, const PropertyValues& values);

// (n(5ik - k + i + i^2) - 2(k - i)) / ((2k + 3 + i) i k), for even k and
// k/2 < i < k. Throws InvalidParameters outside that range.
Rational lb_cm_improved(int k, int n, int i);

struct BestI {
  int i = 0;
  Rational value;
};
// Largest lb_cm_improved over the admissible i; ties go to the smaller i.
BestI optimize_i(int k, int n);

// f(n, k) * m(k-1) for GM and for BM with n even; f(n, k) * m(k-2) for BM
// with n odd, where f(n, k) = n/k (n even) or (n-1)/(2k) (n odd). Large n.
FormulaBound lb_gm_bm(ModelId model, int k, int n, const PropertyValues& values);

struct LemmaCheck {
  std::string name;
  bool applicable = true;
  bool requires_large_n = false;
  std::optional<bool> holds;  // empty when an input value is missing
  std::string detail;
};

struct DegreeReport {
  std::vector<int> degrees;
  std::vector<VertexSet> components;
  std::vector<LemmaCheck> checks;

  // Every applicable check without a large-n proviso holds.
  bool hard_checks_hold() const;
};

// Necessary conditions on sufficient query sets, evaluated on `queries`.
DegreeReport check_degree_lemmas(ModelId model, const Hypergraph& queries,
                                 const PropertyValues& values);

// Structure of the queries holding at least i+1 balls of degree <= 2, with
// the balls of degree > 2 removed (a multi-hypergraph). For a sufficient
// query set with even k these trimmed edges form a linear hypergraph, have
// no linear cycle covering at most n/2 + 3 balls, and their total size
// stays within 2k + (i+1)n/i.
struct SparseStructureReport {
  int i = 0;
  std::vector<int> selected;  // indices of the queries kept
  Hypergraph trimmed;
  bool linear = true;
  std::vector<LinearCycle> cycles;
  int short_cycles = 0;  // cycles covering at most n/2 + 3 balls
  int total_size = 0;
  Rational size_cap;
  bool within_cap = true;
};

SparseStructureReport check_sparse_structure(const Hypergraph& queries, int i);

struct BoundRow {
  enum class Kind { Lower, Upper };
  Kind kind = Kind::Lower;
  FormulaBound bound;
};

struct BoundReport {
  ModelId model = ModelId::OM;
  int k = 0;
  int n = 0;
  std::vector<BoundRow> rows;
  bool exact_attempted = false;
  std::optional<int> exact;  // empty with exact_attempted: no sufficient set, or budget hit
  std::string exact_note;

  // Broken asserted inequalities lower <= exact <= upper; empty when consistent.
  std::vector<std::string> violations() const;
};

struct ReportOptions {
  bool run_exact = true;
  ExactOptions exact;
  int property_cap = 10;
};

BoundReport bounds_report(ModelId model, int k, int n, const ReportOptions& options = {});

}  // namespace majority
