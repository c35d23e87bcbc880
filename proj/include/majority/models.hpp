#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "majority/hypergraph.hpp"

namespace majority {

enum class ModelId { OM, CM, GM, BM };

std::string_view to_string(ModelId model);
// Accepts "om"/"OM" etc.; throws InvalidParameters otherwise.
ModelId parse_model(std::string_view text);
inline bool is_deterministic(ModelId m) { return m != ModelId::BM; }

// Color-anonymous split of the query. `first` is the side holding the least
// ball of the query; `second` may be empty.
struct OmAnswer {
  VertexSet first;
  VertexSet second;
  bool operator==(const OmAnswer&) const = default;
};
// Size of the smaller color class inside the query.
struct CmAnswer {
  int count = 0;
  bool operator==(const CmAnswer&) const = default;
};
// yes iff the query holds both colors.
struct GmAnswer {
  bool yes = false;
  bool operator==(const GmAnswer&) const = default;
};
// As GmAnswer, and a yes names one bichromatic pair x < y.
struct BmAnswer {
  bool yes = false;
  int x = -1;
  int y = -1;
  bool operator==(const BmAnswer&) const = default;
};

using Answer = std::variant<OmAnswer, CmAnswer, GmAnswer, BmAnswer>;

ModelId model_of(const Answer& a);

struct AnswerVector {
  ModelId model = ModelId::OM;
  std::vector<Answer> answers;
  bool operator==(const AnswerVector&) const = default;
};

class Output {
 public:
  static Output ball(int i) { return Output{i}; }
  static Output no_majority() { return Output{-1}; }

  bool is_ball() const { return ball_ >= 0; }
  bool is_no_majority() const { return ball_ < 0; }
  int ball_index() const { return ball_; }
  std::string to_string() const;

  bool operator==(const Output&) const = default;

 private:
  explicit Output(int b) : ball_(b) {}
  int ball_ = -1;
};

// A set of Outputs: some balls plus optionally NoMajority.
struct OutputSet {
  VertexSet balls;
  bool no_majority = false;

  bool empty() const { return balls.empty() && !no_majority; }
  bool contains(const Output& o) const {
    return o.is_ball() ? balls.contains(o.ball_index()) : no_majority;
  }
  OutputSet operator&(const OutputSet& o) const {
    return {balls & o.balls, no_majority && o.no_majority};
  }
  // NoMajority if present, else the least ball. Precondition: !empty().
  Output least() const;
  std::vector<Output> members() const;
  bool operator==(const OutputSet&) const = default;
};

// The balls of a strict majority class, or {NoMajority} on a tie.
OutputSet valid_outputs(const Coloring& c);

// Deterministic answer of OM, CM or GM; BM throws InvalidParameters.
Answer answer(ModelId model, VertexSet query, const Coloring& c);

// Every answer the BM adversary may give to `query` under c.
std::vector<Answer> bm_answers(VertexSet query, const Coloring& c);

// Whether `a` is an answer c can produce for `query` (any model).
bool permits(const Answer& a, VertexSet query, const Coloring& c);

// Element-wise answers over all queries. BM throws InvalidParameters.
AnswerVector answer_vector(ModelId model, const Hypergraph& queries, const Coloring& c);

// Compact per-query answer words used by the scanners. For OM the word is
// the side not holding the least ball, for CM the count, for GM 0/1.
std::uint64_t answer_word(ModelId model, VertexSet query, std::uint64_t blue_bits);
Answer answer_from_word(ModelId model, VertexSet query, std::uint64_t word);
std::uint64_t word_from_answer(const Answer& a, VertexSet query);

}  // namespace majority
