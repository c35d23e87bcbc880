#include "majority/models.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "majority/errors.hpp"

namespace majority {

std::string_view to_string(ModelId model) {
  switch (model) {
    case ModelId::OM: return "OM";
    case ModelId::CM: return "CM";
    case ModelId::GM: return "GM";
    case ModelId::BM: return "BM";
  }
  return "?";
}

ModelId parse_model(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  if (upper == "OM") return ModelId::OM;
  if (upper == "CM") return ModelId::CM;
  if (upper == "GM") return ModelId::GM;
  if (upper == "BM") return ModelId::BM;
  throw InvalidParameters("unknown model '" + std::string(text) + "' (expected om, cm, gm or bm)");
}

ModelId model_of(const Answer& a) { return static_cast<ModelId>(a.index()); }

std::string Output::to_string() const {
  return is_ball() ? "Ball(" + std::to_string(ball_) + ")" : "NoMajority";
}

Output OutputSet::least() const {
  if (no_majority) return Output::no_majority();
  return Output::ball(balls.min());
}

std::vector<Output> OutputSet::members() const {
  std::vector<Output> out;
  for (int b : balls) out.push_back(Output::ball(b));
  if (no_majority) out.push_back(Output::no_majority());
  return out;
}

OutputSet valid_outputs(const Coloring& c) {
  const int blue = c.blue.size();
  const int red = c.n - blue;
  if (2 * blue > c.n) return {c.blue, false};
  if (2 * red > c.n) return {c.red(), false};
  return {{}, true};
}

std::uint64_t answer_word(ModelId model, VertexSet query, std::uint64_t blue_bits) {
  const std::uint64_t q = query.bits();
  const std::uint64_t in_blue = q & blue_bits;
  switch (model) {
    case ModelId::OM: {
      const std::uint64_t low = q & (~q + 1);
      return (in_blue & low) ? (q & ~blue_bits) : in_blue;
    }
    case ModelId::CM: {
      const int b = std::popcount(in_blue);
      return static_cast<std::uint64_t>(std::min(b, query.size() - b));
    }
    case ModelId::GM:
    case ModelId::BM:
      return (in_blue != 0 && in_blue != q) ? 1 : 0;
  }
  return 0;
}

Answer answer_from_word(ModelId model, VertexSet query, std::uint64_t word) {
  switch (model) {
    case ModelId::OM: {
      const VertexSet second(word);
      return OmAnswer{query - second, second};
    }
    case ModelId::CM: return CmAnswer{static_cast<int>(word)};
    case ModelId::GM: return GmAnswer{word != 0};
    case ModelId::BM: break;
  }
  throw InvalidParameters("BM answers are not determined by a single word");
}

std::uint64_t word_from_answer(const Answer& a, VertexSet query) {
  return std::visit(
      [&](const auto& ans) -> std::uint64_t {
        using T = std::decay_t<decltype(ans)>;
        if constexpr (std::is_same_v<T, OmAnswer>) {
          if (!(ans.first | ans.second).subset_of(query) || ans.first.intersects(ans.second) ||
              (ans.first | ans.second) != query || !ans.first.contains(query.min()))
            throw InvalidParameters("OM answer is not a canonical partition of its query");
          return ans.second.bits();
        } else if constexpr (std::is_same_v<T, CmAnswer>) {
          return static_cast<std::uint64_t>(ans.count);
        } else if constexpr (std::is_same_v<T, GmAnswer>) {
          return ans.yes ? 1 : 0;
        } else {
          throw InvalidParameters("BM answers are not determined by a single word");
        }
      },
      a);
}

Answer answer(ModelId model, VertexSet query, const Coloring& c) {
  if (model == ModelId::BM)
    throw InvalidParameters("BM answers are adversarial; use bm_answers()");
  return answer_from_word(model, query, answer_word(model, query, c.blue.bits()));
}

std::vector<Answer> bm_answers(VertexSet query, const Coloring& c) {
  const VertexSet blue = query & c.blue;
  const VertexSet red = query - c.blue;
  if (blue.empty() || red.empty()) return {BmAnswer{false, -1, -1}};
  std::vector<Answer> out;
  for (int x : query)
    for (int y : query)
      if (x < y && blue.contains(x) != blue.contains(y)) out.push_back(BmAnswer{true, x, y});
  return out;
}

bool permits(const Answer& a, VertexSet query, const Coloring& c) {
  const ModelId model = model_of(a);
  if (model != ModelId::BM) return answer(model, query, c) == a;
  const auto& bm = std::get<BmAnswer>(a);
  const bool mono = answer_word(ModelId::GM, query, c.blue.bits()) == 0;
  if (!bm.yes) return mono;
  if (mono || !query.contains(bm.x) || !query.contains(bm.y)) return false;
  return c.is_blue(bm.x) != c.is_blue(bm.y);
}

AnswerVector answer_vector(ModelId model, const Hypergraph& queries, const Coloring& c) {
  if (model == ModelId::BM)
    throw InvalidParameters("BM answers are adversarial; no single answer vector exists");
  AnswerVector av{model, {}};
  av.answers.reserve(queries.size());
  for (const VertexSet& q : queries.edges()) av.answers.push_back(answer(model, q, c));
  return av;
}

}  // namespace majority
