#include "majority/verifier.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>

#include "majority/canonical.hpp"
#include "majority/errors.hpp"

namespace majority {

namespace {

using Words = std::vector<std::uint64_t>;
using WordsHash = CanonicalFormHash;

Words words_of(ModelId model, const Hypergraph& queries, std::uint64_t blue) {
  Words w(queries.size());
  for (int t = 0; t < queries.size(); ++t) w[t] = answer_word(model, queries[t], blue);
  return w;
}

void require_deterministic(ModelId model) {
  if (!is_deterministic(model))
    throw InvalidParameters("BM is verified by verify_bm, not verify_deterministic");
}

void require_cap(int n, int cap) {
  if (n > cap)
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the coloring cap " +
                        std::to_string(cap));
}

// Picks colorings from `members` whose valid outputs have empty common
// intersection, preferring a pair.
std::vector<Coloring> confusing_subset(int n, const std::vector<std::uint64_t>& members) {
  const Coloring first{n, VertexSet(members.front())};
  const OutputSet base = valid_outputs(first);
  for (std::uint64_t c : members) {
    const Coloring other{n, VertexSet(c)};
    if ((base & valid_outputs(other)).empty()) return {first, other};
  }
  std::vector<Coloring> picked{first};
  OutputSet common = base;
  for (std::uint64_t c : members) {
    const Coloring other{n, VertexSet(c)};
    const OutputSet next = common & valid_outputs(other);
    if (next == common) continue;
    picked.push_back(other);
    common = next;
    if (common.empty()) break;
  }
  return picked;
}

struct ClassScan {
  struct Class {
    OutputSet common;
    std::uint64_t first = 0;
  };
  std::unordered_map<Words, Class, WordsHash> classes;
  std::vector<const Words*> order;  // by least coloring
};

// Returns false as soon as a class loses every output when `stop_early`.
bool scan_classes(ModelId model, const Hypergraph& queries, ClassScan& scan, bool stop_early) {
  const int n = queries.n();
  const std::uint64_t total = std::uint64_t{1} << n;
  bool ok = true;
  for (std::uint64_t c = 0; c < total; ++c) {
    Words key = words_of(model, queries, c);
    const OutputSet valid = valid_outputs(Coloring{n, VertexSet(c)});
    auto [it, inserted] = scan.classes.try_emplace(std::move(key), ClassScan::Class{valid, c});
    if (inserted) {
      scan.order.push_back(&it->first);
    } else {
      it->second.common = it->second.common & valid;
    }
    if (it->second.common.empty()) {
      ok = false;
      if (stop_early) return false;
    }
  }
  return ok;
}

// ---------------------------------------------------------------- BM search

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept { return CanonicalFormHash{}(b); }
};

bool subset_of(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool none(const Bits& a) {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t w) { return w == 0; });
}

Bits intersect(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}

class BmSearch {
 public:
  BmSearch(const Hypergraph& queries, const VerifyOptions& options)
      : queries_(queries), n_(queries.n()), options_(options) {
    const std::uint64_t total = std::uint64_t{1} << n_;
    words_ = static_cast<std::size_t>((total + 63) / 64);
    tie_.assign(words_, 0);
    majority_.assign(n_, Bits(words_, 0));
    for (std::uint64_t c = 0; c < total; ++c) {
      const OutputSet valid = valid_outputs(Coloring{n_, VertexSet(c)});
      if (valid.no_majority) set(tie_, c);
      for (int b : valid.balls) set(majority_[b], c);
    }
    mono_.reserve(queries.size());
    for (const VertexSet& q : queries.edges()) {
      Bits m(words_, 0);
      for (std::uint64_t c = 0; c < total; ++c)
        if (answer_word(ModelId::GM, q, c) == 0) set(m, c);
      mono_.push_back(std::move(m));
    }
    differ_.assign(n_ * n_, {});
  }

  // Returns true when sufficient; otherwise fills the witness.
  bool run(Certificate& cert, FailureWitness& witness) {
    Bits all(words_, ~std::uint64_t{0});
    const std::uint64_t total = std::uint64_t{1} << n_;
    if (total % 64 != 0) all.back() = (std::uint64_t{1} << (total % 64)) - 1;
    std::vector<BmAnswer> path;
    const int root = visit(0, all, path);
    if (root >= 0) {
      cert.nodes = std::move(nodes_);
      return true;
    }
    witness.answers.model = ModelId::BM;
    for (const BmAnswer& a : failure_path_) witness.answers.answers.emplace_back(a);
    std::vector<std::uint64_t> members;
    for (std::size_t w = 0; w < failure_set_.size(); ++w)
      for (std::uint64_t bits = failure_set_[w]; bits; bits &= bits - 1)
        members.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
    witness.colorings = confusing_subset(n_, members);
    return false;
  }

 private:
  static void set(Bits& b, std::uint64_t c) { b[c / 64] |= std::uint64_t{1} << (c % 64); }

  const Bits& differ(int x, int y) {
    Bits& d = differ_[x * n_ + y];
    if (d.empty()) {
      d.assign(words_, 0);
      const std::uint64_t total = std::uint64_t{1} << n_;
      for (std::uint64_t c = 0; c < total; ++c)
        if (((c >> x) & 1U) != ((c >> y) & 1U)) set(d, c);
    }
    return d;
  }

  std::optional<Output> common_output(const Bits& s) const {
    if (subset_of(s, tie_)) return Output::no_majority();
    for (int b = 0; b < n_; ++b)
      if (subset_of(s, majority_[b])) return Output::ball(b);
    return std::nullopt;
  }

  // Node id, or -1 once a failing answer vector has been found.
  int visit(int depth, const Bits& s, std::vector<BmAnswer>& path) {
    const std::size_t key = BitsHash{}(s) ^ (static_cast<std::size_t>(depth) * 0x9e3779b97f4a7c15ULL);
    if (auto it = memo_.find(key); it != memo_.end())
      for (const auto& [bits, id] : it->second)
        if (bits == s) return id;

    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(BmNode{depth, std::nullopt, {}});
    if (auto out = common_output(s)) {
      nodes_[id].output = *out;
      remember(key, s, id);
      return id;
    }
    if (depth == queries_.size()) {
      failure_path_ = path;
      failure_set_ = s;
      return -1;
    }

    const VertexSet q = queries_[depth];
    std::vector<std::pair<BmAnswer, Bits>> options;
    options.emplace_back(BmAnswer{false, -1, -1}, intersect(s, mono_[depth]));
    for (int x : q)
      for (int y : q)
        if (x < y) options.emplace_back(BmAnswer{true, x, y}, intersect(s, differ(x, y)));

    std::vector<std::pair<Bits, int>> done;  // distinct child sets already visited
    for (auto& [ans, child] : options) {
      if (none(child)) continue;
      int child_id = -1;
      for (const auto& [bits, cid] : done)
        if (bits == child) child_id = cid;
      if (child_id < 0) {
        path.push_back(ans);
        child_id = visit(depth + 1, child, path);
        path.pop_back();
        if (child_id < 0) return -1;
        done.emplace_back(child, child_id);
      }
      nodes_[id].children.emplace_back(ans, child_id);
    }
    remember(key, s, id);
    return id;
  }

  void remember(std::size_t key, const Bits& s, int id) {
    if (memo_size_ >= options_.memo_cap) return;
    memo_[key].emplace_back(s, id);
    ++memo_size_;
  }

  const Hypergraph& queries_;
  int n_;
  VerifyOptions options_;
  std::size_t words_ = 0;
  Bits tie_;
  std::vector<Bits> majority_;
  std::vector<Bits> mono_;
  std::vector<Bits> differ_;
  std::vector<BmNode> nodes_;
  std::unordered_map<std::size_t, std::vector<std::pair<Bits, int>>> memo_;
  std::size_t memo_size_ = 0;
  std::vector<BmAnswer> failure_path_;
  Bits failure_set_;
};

bool replay_bm_node(const Certificate& cert, const Coloring& c, int id,
                    std::vector<char>& seen, const OutputSet& valid) {
  if (seen[id]) return true;
  seen[id] = 1;
  const BmNode& node = cert.nodes[id];
  if (node.output) return valid.contains(*node.output);
  if (node.depth >= cert.queries.size()) return false;
  const VertexSet q = cert.queries[node.depth];
  for (const Answer& a : bm_answers(q, c)) {
    const auto& bm = std::get<BmAnswer>(a);
    auto it = std::find_if(node.children.begin(), node.children.end(),
                           [&](const auto& edge) { return edge.first == bm; });
    if (it == node.children.end()) return false;
    if (it->second < 0 || it->second >= static_cast<int>(cert.nodes.size())) return false;
    if (!replay_bm_node(cert, c, it->second, seen, valid)) return false;
  }
  return true;
}

}  // namespace

Output Certificate::lookup(const AnswerVector& answers) const {
  if (static_cast<int>(answers.answers.size()) != queries.size())
    throw InvalidParameters("answer vector length does not match the query count");
  if (model == ModelId::BM) {
    int id = 0;
    while (!nodes.at(id).output) {
      const BmNode& node = nodes[id];
      const auto* bm = std::get_if<BmAnswer>(&answers.answers[node.depth]);
      if (!bm) throw InvalidParameters("expected BM answers");
      auto it = std::find_if(node.children.begin(), node.children.end(),
                             [&](const auto& edge) { return edge.first == *bm; });
      if (it == node.children.end())
        throw NoConsistentColoring("answer vector is not achievable");
      id = it->second;
    }
    return *nodes[id].output;
  }
  Words key(queries.size());
  for (int t = 0; t < queries.size(); ++t) key[t] = word_from_answer(answers.answers[t], queries[t]);
  auto it = table.find(key);
  if (it == table.end()) throw NoConsistentColoring("answer vector is not achievable");
  return it->second;
}

Verdict verify_deterministic(ModelId model, const Hypergraph& queries,
                             const VerifyOptions& options) {
  require_deterministic(model);
  require_cap(queries.n(), options.max_n_deterministic);
  ClassScan scan;
  scan_classes(model, queries, scan, false);
  for (const Words* key : scan.order) {
    const auto& cls = scan.classes.at(*key);
    if (!cls.common.empty()) continue;
    std::vector<std::uint64_t> members;
    const std::uint64_t total = std::uint64_t{1} << queries.n();
    for (std::uint64_t c = cls.first; c < total; ++c)
      if (words_of(model, queries, c) == *key) members.push_back(c);
    FailureWitness w{model, queries, {}, confusing_subset(queries.n(), members)};
    w.answers = answer_vector(model, queries, w.colorings.front());
    return w;
  }
  Certificate cert{model, queries, {}, {}};
  for (const auto& [key, cls] : scan.classes) cert.table.emplace(key, cls.common.least());
  return cert;
}

Verdict verify_bm(const Hypergraph& queries, const VerifyOptions& options) {
  require_cap(queries.n(), options.max_n_bm);
  Certificate cert{ModelId::BM, queries, {}, {}};
  FailureWitness witness{ModelId::BM, queries, {}, {}};
  BmSearch search(queries, options);
  if (search.run(cert, witness)) return cert;
  return witness;
}

Verdict verify(ModelId model, const Hypergraph& queries, const VerifyOptions& options) {
  return model == ModelId::BM ? verify_bm(queries, options)
                              : verify_deterministic(model, queries, options);
}

bool is_sufficient(ModelId model, const Hypergraph& queries, const VerifyOptions& options) {
  if (model == ModelId::BM) return is_certificate(verify_bm(queries, options));
  require_cap(queries.n(), options.max_n_deterministic);
  ClassScan scan;
  return scan_classes(model, queries, scan, true);
}

bool naive_sufficient(ModelId model, const Hypergraph& queries) {
  require_deterministic(model);
  const int n = queries.n();
  require_cap(n, 16);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<AnswerVector> vectors;
  vectors.reserve(total);
  for (std::uint64_t c = 0; c < total; ++c)
    vectors.push_back(answer_vector(model, queries, Coloring{n, VertexSet(c)}));
  for (std::uint64_t c = 0; c < total; ++c) {
    OutputSet common = valid_outputs(Coloring{n, VertexSet(c)});
    for (std::uint64_t d = 0; d < total; ++d)
      if (vectors[d] == vectors[c]) common = common & valid_outputs(Coloring{n, VertexSet(d)});
    if (common.empty()) return false;
  }
  return true;
}

bool cross_check_class_verifier(ModelId model, const Hypergraph& queries) {
  return naive_sufficient(model, queries) == is_certificate(verify_deterministic(model, queries));
}

std::vector<RandomQuerySet> random_query_sets(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const auto pick = [&rng](int lo, int hi) {  // uniform enough on tiny ranges
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  constexpr ModelId kModels[] = {ModelId::OM, ModelId::CM, ModelId::GM};
  std::vector<RandomQuerySet> sets;
  for (int c = 0; c < count; ++c) {
    const ModelId model = kModels[pick(0, 2)];
    const int k = pick(2, 4);
    const int n = pick(k, 10);
    const auto pool = k_subsets(n, k);
    const int q = pick(1, std::min<int>(6, static_cast<int>(pool.size())));
    std::vector<VertexSet> chosen;
    while (static_cast<int>(chosen.size()) < q) {
      const VertexSet e = pool[pick(0, static_cast<int>(pool.size()) - 1)];
      if (std::find(chosen.begin(), chosen.end(), e) == chosen.end()) chosen.push_back(e);
    }
    sets.push_back({model, Hypergraph(n, std::move(chosen), k)});
  }
  return sets;
}

bool replay(const Certificate& cert) {
  const int n = cert.queries.n();
  const std::uint64_t total = std::uint64_t{1} << n;
  if (cert.model == ModelId::BM) {
    if (cert.nodes.empty()) return false;
    for (std::uint64_t c = 0; c < total; ++c) {
      const Coloring col{n, VertexSet(c)};
      std::vector<char> seen(cert.nodes.size(), 0);
      if (!replay_bm_node(cert, col, 0, seen, valid_outputs(col))) return false;
    }
    return true;
  }
  for (std::uint64_t c = 0; c < total; ++c) {
    const Coloring col{n, VertexSet(c)};
    auto it = cert.table.find(words_of(cert.model, cert.queries, c));
    if (it == cert.table.end() || !valid_outputs(col).contains(it->second)) return false;
  }
  return true;
}

bool replay(const FailureWitness& witness) {
  const auto& qs = witness.queries;
  if (static_cast<int>(witness.answers.answers.size()) != qs.size()) return false;
  if (witness.colorings.empty()) return false;
  OutputSet common{VertexSet::all(qs.n()), true};
  for (const Coloring& c : witness.colorings) {
    if (c.n != qs.n()) return false;
    for (int t = 0; t < qs.size(); ++t) {
      const Answer& a = witness.answers.answers[t];
      if (model_of(a) != witness.model || !permits(a, qs[t], c)) return false;
    }
    common = common & valid_outputs(c);
  }
  return common.empty();
}

std::optional<Coloring> find_consistent_coloring(const Hypergraph& queries,
                                                 const AnswerVector& answers) {
  const int n = queries.n();
  if (static_cast<int>(answers.answers.size()) != queries.size())
    throw InvalidParameters("answer vector length does not match the query count");
  std::vector<std::vector<int>> closing(n);  // queries whose largest ball is v
  for (int t = 0; t < queries.size(); ++t) closing[queries[t].max()].push_back(t);
  VertexSet blue;
  auto descend = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int color = 0; color < (v == 0 ? 1 : 2); ++color) {
      if (color == 1) blue.insert(v);
      const Coloring partial{n, blue};
      const bool ok = std::all_of(closing[v].begin(), closing[v].end(), [&](int t) {
        return permits(answers.answers[t], queries[t], partial);
      });
      if (ok && self(self, v + 1)) return true;
      if (color == 1) blue.erase(v);
    }
    return false;
  };
  if (n > 0 && descend(descend, 0)) return Coloring{n, blue};
  if (n == 0 && queries.size() == 0) return Coloring{0, {}};
  return std::nullopt;
}

}  // namespace majority
