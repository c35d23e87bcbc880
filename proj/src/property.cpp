#include "majority/property.hpp"

#include <algorithm>
#include <numeric>

#include "majority/errors.hpp"

namespace majority {

bool is_monochromatic(VertexSet edge, const Coloring& c) {
  const int blue = (edge & c.blue).size();
  return blue == 0 || blue == edge.size();
}

bool is_balanced(VertexSet edge, const Coloring& c) {
  const int blue = (edge & c.blue).size();
  const int red = edge.size() - blue;
  return blue - red <= 1 && red - blue <= 1;
}

namespace {

enum class Rule { NoMonochromatic, Balanced };

// Backtracking over vertices in degree-descending order. Each edge carries
// its running blue/red counts; an assignment is rejected as soon as one
// incident edge can no longer satisfy the rule.
class ColoringSearch {
 public:
  ColoringSearch(const Hypergraph& h, Rule rule) : h_(h), rule_(rule) {
    const auto deg = h.degrees();
    for (int v = 0; v < h.n(); ++v)
      if (deg[v] > 0) order_.push_back(v);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return deg[a] > deg[b]; });
    incident_.resize(h.n());
    for (int i = 0; i < h.size(); ++i)
      for (int v : h[i]) incident_[v].push_back(i);
    blue_.assign(h.size(), 0);
    red_.assign(h.size(), 0);
    left_.resize(h.size());
    for (int i = 0; i < h.size(); ++i) left_[i] = h[i].size();
  }

  PropertyWitness run() {
    if (order_.empty()) return {true, Coloring{h_.n(), {}}};
    // swap symmetry: the first vertex is red
    if (descend(0)) return {true, Coloring{h_.n(), blue_set_}};
    return {false, std::nullopt};
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    const int colors = depth == 0 ? 1 : 2;
    for (int color = 0; color < colors; ++color) {
      if (assign(v, color == 1) && descend(depth + 1)) return true;
      unassign(v, color == 1);
    }
    return false;
  }

  // Applies the assignment and reports whether every incident edge is still
  // satisfiable. The caller always undoes it with unassign().
  bool assign(int v, bool blue) {
    if (blue) blue_set_.insert(v);
    bool ok = true;
    for (int e : incident_[v]) {
      (blue ? blue_[e] : red_[e])++;
      --left_[e];
      if (!feasible(e)) ok = false;
    }
    return ok;
  }

  void unassign(int v, bool blue) {
    if (blue) blue_set_.erase(v);
    for (int e : incident_[v]) {
      (blue ? blue_[e] : red_[e])--;
      ++left_[e];
    }
  }

  bool feasible(int e) const {
    if (rule_ == Rule::NoMonochromatic) return left_[e] > 0 || (blue_[e] > 0 && red_[e] > 0);
    const int cap = (h_[e].size() + 1) / 2;
    return blue_[e] <= cap && red_[e] <= cap;
  }

  const Hypergraph& h_;
  Rule rule_;
  std::vector<int> order_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> blue_, red_, left_;
  VertexSet blue_set_;
};

}  // namespace

PropertyWitness has_property_b(const Hypergraph& h) {
  return ColoringSearch(h, Rule::NoMonochromatic).run();
}

PropertyWitness has_property_c(const Hypergraph& h) {
  for (const VertexSet& e : h.edges())
    if (e.size() < 2) throw InvalidParameters("Property C needs edges of size >= 2");
  return ColoringSearch(h, Rule::Balanced).run();
}

namespace {

template <typename Pred>
bool naive_colorable(const Hypergraph& h, Pred edge_ok) {
  if (h.n() > 26) throw InvalidParameters("naive property check is limited to n <= 26");
  const std::uint64_t total = std::uint64_t{1} << h.n();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const Coloring c{h.n(), VertexSet(bits)};
    if (std::all_of(h.edges().begin(), h.edges().end(),
                    [&](VertexSet e) { return edge_ok(e, c); }))
      return true;
  }
  return false;
}

}  // namespace

bool naive_property_b(const Hypergraph& h) {
  return naive_colorable(h, [](VertexSet e, const Coloring& c) { return !is_monochromatic(e, c); });
}

bool naive_property_c(const Hypergraph& h) {
  return naive_colorable(h, [](VertexSet e, const Coloring& c) { return is_balanced(e, c); });
}

}  // namespace majority
