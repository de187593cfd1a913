#include "sepcert/stallings.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace sepcert {

void validate_word(const Word& w, const FreeFactor& free, const FiniteGroupTable& finite) {
  for (const Letter& l : w) {
    const int limit = l.factor == Factor::X ? free.rank : finite.generator_count();
    if (l.index < 1 || l.index > limit || (l.sign != 1 && l.sign != -1))
      throw Error("word uses undeclared generator " + to_string(l));
  }
}

void ProblemSpec::validate() const {
  FreeFactor::of_rank(free.rank);
  for (const Word& w : subgroup_words) validate_word(w, free, finite);
  for (const Word& w : separate_words) validate_word(w, free, finite);
}

namespace {

/// Pairs of vertices inside Y-components that represent the same coset.
std::vector<std::pair<Vertex, Vertex>> coset_collisions(const LabeledGraph& g, const FiniteGroupTable& finite) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Component& c : components(g, Factor::Y)) {
    auto [labels, loops] = y_path_labels(finite, c.graph);
    const SubgroupOfG k = subgroup_closure(finite, loops);
    std::map<Element, Vertex> first_at;
    for (Vertex local = 0; local < labels.size(); ++local) {
      Element key = labels[local];
      for (Element h : k.elements) key = std::min(key, finite.multiply(h, labels[local]));
      auto [it, fresh] = first_at.emplace(key, c.vertices[local]);
      if (!fresh) out.emplace_back(it->second, c.vertices[local]);
    }
  }
  return out;
}

Vertex append_path(std::vector<Edge>& edges, std::size_t& vertex_count, Vertex from, const Word& w,
                   std::optional<Vertex> to) {
  Vertex current = from;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Vertex next;
    if (i + 1 == w.size() && to) {
      next = *to;
    } else {
      next = vertex_count++;
    }
    edges.push_back({current, next, w[i]});
    current = next;
  }
  return current;
}

}  // namespace

BasedQuotient based_quotient(const LabeledGraph& g, const FiniteGroupTable& finite) {
  Folding f = fold(g);
  BasedQuotient out{std::move(f.graph), std::move(f.vertex_map), 0};
  while (true) {
    auto pairs = coset_collisions(out.graph, finite);
    if (pairs.empty()) break;
    const std::size_t before = out.graph.vertex_count();
    Folding next = fold_identifying(out.graph, pairs);
    assert(next.graph.vertex_count() < before);
    if (next.graph.vertex_count() >= before) throw Error("coset identification did not shrink the graph");
    for (Vertex& v : out.vertex_map) v = next.vertex_map[v];
    out.graph = std::move(next.graph);
    ++out.rounds;
  }
  return out;
}

Gamma build_gamma(const ProblemSpec& spec) {
  spec.validate();
  std::vector<Edge> edges;
  std::size_t vertex_count = 1;
  for (const Word& h : spec.subgroup_words) append_path(edges, vertex_count, 0, h, Vertex{0});
  std::vector<Vertex> endpoints;
  for (const Word& g : spec.separate_words) endpoints.push_back(append_path(edges, vertex_count, 0, g, std::nullopt));
  BasedQuotient q = based_quotient(LabeledGraph(vertex_count, std::move(edges), 0), spec.finite);
  Gamma out{std::move(q.graph), {}, q.rounds};
  for (Vertex v : endpoints) out.separator_endpoints.push_back(q.vertex_map[v]);
  return out;
}

bool subgroup_contains(const LabeledGraph& gamma, const FiniteGroupTable& finite, const Word& w) {
  TraceResult direct = trace(gamma, gamma.base(), w);
  if (direct.complete()) return direct.closed();
  std::vector<Edge> edges(gamma.edges().begin(), gamma.edges().end());
  std::size_t vertex_count = gamma.vertex_count();
  const Vertex end = append_path(edges, vertex_count, gamma.base(), w, std::nullopt);
  BasedQuotient q = based_quotient(LabeledGraph(vertex_count, std::move(edges), gamma.base()), finite);
  return q.vertex_map[end] == q.graph.base();
}

bool membership(const ProblemSpec& spec, const Word& w) {
  ProblemSpec copy = spec;
  copy.separate_words = {w};
  Gamma g = build_gamma(copy);
  return g.separator_endpoints.front() == g.graph.base();
}

SubgroupGraph::SubgroupGraph(const ProblemSpec& spec) : finite_(spec.finite) {
  ProblemSpec copy = spec;
  copy.separate_words.clear();
  gamma_ = build_gamma(copy).graph;
}

SubgroupGraph::SubgroupGraph(LabeledGraph gamma, FiniteGroupTable finite)
    : gamma_(std::move(gamma)), finite_(std::move(finite)) {}

const char* to_string(HypothesisVerdict::Kind k) {
  switch (k) {
    case HypothesisVerdict::Kind::Hypothesis1: return "Hypothesis1";
    case HypothesisVerdict::Kind::Hypothesis2: return "Hypothesis2";
    case HypothesisVerdict::Kind::NotApplicable: break;
  }
  return "NotApplicable";
}

HypothesisVerdict hypothesis_check(const LabeledGraph& gamma, int rank) {
  const auto xs = components(gamma, Factor::X);
  const auto letters = alphabet(Factor::X, rank);
  bool all_trees = true;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i].is_tree()) continue;
    all_trees = false;
    if (!saturation_defects(xs[i].graph, letters).empty())
      return {HypothesisVerdict::Kind::Hypothesis2, i, "X-component " + std::to_string(i) + " is not a cover"};
  }
  if (all_trees) return {HypothesisVerdict::Kind::Hypothesis1, std::nullopt, "every X-component is a tree"};
  return {HypothesisVerdict::Kind::NotApplicable, std::nullopt,
          "every non-tree X-component is a finite cover of F_r"};
}

}  // namespace sepcert
