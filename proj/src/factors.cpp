#include "sepcert/factors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace sepcert {

FreeFactor FreeFactor::of_rank(int r) {
  if (r < 2) throw Error("free factor rank must be at least 2, got " + std::to_string(r));
  return FreeFactor{r};
}

FiniteGroupTable::FiniteGroupTable() : FiniteGroupTable(enumerate(1, {})) {}

FiniteGroupTable FiniteGroupTable::enumerate(std::size_t degree, std::vector<Permutation> generators) {
  if (degree == 0) throw PermutationError("group degree must be positive");
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw PermutationError("generator degree differs from declared degree");

  FiniteGroupTable t{Empty{}};
  t.degree_ = degree;
  std::map<Permutation, Element> index;
  t.elements_.push_back(Permutation::identity(degree));
  index.emplace(t.elements_.front(), 0);
  for (std::size_t i = 0; i < t.elements_.size(); ++i) {
    for (const Permutation& g : generators) {
      Permutation next = t.elements_[i] * g;
      if (index.emplace(next, t.elements_.size()).second) t.elements_.push_back(std::move(next));
    }
  }
  for (const Permutation& g : generators) t.generator_map_.push_back(index.at(g));

  const std::size_t n = t.elements_.size();
  t.product_.resize(n * n);
  t.inverse_.resize(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      Element ab = index.at(t.elements_[a] * t.elements_[b]);
      t.product_[a * n + b] = ab;
      if (ab == 0) t.inverse_[a] = b;
    }
  }
  return t;
}

FiniteGroupTable FiniteGroupTable::from_multiplication_table(const std::vector<std::vector<std::size_t>>& table,
                                                             const std::vector<std::size_t>& generators) {
  const std::size_t n = table.size();
  if (n == 0) throw Error("empty multiplication table");
  std::vector<Permutation> perms;
  for (std::size_t g : generators) {
    if (g >= n) throw Error("generator is not a table element");
    std::vector<Point> images(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n || table[a][g] >= n) throw Error("malformed multiplication table");
      images[a] = static_cast<Point>(table[a][g]);
    }
    perms.emplace_back(std::move(images));
  }
  return enumerate(n, std::move(perms));
}

Element FiniteGroupTable::generator(int index) const {
  if (index < 1 || index > generator_count()) throw Error("unknown generator y" + std::to_string(index));
  return generator_map_[static_cast<std::size_t>(index - 1)];
}

Element FiniteGroupTable::letter(Letter l) const {
  if (l.factor != Factor::Y) throw Error("letter " + to_string(l) + " is not in G");
  Element g = generator(l.index);
  return l.positive() ? g : inverse(g);
}

Element FiniteGroupTable::evaluate(const Word& w) const {
  Element e = identity();
  for (const Letter& l : w) e = multiply(e, letter(l));
  return e;
}

std::optional<Element> FiniteGroupTable::index_of(const Permutation& p) const {
  for (Element e = 0; e < elements_.size(); ++e)
    if (elements_[e] == p) return e;
  return std::nullopt;
}

bool SubgroupOfG::contains(Element e) const { return std::binary_search(elements.begin(), elements.end(), e); }

SubgroupOfG subgroup_closure(const FiniteGroupTable& table, std::span<const Element> seeds) {
  std::vector<bool> in(table.order(), false);
  std::vector<Element> list{table.identity()};
  in[table.identity()] = true;
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element s : seeds) {
      Element next = table.multiply(list[i], s);
      if (!in[next]) {
        in[next] = true;
        list.push_back(next);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return SubgroupOfG{std::move(list)};
}

CosetGraph coset_graph(const FiniteGroupTable& table, const SubgroupOfG& k) {
  constexpr Vertex unassigned = static_cast<Vertex>(-1);
  CosetGraph out;
  out.coset_of.assign(table.order(), unassigned);
  std::vector<Element> representative;

  auto claim = [&](Element g) {
    const Vertex v = representative.size();
    for (Element h : k.elements) out.coset_of[table.multiply(h, g)] = v;
    representative.push_back(g);
  };
  claim(table.identity());
  const std::vector<Letter> letters = alphabet(Factor::Y, table.generator_count());
  for (std::size_t i = 0; i < representative.size(); ++i) {
    for (const Letter& l : letters) {
      Element next = table.multiply(representative[i], table.letter(l));
      if (out.coset_of[next] == unassigned) claim(next);
    }
  }

  std::vector<Edge> edges;
  for (Vertex v = 0; v < representative.size(); ++v)
    for (int j = 1; j <= table.generator_count(); ++j)
      edges.push_back({v, out.coset_of[table.multiply(representative[v], table.generator(j))], Letter::y(j)});
  out.graph = LabeledGraph(representative.size(), std::move(edges), 0);
  return out;
}

std::pair<std::vector<Element>, std::vector<Element>> y_path_labels(const FiniteGroupTable& table,
                                                                    const LabeledGraph& component) {
  constexpr Element unseen = static_cast<Element>(-1);
  std::vector<Element> labels(component.vertex_count(), unseen);
  labels[component.base()] = table.identity();
  std::deque<Vertex> queue{component.base()};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const Arc& a : component.arcs(v)) {
      if (a.label.factor != Factor::Y) throw GraphError("component has a non-Y edge");
      if (labels[a.target] != unseen) continue;
      labels[a.target] = table.multiply(labels[v], table.letter(a.label));
      queue.push_back(a.target);
    }
  }
  if (std::find(labels.begin(), labels.end(), unseen) != labels.end())
    throw GraphError("Y-component is not connected");

  std::vector<Element> loops;
  for (const Edge& e : component.edges()) {
    Element loop = table.multiply(table.multiply(labels[e.source], table.letter(e.label)), table.inverse(labels[e.target]));
    if (loop != table.identity()) loops.push_back(loop);
  }
  return {std::move(labels), std::move(loops)};
}

YComponentCover embed_y_component(const FiniteGroupTable& table, const LabeledGraph& component) {
  if (!component.folded()) throw GraphError("Y-component must be folded");
  auto [labels, loops] = y_path_labels(table, component);
  YComponentCover out;
  out.subgroup = subgroup_closure(table, loops);
  out.cover = coset_graph(table, out.subgroup);
  out.labels = std::move(labels);
  std::vector<bool> used(out.cover.graph.vertex_count(), false);
  for (Element g : out.labels) {
    Vertex v = out.cover.coset_of[g];
    if (used[v]) throw NotGBasedError("two vertices of a Y-component map to the same coset");
    used[v] = true;
    out.embedding.push_back(v);
  }
  return out;
}

LabeledGraph complete_cover(const LabeledGraph& g, Factor factor, int generator_count) {
  if (!g.folded()) throw GraphError("cover completion requires a folded graph");
  std::vector<Edge> extra;
  for (int i = 1; i <= generator_count; ++i) {
    const Letter l{factor, i, 1};
    std::vector<Vertex> sources;
    std::vector<Vertex> targets;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!g.follow(v, l)) sources.push_back(v);
      if (!g.follow(v, l.inverse())) targets.push_back(v);
    }
    if (sources.size() != targets.size()) throw GraphError("partial injection is unbalanced");
    for (std::size_t j = 0; j < sources.size(); ++j) extra.push_back({sources[j], targets[j], l});
  }
  return g.with_edges(extra);
}

std::vector<Word> element_words(const FiniteGroupTable& finite) {
  std::vector<std::optional<Word>> words(finite.order());
  words[finite.identity()] = Word{};
  std::deque<Element> queue{finite.identity()};
  const auto letters = alphabet(Factor::Y, finite.generator_count());
  while (!queue.empty()) {
    const Element e = queue.front();
    queue.pop_front();
    for (Letter l : letters) {
      const Element f = finite.multiply(e, finite.letter(l));
      if (words[f]) continue;
      Word w = *words[e];
      w.push_back(l);
      words[f] = std::move(w);
      queue.push_back(f);
    }
  }
  std::vector<Word> out;
  for (auto& w : words) out.push_back(std::move(*w));
  return out;
}

}  // namespace sepcert
