#include "sepcert/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "sepcert/disjoint_sets.hpp"

namespace sepcert {

namespace {

bool arc_less(const Arc& a, const Arc& b) { return std::tie(a.label, a.target) < std::tie(b.label, b.target); }

bool edge_less(const Edge& a, const Edge& b) {
  return std::tie(a.source, a.label, a.target) < std::tie(b.source, b.label, b.target);
}

bool has_arc(const LabeledGraph& g, Vertex s, Letter label, Vertex t) {
  for (const Arc& a : g.arcs(s))
    if (a.label == label && a.target == t) return true;
  return false;
}

}  // namespace

LabeledGraph::LabeledGraph(std::size_t vertex_count, std::vector<Edge> edges, Vertex base)
    : vertex_count_(vertex_count), base_(base), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw GraphError("graph must have at least one vertex");
  if (base_ >= vertex_count_) throw GraphError("base vertex " + std::to_string(base_) + " is not a vertex");
  for (Edge& e : edges_) {
    if (e.source >= vertex_count_ || e.target >= vertex_count_)
      throw GraphError("edge endpoint is not a vertex");
    if (e.label.index < 1 || (e.label.sign != 1 && e.label.sign != -1))
      throw GraphError("malformed edge label");
    if (!e.label.positive()) e = {e.target, e.source, e.label.inverse()};
  }

  std::vector<std::size_t> degree(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++degree[e.source];
    ++degree[e.target];
  }
  arc_offsets_.assign(vertex_count_ + 1, 0);
  for (std::size_t v = 0; v < vertex_count_; ++v) arc_offsets_[v + 1] = arc_offsets_[v] + degree[v];
  arcs_.resize(arc_offsets_.back());
  std::vector<std::size_t> fill(arc_offsets_.begin(), arc_offsets_.end() - 1);
  for (const Edge& e : edges_) {
    arcs_[fill[e.source]++] = {e.label, e.target};
    arcs_[fill[e.target]++] = {e.label.inverse(), e.source};
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(arc_offsets_[v]);
    auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(arc_offsets_[v + 1]);
    std::sort(first, last, arc_less);
    if (std::adjacent_find(first, last, [](const Arc& a, const Arc& b) { return a.label == b.label; }) != last)
      folded_ = false;
  }
}

std::span<const Arc> LabeledGraph::arcs(Vertex v) const {
  return std::span<const Arc>(arcs_).subspan(arc_offsets_[v], arc_offsets_[v + 1] - arc_offsets_[v]);
}

std::optional<Vertex> LabeledGraph::follow(Vertex v, Letter label) const {
  auto range = arcs(v);
  auto it = std::lower_bound(range.begin(), range.end(), label,
                             [](const Arc& a, const Letter& l) { return a.label < l; });
  if (it == range.end() || it->label != label) return std::nullopt;
  return it->target;
}

LabeledGraph LabeledGraph::rebased(Vertex base) const { return LabeledGraph(vertex_count_, edges_, base); }

LabeledGraph LabeledGraph::with_edges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return LabeledGraph(vertex_count_, std::move(all), base_);
}

LabeledGraph LabeledGraph::disjoint_union(const LabeledGraph& other) const {
  std::vector<Edge> all = edges_;
  for (const Edge& e : other.edges())
    all.push_back({e.source + vertex_count_, e.target + vertex_count_, e.label});
  return LabeledGraph(vertex_count_ + other.vertex_count(), std::move(all), base_);
}

bool LabeledGraph::connected() const {
  std::vector<bool> seen(vertex_count_, false);
  std::vector<Vertex> stack{base_};
  seen[base_] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Arc& a : arcs(v)) {
      if (!seen[a.target]) {
        seen[a.target] = true;
        ++reached;
        stack.push_back(a.target);
      }
    }
  }
  return reached == vertex_count_;
}

LabeledGraph build_graph(std::size_t vertex_count, const std::vector<Edge>& spec, Vertex base) {
  if (base >= vertex_count) throw GraphError("base vertex " + std::to_string(base) + " is not declared");
  std::set<std::tuple<Vertex, Letter, Vertex>> seen;
  for (const Edge& e : spec) {
    if (e.source >= vertex_count || e.target >= vertex_count)
      throw GraphError("edge endpoint is not a declared vertex");
    Edge c = e.label.positive() ? e : Edge{e.target, e.source, e.label.inverse()};
    if (!seen.emplace(c.source, c.label, c.target).second)
      throw GraphError("duplicate edge " + std::to_string(e.source) + " -" + to_string(e.label) + "-> " +
                       std::to_string(e.target));
  }
  return LabeledGraph(vertex_count, spec, base);
}

Folding fold(const LabeledGraph& g) { return fold_identifying(g, {}); }

Folding fold_identifying(const LabeledGraph& g, std::span<const std::pair<Vertex, Vertex>> identify) {
  const std::size_t n = g.vertex_count();
  detail::DisjointSets classes(n);
  std::vector<std::map<Letter, Vertex>> out(n);
  std::deque<std::pair<Vertex, Vertex>> pending(identify.begin(), identify.end());

  auto insert_arc = [&](Vertex rep, Letter label, Vertex target) {
    auto [it, inserted] = out[rep].emplace(label, target);
    if (!inserted) pending.emplace_back(target, it->second);
  };
  for (const Edge& e : g.edges()) {
    insert_arc(classes.find(e.source), e.label, e.target);
    insert_arc(classes.find(e.target), e.label.inverse(), e.source);
  }

  while (!pending.empty()) {
    auto [u, w] = pending.front();
    pending.pop_front();
    if (u >= n || w >= n) throw GraphError("identified vertex is not a vertex");
    Vertex a = classes.find(u);
    Vertex b = classes.find(w);
    if (a == b) continue;
    if (out[a].size() < out[b].size()) std::swap(a, b);
    classes.attach(a, b);
    for (const auto& [label, target] : out[b]) insert_arc(a, label, target);
    out[b].clear();
  }

  constexpr Vertex unassigned = static_cast<Vertex>(-1);
  std::vector<Vertex> id(n, unassigned);
  Folding result;
  result.vertex_map.resize(n);
  std::size_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = classes.find(v);
    if (id[r] == unassigned) id[r] = next++;
    result.vertex_map[v] = id[r];
  }

  std::vector<Edge> edges;
  for (Vertex r = 0; r < n; ++r) {
    if (classes.find(r) != r) continue;
    for (const auto& [label, target] : out[r])
      if (label.positive()) edges.push_back({id[r], id[classes.find(target)], label});
  }
  std::sort(edges.begin(), edges.end(), edge_less);
  result.graph = LabeledGraph(next, std::move(edges), result.vertex_map[g.base()]);
  return result;
}

TraceResult trace(const LabeledGraph& g, Vertex start, const Word& w) {
  if (!g.folded()) throw GraphError("trace requires a folded graph");
  if (start >= g.vertex_count()) throw GraphError("trace start is not a vertex");
  Vertex v = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto next = g.follow(v, w[i]);
    if (!next) return {TraceResult::Kind::Stuck, v, i + 1};
    v = *next;
  }
  return {v == start ? TraceResult::Kind::Closed : TraceResult::Kind::EndsAt, v, 0};
}

Amalgam amalgamate(const LabeledGraph& base, const std::vector<AmalgamPiece>& pieces) {
  LabeledGraph whole = base;
  std::vector<std::size_t> offsets;
  std::vector<std::pair<Vertex, Vertex>> identify;

  for (const AmalgamPiece& piece : pieces) {
    std::map<Vertex, Vertex> into_piece;
    std::set<Vertex> piece_side;
    for (auto [b, p] : piece.glue) {
      if (b >= base.vertex_count() || p >= piece.graph.vertex_count())
        throw GraphError("glue refers to a missing vertex");
      if (!into_piece.emplace(b, p).second || !piece_side.insert(p).second)
        throw GraphError("glue map is not injective");
    }
    for (std::size_t idx : piece.shared_edges) {
      if (idx >= base.edge_pair_count()) throw GraphError("shared edge index out of range");
      const Edge& e = base.edges()[idx];
      auto s = into_piece.find(e.source);
      auto t = into_piece.find(e.target);
      if (s == into_piece.end() || t == into_piece.end() || !has_arc(piece.graph, s->second, e.label, t->second))
        throw GraphError("injection is not label-preserving on edge " + std::to_string(e.source) + " -" +
                         to_string(e.label) + "-> " + std::to_string(e.target));
    }
    offsets.push_back(whole.vertex_count());
    for (auto [b, p] : piece.glue) identify.emplace_back(b, p + offsets.back());
    whole = whole.disjoint_union(piece.graph);
  }

  Folding f = fold_identifying(whole, identify);
  Amalgam result;
  result.graph = std::move(f.graph);
  result.base_map.assign(f.vertex_map.begin(), f.vertex_map.begin() + static_cast<std::ptrdiff_t>(base.vertex_count()));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto first = f.vertex_map.begin() + static_cast<std::ptrdiff_t>(offsets[i]);
    result.piece_maps.emplace_back(first, first + static_cast<std::ptrdiff_t>(pieces[i].graph.vertex_count()));
  }
  return result;
}

bool Component::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

Vertex Component::local(Vertex ambient) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), ambient);
  if (it == vertices.end() || *it != ambient) throw GraphError("vertex is not in the component");
  return static_cast<Vertex>(it - vertices.begin());
}

std::vector<Component> components(const LabeledGraph& g, Factor factor, bool include_singletons) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(n, none);
  std::vector<Component> out;

  for (Vertex start = 0; start < n; ++start) {
    if (owner[start] != none) continue;
    bool touches = false;
    for (const Arc& a : g.arcs(start)) touches = touches || a.label.factor == factor;
    if (!touches && !include_singletons) continue;

    Component c;
    c.factor = factor;
    std::vector<Vertex> stack{start};
    owner[start] = out.size();
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (const Arc& a : g.arcs(v)) {
        if (a.label.factor != factor || owner[a.target] != none) continue;
        owner[a.target] = out.size();
        stack.push_back(a.target);
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    out.push_back(std::move(c));
  }

  for (std::size_t i = 0; i < g.edge_pair_count(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.label.factor == factor) out[owner[e.source]].edges.push_back(i);
  }
  for (Component& c : out) {
    c.anchor = c.contains(g.base()) ? g.base() : c.vertices.front();
    std::vector<Edge> local;
    for (std::size_t i : c.edges) {
      const Edge& e = g.edges()[i];
      local.push_back({c.local(e.source), c.local(e.target), e.label});
    }
    c.graph = LabeledGraph(c.vertices.size(), std::move(local), c.local(c.anchor));
  }
  return out;
}

std::vector<SaturationDefect> saturation_defects(const LabeledGraph& g, std::span<const Letter> alphabet) {
  if (!g.folded()) throw GraphError("saturation analysis requires a folded graph");
  std::vector<Letter> letters(alphabet.begin(), alphabet.end());
  std::sort(letters.begin(), letters.end());
  std::vector<SaturationDefect> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (const Letter& l : letters)
      if (!g.follow(v, l)) out.push_back({v, l});
  return out;
}

LabeledGraph canonical_form(const LabeledGraph& g) {
  if (!g.folded()) throw GraphError("canonical form requires a folded graph");
  constexpr Vertex unseen = static_cast<Vertex>(-1);
  std::vector<Vertex> number(g.vertex_count(), unseen);
  std::deque<Vertex> queue{g.base()};
  number[g.base()] = 0;
  std::size_t next = 1;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (const Arc& a : g.arcs(v)) {
      if (number[a.target] != unseen) continue;
      number[a.target] = next++;
      queue.push_back(a.target);
    }
  }
  if (next != g.vertex_count()) throw GraphError("canonical form requires a connected graph");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({number[e.source], number[e.target], e.label});
  std::sort(edges.begin(), edges.end(), edge_less);
  return LabeledGraph(g.vertex_count(), std::move(edges), 0);
}

bool isomorphic_based(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_pair_count() != b.edge_pair_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Edge> unmapped_edges(const LabeledGraph& source, const LabeledGraph& target,
                                 std::span<const Vertex> map) {
  if (map.size() != source.vertex_count()) throw GraphError("vertex map has the wrong size");
  std::vector<Edge> missing;
  for (const Edge& e : source.edges()) {
    Vertex s = map[e.source];
    Vertex t = map[e.target];
    if (s >= target.vertex_count() || t >= target.vertex_count() || !has_arc(target, s, e.label, t))
      missing.push_back(e);
  }
  return missing;
}

bool is_embedding(const LabeledGraph& source, const LabeledGraph& target, std::span<const Vertex> map) {
  if (map.size() != source.vertex_count()) return false;
  std::set<Vertex> image(map.begin(), map.end());
  if (image.size() != map.size()) return false;
  return unmapped_edges(source, target, map).empty();
}

}  // namespace sepcert
