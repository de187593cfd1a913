#include "sepcert/kurosh.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "sepcert/stallings.hpp"

namespace sepcert {

namespace {

constexpr Vertex unseen = static_cast<Vertex>(-1);

struct SpanningTree {
  std::vector<Vertex> parent;  // unseen for the root and unreached vertices
  std::vector<Letter> via;     // label of the arc parent -> v
  std::vector<std::size_t> order;
};

/// Breadth-first tree from `root`, arcs in letter order, optionally
/// restricted to one factor.
SpanningTree bfs_tree(const LabeledGraph& g, Vertex root, std::optional<Factor> only) {
  const std::size_t n = g.vertex_count();
  SpanningTree t{std::vector<Vertex>(n, unseen), std::vector<Letter>(n), std::vector<std::size_t>(n, unseen)};
  std::deque<Vertex> queue{root};
  std::size_t next = 0;
  t.order[root] = next++;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (const Arc& a : g.arcs(u)) {
      if (only && a.label.factor != *only) continue;
      if (t.order[a.target] != unseen) continue;
      t.order[a.target] = next++;
      t.parent[a.target] = u;
      t.via[a.target] = a.label;
      queue.push_back(a.target);
    }
  }
  return t;
}

Word tree_word(const SpanningTree& t, Vertex v) {
  Word w;
  for (; t.parent[v] != unseen; v = t.parent[v]) w.push_back(t.via[v]);
  std::reverse(w.begin(), w.end());
  return w;
}

Edge canonical(Vertex from, Letter l, Vertex to) {
  if (l.positive()) return {from, to, l};
  return {to, from, l.inverse()};
}

/// Edges of `c` used by the tree, as ambient edge values.
std::vector<Edge> tree_edges(const SpanningTree& t, const Component& c) {
  std::vector<Edge> out;
  for (Vertex v : c.vertices)
    if (t.parent[v] != unseen) out.push_back(canonical(t.parent[v], t.via[v], v));
  return out;
}

bool identity_in_factor(const FiniteGroupTable& finite, Factor f, const Word& w) {
  if (f == Factor::X) return free_reduce(w).empty();
  return finite.evaluate(w) == finite.identity();
}

void reduced_words(int rank, std::size_t max_length, const std::function<void(const Word&)>& visit) {
  const auto letters = alphabet(Factor::X, rank);
  Word w;
  std::function<void()> extend = [&] {
    visit(w);
    if (w.size() == max_length) return;
    for (Letter l : letters) {
      if (!w.empty() && w.back() == l.inverse()) continue;
      w.push_back(l);
      extend();
      w.pop_back();
    }
  };
  extend();
}

}  // namespace

KuroshDecomposition kurosh_decompose(const LabeledGraph& gamma, const FiniteGroupTable& finite) {
  if (!gamma.folded()) throw GraphError("kurosh_decompose needs a folded graph");
  if (!gamma.connected()) throw GraphError("kurosh_decompose needs a connected graph");

  const SpanningTree approach = bfs_tree(gamma, gamma.base(), std::nullopt);
  KuroshDecomposition d;
  std::vector<Edge> removed;

  for (Factor f : {Factor::X, Factor::Y}) {
    const auto comps = components(gamma, f);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const Component& c = comps[i];
      if (c.is_tree()) continue;
      KuroshFactor k;
      k.factor = f;
      k.component = i;
      k.anchor = c.contains(gamma.base())
                     ? gamma.base()
                     : *std::min_element(c.vertices.begin(), c.vertices.end(), [&](Vertex a, Vertex b) {
                         return approach.order[a] < approach.order[b];
                       });
      k.approach = tree_word(approach, k.anchor);

      const SpanningTree inside = bfs_tree(gamma, k.anchor, f);
      const auto kept = tree_edges(inside, c);
      for (std::size_t idx : c.edges) {
        const Edge& e = gamma.edges()[idx];
        if (std::find(kept.begin(), kept.end(), e) != kept.end()) continue;
        removed.push_back(e);
        Word loop = free_reduce(concat(tree_word(inside, e.source), {e.label}, inverse(tree_word(inside, e.target))));
        if (!identity_in_factor(finite, f, loop)) k.generators.push_back(std::move(loop));
      }
      if (f == Factor::Y) k.finite_subgroup = embed_y_component(finite, c.graph.rebased(c.local(k.anchor))).subgroup;
      d.factors.push_back(std::move(k));
    }
  }

  std::vector<Edge> kept;
  for (const Edge& e : gamma.edges())
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) kept.push_back(e);
  d.delta = LabeledGraph(gamma.vertex_count(), std::move(kept), gamma.base());
  d.free_rank = d.delta.edge_pair_count() + 1 - d.delta.vertex_count();
  return d;
}

Word project_loop(const LabeledGraph& gamma, const FiniteGroupTable& finite, const Component& c, Vertex start,
                  const Word& loop) {
  if (!c.contains(start)) throw Error("loop does not start in the component");
  struct Segment {
    Factor factor;
    Word word;
    Vertex from;
    Vertex to;
  };
  std::vector<Segment> segments;
  Vertex at = start;
  for (Letter l : loop) {
    auto next = gamma.follow(at, l);
    if (!next) throw Error("loop leaves the graph at " + std::to_string(at));
    if (segments.empty() || segments.back().factor != l.factor) segments.push_back({l.factor, {}, at, at});
    segments.back().word.push_back(l);
    segments.back().to = at = *next;
  }
  if (at != start) throw Error("path is not a loop");

  while (segments.size() > 1) {
    auto it = std::find_if(segments.begin(), segments.end(),
                           [&](const Segment& s) { return identity_in_factor(finite, s.factor, s.word); });
    if (it == segments.end()) throw Error("loop label is not in the component's factor");
    if (it->from != it->to) throw Error("identity subpath does not close; graph is not F_r * G-based");
    it = segments.erase(it);
    if (it != segments.begin() && it != segments.end() && std::prev(it)->factor == it->factor) {
      auto prev = std::prev(it);
      prev->word.insert(prev->word.end(), it->word.begin(), it->word.end());
      prev->to = it->to;
      segments.erase(it);
    }
  }
  if (segments.empty()) throw Error("loop label is trivial");
  if (segments.front().factor != c.factor)
    throw Error("loop label is not in the component's factor");
  if (identity_in_factor(finite, c.factor, segments.front().word)) throw Error("loop label is trivial");
  return segments.front().word;
}

IntersectionReport verify_intersection(const LabeledGraph& gamma, const FiniteGroupTable& finite, int rank,
                                       const KuroshDecomposition& d, std::size_t max_length) {
  const SubgroupGraph h(gamma, finite);
  std::vector<Word> g_words;
  IntersectionReport report;

  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const KuroshFactor& k = d.factors[i];
    auto check = [&](const Word& u, bool in_factor) {
      Word w = concat(k.approach, u, inverse(k.approach));
      const bool in_subgroup = h.contains(w);
      ++report.checked;
      if (in_subgroup != in_factor) report.counterexamples.push_back({i, std::move(w), in_subgroup, in_factor});
    };
    if (k.factor == Factor::X) {
      reduced_words(rank, max_length, [&](const Word& u) { check(u, trace(gamma, k.anchor, u).closed()); });
    } else {
      if (g_words.empty()) g_words = element_words(finite);
      for (Element e = 0; e < finite.order(); ++e) check(g_words[e], k.finite_subgroup->contains(e));
    }
  }
  return report;
}

}  // namespace sepcert
