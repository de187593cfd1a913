#pragma once

// Certificate checks on a finished pipeline run, shared by the wilton and
// acceptance suites.

#include <string>
#include <vector>

#include "oracles.hpp"
#include "sepcert/wilton.hpp"

namespace checks {

using namespace sepcert;

/// Every Y-component is isomorphic to Cay(G, K) for its loop subgroup K.
inline bool y_components_are_coset_graphs(const LabeledGraph& g, const FiniteGroupTable& finite) {
  for (const Component& c : components(g, Factor::Y)) {
    const YComponentCover e = embed_y_component(finite, c.graph);
    if (!isomorphic_based(c.graph, e.cover.graph)) return false;
  }
  return true;
}

inline bool x_components_are_covers(const LabeledGraph& g, int rank) {
  for (const Component& c : components(g, Factor::X))
    if (!saturation_defects(c.graph, alphabet(Factor::X, rank)).empty()) return false;
  return true;
}

/// Image of v under w computed by walking the graph.
inline Vertex walk(const LabeledGraph& g, Vertex v, const Word& w) {
  for (Letter l : w) v = *g.follow(v, l);
  return v;
}

/// Descriptions of every violated certificate property; empty on success.
inline std::vector<std::string> cover_failures(const ProblemSpec& spec, const LabeledGraph& gamma,
                                               const SeparatingCover& r) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const LabeledGraph& g = r.cover.graph;
  const std::size_t k = r.plan.k, n = r.plan.n, p = r.plan.p;
  const int rank = spec.free.rank;
  const int m = spec.finite.generator_count();

  expect(k == r.gamma_star.vertex_count(), "k is |V(gamma*)|");
  expect(g.vertex_count() == p && p == k + n + 4, "degree identity");
  expect(is_prime(p), "p prime");
  expect(g.folded() && g.connected(), "cover folded and connected");
  expect(saturation_defects(g, alphabet(Factor::X, rank)).empty(), "X-saturated");
  expect(saturation_defects(g, alphabet(Factor::Y, m)).empty(), "Y-saturated");
  expect(y_components_are_coset_graphs(g, spec.finite), "Y-components are coset graphs");
  expect(x_components_are_covers(r.precover, rank), "precover X-components are covers");
  expect(y_components_are_coset_graphs(r.precover, spec.finite), "precover Y-components are coset graphs");

  // Embedding, edge by edge.
  std::vector<bool> hit(g.vertex_count(), false);
  bool injective = r.cover.embedding.size() == gamma.vertex_count();
  for (Vertex v : r.cover.embedding) {
    injective = injective && v < g.vertex_count() && !hit[v];
    if (v < g.vertex_count()) hit[v] = true;
  }
  expect(injective, "embedding injective");
  bool preserved = injective;
  for (const Edge& e : gamma.edges())
    preserved = preserved && g.follow(r.cover.embedding[e.source], e.label) == r.cover.embedding[e.target];
  expect(preserved, "embedding label-preserving");

  // Move letter: small support, fixes the W interval.
  const Permutation& move = r.images.x[r.params.move_letter - 1];
  const auto moved = support(move);
  expect(!moved.empty() && moved.size() <= k + 4, "move letter support <= k + 4");
  bool fixes_w = true;
  for (Vertex v = k; v < k + n; ++v) fixes_w = fixes_w && move(static_cast<Point>(v)) == v;
  expect(fixes_w, "move letter fixes W_n");
  expect(orbit_transitive(r.images.all(), p).transitive, "transitive action");

  // Recognition against the factorials.
  const BigInt full = factorial(static_cast<unsigned>(p));
  const bool even = std::all_of(r.images.x.begin(), r.images.x.end(),
                                [](const Permutation& q) { return parity(q) == Parity::Even; }) &&
                    std::all_of(r.images.y.begin(), r.images.y.end(),
                                [](const Permutation& q) { return parity(q) == Parity::Even; });
  expect(r.recognition.order == full || (even && 2 * r.recognition.order == full), "image order is p! or p!/2");
  expect(r.recognition.type != ImageType::Other, "image alternating or symmetric");

  // Separation, by permutation action and by walking the cover.
  const Vertex base = g.base();
  expect(base == r.cover.embedding[gamma.base()], "base preserved");
  for (const Word& h : spec.subgroup_words) {
    expect(r.images.act(static_cast<Point>(base), h) == base, "h fixes the base: " + to_string(h));
    expect(walk(g, base, h) == base, "h-loop closes: " + to_string(h));
  }
  for (const Word& w : spec.separate_words) {
    expect(r.images.act(static_cast<Point>(base), w) != base, "separator moves the base: " + to_string(w));
    expect(walk(g, base, w) == r.images.act(static_cast<Point>(base), w), "walk agrees with the action");
  }

  // G-relations: the y-images define a homomorphism of G.
  const auto words = oracle::shortest_y_words(spec.finite);
  for (Element e = 0; e < spec.finite.order(); ++e)
    for (int j = 1; j <= m; ++j) {
      Word longer = words[e];
      longer.push_back(Letter::y(j));
      const Element f = spec.finite.multiply(e, spec.finite.generator(j));
      for (Point v = 0; v < p; ++v)
        if (r.images.act(v, longer) != r.images.act(v, words[f])) {
          bad.push_back("y-relation broken");
          return bad;
        }
    }
  return bad;
}

}  // namespace checks
