#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sepcert/error.hpp"
#include "sepcert/word.hpp"

namespace sepcert {

using Vertex = std::size_t;

/// One edge pair {e, ē}, stored in its canonical orientation (positive letter).
struct Edge {
  Vertex source = 0;
  Vertex target = 0;
  Letter label;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An outgoing half-edge seen from its source vertex.
struct Arc {
  Letter label;
  Vertex target = 0;
};

/// Finite graph whose edges come in involutive pairs labeled x and x^-1.
///
/// Vertices are 0..vertex_count()-1. Values are immutable; every operation
/// returns a new graph. The immersion (folded) property is computed on
/// construction and exposed through folded().
class LabeledGraph {
 public:
  /// A single vertex, no edges.
  LabeledGraph() : LabeledGraph(1, {}, 0) {}

  /// Edges given with a negative letter are flipped to canonical orientation.
  /// Parallel edges are allowed (the result is then not folded).
  LabeledGraph(std::size_t vertex_count, std::vector<Edge> edges, Vertex base);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_pair_count() const { return edges_.size(); }
  Vertex base() const { return base_; }
  std::span<const Edge> edges() const { return edges_; }

  /// Outgoing arcs of v (both orientations), sorted by letter then target.
  std::span<const Arc> arcs(Vertex v) const;

  bool folded() const { return folded_; }

  /// Target of the first arc at v with the given label.
  std::optional<Vertex> follow(Vertex v, Letter label) const;

  LabeledGraph rebased(Vertex base) const;

  /// Same graph with more edges appended.
  LabeledGraph with_edges(std::span<const Edge> extra) const;

  /// Disjoint union with `other`; other's vertices are shifted by vertex_count().
  LabeledGraph disjoint_union(const LabeledGraph& other) const;

  bool connected() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.base_ == b.base_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 1;
  Vertex base_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> arc_offsets_;
  std::vector<Arc> arcs_;
  bool folded_ = true;
};

/// Strict constructor: every endpoint must exist and no (source, target,
/// label) triple may repeat.
LabeledGraph build_graph(std::size_t vertex_count, const std::vector<Edge>& spec, Vertex base);

struct Folding {
  LabeledGraph graph;
  std::vector<Vertex> vertex_map;  // input vertex -> output vertex, total
};

/// Stallings folding to the unique folded quotient.
///
/// Output vertices are numbered by the smallest input vertex of each class.
Folding fold(const LabeledGraph& g);

/// Identifies the given vertex pairs, then folds.
Folding fold_identifying(const LabeledGraph& g, std::span<const std::pair<Vertex, Vertex>> identify);

struct TraceResult {
  enum class Kind { Closed, EndsAt, Stuck };
  Kind kind = Kind::Closed;
  Vertex vertex = 0;         // end vertex, or the vertex where the path got stuck
  std::size_t position = 0;  // 1-based index of the first unreadable letter (Stuck only)

  bool closed() const { return kind == Kind::Closed; }
  bool complete() const { return kind != Kind::Stuck; }
};

/// Reads w from `start`. Requires a folded graph.
TraceResult trace(const LabeledGraph& g, Vertex start, const Word& w);

/// A graph to glue onto the base graph of an amalgam.
///
/// `glue` pairs (base vertex, piece vertex) describe an injection of a shared
/// subgraph; `shared_edges` index base edges of that subgraph, each of which
/// must have a same-labeled counterpart in the piece.
struct AmalgamPiece {
  LabeledGraph graph;
  std::vector<std::pair<Vertex, Vertex>> glue;
  std::vector<std::size_t> shared_edges;
};

struct Amalgam {
  LabeledGraph graph;
  std::vector<Vertex> base_map;
  std::vector<std::vector<Vertex>> piece_maps;
};

/// Pushout along the shared subgraphs, folded. The base of `base` stays the base.
Amalgam amalgamate(const LabeledGraph& base, const std::vector<AmalgamPiece>& pieces);

/// A maximal connected monochromatic subgraph.
struct Component {
  Factor factor = Factor::X;
  std::vector<Vertex> vertices;     // ambient ids, ascending; local id i <-> vertices[i]
  std::vector<std::size_t> edges;   // indices into the ambient edge list
  Vertex anchor = 0;                // ambient base if contained, else smallest vertex
  LabeledGraph graph;               // local copy based at the anchor

  bool is_tree() const { return edges.size() + 1 == vertices.size(); }
  bool singleton() const { return edges.empty(); }
  bool contains(Vertex v) const;
  Vertex local(Vertex ambient) const;
};

/// Components of the subgraph spanned by `factor` edges. Vertices with no
/// such edges are reported as singletons only when `include_singletons`.
std::vector<Component> components(const LabeledGraph& g, Factor factor, bool include_singletons = false);

struct SaturationDefect {
  Vertex vertex = 0;
  Letter missing;

  friend bool operator==(const SaturationDefect&, const SaturationDefect&) = default;
};

/// Every (vertex, letter) with no outgoing arc, sorted by vertex then letter.
std::vector<SaturationDefect> saturation_defects(const LabeledGraph& g, std::span<const Letter> alphabet);

/// Breadth-first relabeling from the base, arcs in letter order. Two folded
/// connected graphs are isomorphic as based labeled graphs iff their
/// canonical forms are equal.
LabeledGraph canonical_form(const LabeledGraph& g);

bool isomorphic_based(const LabeledGraph& a, const LabeledGraph& b);

/// Edges whose image under `map` is missing from `target`; empty iff `map`
/// is a label-preserving morphism.
std::vector<Edge> unmapped_edges(const LabeledGraph& source, const LabeledGraph& target,
                                 std::span<const Vertex> map);

/// Injective label-preserving vertex map.
bool is_embedding(const LabeledGraph& source, const LabeledGraph& target, std::span<const Vertex> map);

}  // namespace sepcert
