#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sepcert/graph.hpp"
#include "sepcert/perm.hpp"

namespace sepcert {

/// The free factor F_r on x_1..x_r.
struct FreeFactor {
  int rank = 2;

  /// Throws Error unless r >= 2.
  static FreeFactor of_rank(int r);
};

using Element = std::size_t;

/// A finite group G, fully enumerated from permutation generators y_1..y_m.
///
/// Elements are numbered in breadth-first order from the identity (element
/// 0) over right multiplication by y_1, .., y_m.
class FiniteGroupTable {
 public:
  /// Trivial group on one point, no generators.
  FiniteGroupTable();

  static FiniteGroupTable enumerate(std::size_t degree, std::vector<Permutation> generators);

  /// Converts a Cayley table (table[a][b] = a*b, 0-based elements) to its
  /// right regular permutation representation.
  static FiniteGroupTable from_multiplication_table(const std::vector<std::vector<std::size_t>>& table,
                                                    const std::vector<std::size_t>& generators);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  int generator_count() const { return static_cast<int>(generator_map_.size()); }

  Element identity() const { return 0; }
  const Permutation& element(Element e) const { return elements_[e]; }
  std::span<const Permutation> elements() const { return elements_; }

  /// Element of y_index (1-based).
  Element generator(int index) const;
  const Permutation& generator_permutation(int index) const { return element(generator(index)); }

  Element multiply(Element a, Element b) const { return product_[a * order() + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element letter(Letter l) const;

  /// Product of a Y-word; throws on X letters.
  Element evaluate(const Word& w) const;

  std::optional<Element> index_of(const Permutation& p) const;

 private:
  struct Empty {};
  explicit FiniteGroupTable(Empty) {}

  std::size_t degree_ = 1;
  std::vector<Permutation> elements_;
  std::vector<Element> generator_map_;
  std::vector<Element> product_;
  std::vector<Element> inverse_;
};

/// A shortest Y-word for every element, breadth-first over y_1^{+-1}, ...
std::vector<Word> element_words(const FiniteGroupTable& finite);

/// A subgroup K <= G as a sorted element set.
struct SubgroupOfG {
  std::vector<Element> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(Element e) const;
};

SubgroupOfG subgroup_closure(const FiniteGroupTable& table, std::span<const Element> seeds);

/// The relative Cayley graph Cay(G, K): right cosets Kg with edges Kg -> Kgy.
struct CosetGraph {
  LabeledGraph graph;
  std::vector<Vertex> coset_of;  // element g -> vertex Kg
};

/// Cosets numbered breadth-first from K (vertex 0), letters in order.
CosetGraph coset_graph(const FiniteGroupTable& table, const SubgroupOfG& k);

struct YComponentCover {
  CosetGraph cover;
  SubgroupOfG subgroup;         // Lab(C, anchor)
  std::vector<Element> labels;  // local vertex -> label of a tree path from the anchor
  std::vector<Vertex> embedding;
};

/// Embeds a connected Y-labeled graph (based at its anchor) into
/// Cay(G, Lab(C, anchor)). Throws NotGBasedError when two vertices share a
/// coset, i.e. the graph is not G-based.
YComponentCover embed_y_component(const FiniteGroupTable& table, const LabeledGraph& component);

/// Labels of a breadth-first spanning tree from the base, evaluated in G.
/// Also returns the loop labels of the non-tree edges.
std::pair<std::vector<Element>, std::vector<Element>> y_path_labels(const FiniteGroupTable& table,
                                                                    const LabeledGraph& component);

/// Extends each letter's partial injection to a permutation of the vertices:
/// the i-th vertex lacking an outgoing arc is joined to the i-th vertex
/// lacking an incoming one, both in ascending order. Only `factor` letters
/// with index 1..generator_count are touched; no vertices are added.
LabeledGraph complete_cover(const LabeledGraph& g, Factor factor, int generator_count);

inline LabeledGraph complete_x_cover(const LabeledGraph& c, int rank) { return complete_cover(c, Factor::X, rank); }

}  // namespace sepcert
