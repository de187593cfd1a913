#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepcert/factors.hpp"
#include "sepcert/graph.hpp"

namespace sepcert {

/// H = <h_1, .., h_n> <= F_r * G together with the elements to separate.
struct ProblemSpec {
  FreeFactor free;
  FiniteGroupTable finite;
  std::vector<Word> subgroup_words;
  std::vector<Word> separate_words;

  /// Throws Error if a letter names an undeclared generator.
  void validate() const;
};

void validate_word(const Word& w, const FreeFactor& free, const FiniteGroupTable& finite);

struct BasedQuotient {
  LabeledGraph graph;
  std::vector<Vertex> vertex_map;
  std::size_t rounds = 0;  // coset-identification rounds that changed the graph
};

/// Smallest F_r * G-based quotient of g: fold, then merge the vertices of
/// each Y-component that land on the same coset of its loop subgroup, until
/// nothing changes.
BasedQuotient based_quotient(const LabeledGraph& g, const FiniteGroupTable& finite);

struct Gamma {
  LabeledGraph graph;
  std::vector<Vertex> separator_endpoints;  // one per separate word
  std::size_t rounds = 0;
};

/// The subgraph of Cay(F_r * G, H) spanned by the h_i-loops and gamma_j-paths
/// at the base.
Gamma build_gamma(const ProblemSpec& spec);

/// Endpoint of the w-path from the base after adding it to `gamma` and
/// re-closing; `gamma` must already be F_r * G-based.
bool subgroup_contains(const LabeledGraph& gamma, const FiniteGroupTable& finite, const Word& w);

/// w in H? `spec.separate_words` is ignored.
bool membership(const ProblemSpec& spec, const Word& w);

/// Caches the graph of H for repeated membership queries.
class SubgroupGraph {
 public:
  explicit SubgroupGraph(const ProblemSpec& spec);
  SubgroupGraph(LabeledGraph gamma, FiniteGroupTable finite);

  const LabeledGraph& graph() const { return gamma_; }
  bool contains(const Word& w) const { return subgroup_contains(gamma_, finite_, w); }

 private:
  LabeledGraph gamma_;
  FiniteGroupTable finite_;
};

struct HypothesisVerdict {
  enum class Kind { Hypothesis1, Hypothesis2, NotApplicable };
  Kind kind = Kind::NotApplicable;
  std::optional<std::size_t> witness;  // index into components(gamma, Factor::X)
  std::string reason;
};

const char* to_string(HypothesisVerdict::Kind k);

/// Hypothesis1: every X-component is a tree. Hypothesis2: some non-tree
/// X-component is unsaturated. Otherwise every non-tree X-component is a
/// finite cover of F_r and the construction does not apply.
HypothesisVerdict hypothesis_check(const LabeledGraph& gamma, int rank);

}  // namespace sepcert
