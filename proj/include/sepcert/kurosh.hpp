#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sepcert/factors.hpp"
#include "sepcert/graph.hpp"

namespace sepcert {

/// One conjugated factor g Lab(C, v) g^-1 of Lab(gamma, base).
struct KuroshFactor {
  Factor factor = Factor::X;
  std::size_t component = 0;  // index into components(gamma, factor)
  Vertex anchor = 0;
  Word approach;               // label of the approach path from the base to the anchor
  std::vector<Word> generators;  // loop words at the anchor from non-tree edges, trivial ones dropped
  std::optional<SubgroupOfG> finite_subgroup;  // Y factors only
};

struct KuroshDecomposition {
  std::vector<KuroshFactor> factors;  // X components first, then Y
  std::size_t free_rank = 0;
  LabeledGraph delta;
};

/// Reads the factors off the non-tree monochromatic components. `gamma` must
/// be folded, connected and F_r * G-based.
KuroshDecomposition kurosh_decompose(const LabeledGraph& gamma, const FiniteGroupTable& finite);

/// Given a loop at `start` in C whose label lies in C's factor, returns the
/// label of a loop inside C with the same value, obtained by excising
/// closed subpaths of identity label. Throws Error if the label is trivial or
/// outside the factor, or if an identity subpath does not close.
Word project_loop(const LabeledGraph& gamma, const FiniteGroupTable& finite, const Component& c, Vertex start,
                  const Word& loop);

struct IntersectionCounterexample {
  std::size_t factor = 0;
  Word word;             // approach u approach^-1
  bool in_subgroup = false;
  bool in_factor = false;
};

struct IntersectionReport {
  std::size_t checked = 0;
  std::vector<IntersectionCounterexample> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

/// For every factor and every u in its free factor (reduced X-words of length
/// at most `max_length`, or every element of G), compares membership of
/// g u g^-1 in Lab(gamma, base) with membership of u in Lab(C, v).
IntersectionReport verify_intersection(const LabeledGraph& gamma, const FiniteGroupTable& finite, int rank,
                                       const KuroshDecomposition& d, std::size_t max_length);

}  // namespace sepcert
