#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sepcert/bsgs.hpp"
#include "sepcert/stallings.hpp"

namespace sepcert {

class HypothesisNotSatisfied : public Error {
 public:
  using Error::Error;
};

class GadgetAttachmentImpossible : public Error {
 public:
  using Error::Error;
};

/// No prime up to the configured cap gave an alternating or symmetric image.
class RecognitionExhausted : public Error {
 public:
  using Error::Error;
};

struct GadgetParams {
  std::size_t n = 1;
  std::vector<int> s;     // one sign per X generator
  int connect_letter = 1;
  int move_letter = 2;

  /// Throws Error unless the fields fit rank r.
  void validate(int rank) const;
};

/// Interval w_1 .. w_n of connect-letter edges with a loop for every other
/// X generator at each vertex.
LabeledGraph gadget_w(const GadgetParams& params, int rank);

/// Four vertices v_1 .. v_4 on which the move letter acts nontrivially.
LabeledGraph gadget_v(const GadgetParams& params, int rank);

struct CoverPlan {
  std::size_t k = 0;
  std::size_t p = 0;
  std::size_t n = 0;
};

bool is_prime(std::size_t n);

/// Plans for successive primes p >= k + 5, with n = p - k - 4.
class PrimePlans {
 public:
  explicit PrimePlans(std::size_t k);
  CoverPlan next();

 private:
  std::size_t k_;
  std::size_t candidate_;
};

struct Cover {
  LabeledGraph graph;
  std::vector<Vertex> embedding;  // vertex of gamma -> vertex of graph
};

/// Images of x_1..x_r and y_1..y_m as permutations of the cover's vertices.
struct GeneratorImages {
  std::vector<Permutation> x;
  std::vector<Permutation> y;

  const Permutation& of(Letter l) const;
  std::vector<Permutation> all() const;

  /// Image of v under w, reading w left to right.
  Point act(Point v, const Word& w) const;
};

/// Requires a cover saturated for both alphabets.
GeneratorImages permutation_rep(const LabeledGraph& cover, int rank, int finite_generators);

struct CoverOptions {
  std::vector<int> signs;  // empty: all +1
  std::size_t max_prime = 1000;
};

struct SeparatingCover {
  Cover cover;
  CoverPlan plan;
  GadgetParams params;
  std::optional<std::size_t> gamma1_component;  // index into components(gamma, X); none for the base singleton
  Vertex defect_a = 0;  // ambient vertices of gamma
  Vertex defect_b = 0;
  std::size_t retries = 0;
  LabeledGraph gamma_star;
  LabeledGraph precover;
  GeneratorImages images;
  Recognition recognition;
};

/// Steps 1-4: embeds gamma into a cover with a prime number of vertices
/// whose generator images are alternating or symmetric, trying ascending
/// primes until recognition succeeds.
SeparatingCover build_separating_cover(const ProblemSpec& spec, const LabeledGraph& gamma,
                                       const HypothesisVerdict& verdict, const CoverOptions& options = {});

}  // namespace sepcert
