#pragma once

#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepcert/perm.hpp"

namespace sepcert {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);

struct OrbitPartition {
  std::vector<std::vector<Point>> orbits;  // each ascending, ordered by smallest point
  bool transitive = false;
};

OrbitPartition orbit_transitive(std::span<const Permutation> generators, std::size_t degree);

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Base points are the smallest points moved by a generator that fixes the
/// current base. Every Schreier generator is sifted, so the chain is
/// complete on return and order() is exact.
class StabilizerChain {
 public:
  StabilizerChain(std::span<const Permutation> generators, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  std::vector<Permutation> strong_generators() const;
  BigInt order() const;
  bool contains(const Permutation& p) const;

 private:
  struct Level {
    Point point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<int> slot;  // point -> index into transversal, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  void rebuild_orbit(Level& level) const;
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

BigInt bsgs_order(std::span<const Permutation> generators, std::size_t degree);

enum class ImageType { Alternating, Symmetric, Other };

const char* to_string(ImageType t);

struct Recognition {
  ImageType type = ImageType::Other;
  BigInt order;
  bool all_even = true;
};

/// Exact test for the full symmetric or alternating group of the given degree.
Recognition recognize_alt_sym(std::span<const Permutation> generators, std::size_t degree);

}  // namespace sepcert
