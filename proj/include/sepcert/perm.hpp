#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sepcert/error.hpp"

namespace sepcert {

using Point = std::uint32_t;

/// A bijection of {0, .., degree-1}. Cycle notation is 1-based.
///
/// Composition is left-then-right: (a * b)(v) == b(a(v)). This matches path
/// tracing, where the image of v under a word is the endpoint of its path.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t degree);

  /// Throws PermutationError unless `images` is a bijection of 0..n-1.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point v) const { return images_[v]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

enum class Parity { Even, Odd };

Permutation compose(const Permutation& first, const Permutation& second);
Parity parity(const Permutation& p);

/// Moved points, ascending.
std::vector<Point> support(const Permutation& p);

/// "(1 2 3)(4 5)"; the identity prints as "()".
std::string to_cycle_string(const Permutation& p);

/// Parses cycle notation with 1-based, whitespace-separated points.
Permutation parse_cycles(std::string_view text, std::size_t degree);

}  // namespace sepcert
