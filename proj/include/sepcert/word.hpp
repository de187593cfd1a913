#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sepcert {

/// Which free factor a generator belongs to: X generates F_r, Y generates G.
enum class Factor : std::uint8_t { X = 0, Y = 1 };

/// A generator symbol x_i^{+-1} or y_j^{+-1}.
///
/// Letters are totally ordered: X before Y, ascending index, positive sign
/// before negative. Every deterministic traversal in the library visits
/// letters in this order.
struct Letter {
  Factor factor = Factor::X;
  int index = 1;
  int sign = 1;

  static constexpr Letter x(int i, int s = 1) { return {Factor::X, i, s}; }
  static constexpr Letter y(int i, int s = 1) { return {Factor::Y, i, s}; }

  constexpr Letter inverse() const { return {factor, index, -sign}; }
  constexpr bool positive() const { return sign > 0; }
  constexpr Letter positive_form() const { return {factor, index, 1}; }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
    if (auto c = a.factor <=> b.factor; c != 0) return c;
    if (auto c = a.index <=> b.index; c != 0) return c;
    return b.sign <=> a.sign;
  }
};

using Word = std::vector<Letter>;

/// Formal inverse: reversed sequence of inverted letters.
Word inverse(const Word& w);

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

/// Cancels adjacent inverse pairs. Valid in F_r; in F_r * G it only removes
/// cancellations that hold in every factor.
Word free_reduce(const Word& w);

/// "x1", "y2^-1".
std::string to_string(Letter l);

/// Canonical spelling: runs of equal letters collapse to powers
/// ("x1^2 y1^-1"), the empty word prints as "1".
std::string to_string(const Word& w);

/// All letters of one factor with both signs, in letter order.
std::vector<Letter> alphabet(Factor f, int generator_count);

bool in_factor(const Word& w, Factor f);

}  // namespace sepcert
