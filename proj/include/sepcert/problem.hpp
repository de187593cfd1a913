#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sepcert/stallings.hpp"

namespace sepcert {

/// Malformed problem text; line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// "1" or whitespace-separated terms gen("^"int)?, e.g. "y1 x1^-1 y1".
/// Positions in errors are columns of `text` on line 1.
Word parse_word(std::string_view text);

/// Section-headed problem file:
///
///   [free]      rank = 2
///   [finite]    degree = 3
///               gens = y1: (1 2 3); y2: (1 2)
///   [subgroup]  h1 = y1 x1^-1 y1
///   [separate]  g1 = y2
///
/// '#' starts a comment. Without a [finite] section G is trivial.
ProblemSpec parse_problem(std::string_view text);

/// Comma-separated signs such as "+1,-1,1".
std::vector<int> parse_sign_vector(std::string_view text);

}  // namespace sepcert
