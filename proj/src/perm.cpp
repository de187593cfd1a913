#include "sepcert/perm.hpp"

#include <cctype>
#include <numeric>

namespace sepcert {

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || hit[v]) throw PermutationError("images do not form a bijection");
    hit[v] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (std::size_t v = 0; v < images_.size(); ++v) out.images_[images_[v]] = static_cast<Point>(v);
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw PermutationError("degree mismatch in composition");
  Permutation out = a;
  for (std::size_t v = 0; v < a.degree(); ++v) out.images_[v] = b.images_[a.images_[v]];
  return out;
}

Permutation compose(const Permutation& first, const Permutation& second) { return first * second; }

Parity parity(const Permutation& p) {
  std::vector<bool> seen(p.degree(), false);
  std::size_t transpositions = 0;
  for (Point v = 0; v < p.degree(); ++v) {
    if (seen[v]) continue;
    std::size_t length = 0;
    for (Point w = v; !seen[w]; w = p(w)) {
      seen[w] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<Point> support(const Permutation& p) {
  std::vector<Point> out;
  for (Point v = 0; v < p.degree(); ++v)
    if (p(v) != v) out.push_back(v);
  return out;
}

std::string to_cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.degree(), false);
  for (Point v = 0; v < p.degree(); ++v) {
    if (seen[v] || p(v) == v) continue;
    out += '(';
    for (Point w = v; !seen[w]; w = p(w)) {
      seen[w] = true;
      if (w != v) out += ' ';
      out += std::to_string(w + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) {
    throw PermutationError(what + " at offset " + std::to_string(i) + " in \"" + std::string(text) + "\"");
  };

  skip_space();
  if (i == text.size()) fail("empty cycle notation");
  while (true) {
    skip_space();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a point");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) fail("point exceeds degree " + std::to_string(degree));
        ++i;
      }
      if (value == 0) fail("points are 1-based");
      if (used[value - 1]) fail("point " + std::to_string(value) + " repeated");
      used[value - 1] = true;
      cycle.push_back(static_cast<Point>(value - 1));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

}  // namespace sepcert
