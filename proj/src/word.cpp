#include "sepcert/word.hpp"

#include <algorithm>

namespace sepcert {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

std::string to_string(Letter l) {
  std::string s = (l.factor == Factor::X ? "x" : "y") + std::to_string(l.index);
  if (!l.positive()) s += "^-1";
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += (w[i].factor == Factor::X ? "x" : "y") + std::to_string(w[i].index);
    const long exponent = w[i].positive() ? run : -run;
    if (exponent != 1) out += "^" + std::to_string(exponent);
    i = j;
  }
  return out;
}

std::vector<Letter> alphabet(Factor f, int generator_count) {
  std::vector<Letter> out;
  for (int i = 1; i <= generator_count; ++i) {
    out.push_back({f, i, 1});
    out.push_back({f, i, -1});
  }
  return out;
}

bool in_factor(const Word& w, Factor f) {
  return std::all_of(w.begin(), w.end(), [f](const Letter& l) { return l.factor == f; });
}

}  // namespace sepcert
