#include "sepcert/problem.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <set>

namespace sepcert {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

bool blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// A slice of one source line that remembers where it started.
struct Span {
  std::string_view text;
  std::size_t line = 1;
  std::size_t column = 1;  // of text[0]

  Span sub(std::size_t from, std::size_t count = std::string_view::npos) const {
    return {text.substr(from, count), line, column + from};
  }

  Span trimmed() const {
    std::size_t a = 0, b = text.size();
    while (a < b && blank(text[a])) ++a;
    while (b > a && blank(text[b - 1])) --b;
    return sub(a, b - a);
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    throw ParseError(line, column + offset, message);
  }
};

long parse_int(const Span& s, std::size_t from, std::size_t to) {
  long v = 0;
  auto [end, ec] = std::from_chars(s.text.data() + from, s.text.data() + to, v);
  if (ec != std::errc() || end != s.text.data() + to) s.fail(from, "expected an integer");
  return v;
}

struct LocatedWord {
  Word word;
  std::vector<std::size_t> columns;  // per letter
  std::size_t line = 1;
};

LocatedWord parse_word_span(const Span& raw) {
  const Span s = raw.trimmed();
  LocatedWord out;
  out.line = s.line;
  if (s.text.empty()) s.fail(0, "expected a word");
  if (s.text == "1") return out;

  std::size_t i = 0;
  while (i < s.text.size()) {
    while (i < s.text.size() && blank(s.text[i])) ++i;
    if (i == s.text.size()) break;
    const std::size_t start = i;
    const char g = s.text[i];
    if (g != 'x' && g != 'y') s.fail(i, "expected a generator x<i> or y<j>");
    ++i;
    const std::size_t digits = i;
    while (i < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[i]))) ++i;
    if (i == digits) s.fail(i, "expected a generator index");
    const long index = parse_int(s, digits, i);
    if (index < 1) s.fail(digits, "generator indices start at 1");
    long exponent = 1;
    if (i < s.text.size() && s.text[i] == '^') {
      const std::size_t e = ++i;
      if (i < s.text.size() && s.text[i] == '-') ++i;
      const std::size_t first_digit = i;
      while (i < s.text.size() && std::isdigit(static_cast<unsigned char>(s.text[i]))) ++i;
      if (i == first_digit) s.fail(e, "expected an exponent");
      exponent = parse_int(s, e, i);
    }
    if (i < s.text.size() && !blank(s.text[i])) s.fail(i, "unexpected character '" + std::string(1, s.text[i]) + "'");
    const Letter l{g == 'x' ? Factor::X : Factor::Y, static_cast<int>(index), exponent < 0 ? -1 : 1};
    for (long k = 0; k < (exponent < 0 ? -exponent : exponent); ++k) {
      out.word.push_back(l);
      out.columns.push_back(s.column + start);
    }
  }
  return out;
}

struct Entry {
  Span key;
  Span value;
};

Entry split_entry(const Span& line) {
  const std::size_t eq = line.text.find('=');
  if (eq == std::string_view::npos) line.fail(0, "expected 'key = value'");
  Entry e{line.sub(0, eq).trimmed(), line.sub(eq + 1).trimmed()};
  if (e.key.text.empty()) line.fail(0, "missing key");
  if (e.value.text.empty()) line.fail(eq + 1, "missing value");
  return e;
}

/// Index of a key "<prefix><digits>", or nullopt.
std::optional<long> numbered_key(const Span& key, char prefix) {
  if (key.text.size() < 2 || key.text[0] != prefix) return std::nullopt;
  for (char c : key.text.substr(1))
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return parse_int(key, 1, key.text.size());
}

}  // namespace

Word parse_word(std::string_view text) { return parse_word_span({text, 1, 1}).word; }

ProblemSpec parse_problem(std::string_view text) {
  enum class Section { None, Free, Finite, Subgroup, Separate };
  Section section = Section::None;
  std::set<Section> seen;

  std::optional<long> rank;
  std::optional<long> degree;
  std::optional<Span> gens;
  std::vector<LocatedWord> subgroup, separate;
  std::set<long> h_keys, g_keys;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    Span line{raw, line_no, 1};
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) line = line.sub(0, hash);
    line = line.trimmed();
    if (line.text.empty()) continue;

    if (line.text.front() == '[') {
      if (line.text.back() != ']') line.fail(line.text.size() - 1, "expected ']'");
      const std::string_view name = line.sub(1, line.text.size() - 2).trimmed().text;
      static const std::map<std::string_view, Section> names{
          {"free", Section::Free}, {"finite", Section::Finite}, {"subgroup", Section::Subgroup},
          {"separate", Section::Separate}};
      auto it = names.find(name);
      if (it == names.end()) line.fail(1, "unknown section '" + std::string(name) + "'");
      if (!seen.insert(it->second).second) line.fail(1, "duplicate section '" + std::string(name) + "'");
      section = it->second;
      continue;
    }

    const Entry e = split_entry(line);
    const std::string_view key = e.key.text;
    switch (section) {
      case Section::None:
        line.fail(0, "entry outside any section");
      case Section::Free:
        if (key != "rank") e.key.fail(0, "unknown key '" + std::string(key) + "' in [free]");
        if (rank) e.key.fail(0, "duplicate key 'rank'");
        rank = parse_int(e.value, 0, e.value.text.size());
        if (*rank < 2) e.value.fail(0, "rank must be at least 2");
        break;
      case Section::Finite:
        if (key == "degree") {
          if (degree) e.key.fail(0, "duplicate key 'degree'");
          degree = parse_int(e.value, 0, e.value.text.size());
          if (*degree < 1) e.value.fail(0, "degree must be at least 1");
        } else if (key == "gens") {
          if (gens) e.key.fail(0, "duplicate key 'gens'");
          gens = e.value;
        } else {
          e.key.fail(0, "unknown key '" + std::string(key) + "' in [finite]");
        }
        break;
      case Section::Subgroup:
      case Section::Separate: {
        const bool sub = section == Section::Subgroup;
        const auto index = numbered_key(e.key, sub ? 'h' : 'g');
        if (!index) e.key.fail(0, std::string("expected a key ") + (sub ? "h<i>" : "g<j>"));
        if (!(sub ? h_keys : g_keys).insert(*index).second) e.key.fail(0, "duplicate key '" + std::string(key) + "'");
        (sub ? subgroup : separate).push_back(parse_word_span(e.value));
        break;
      }
    }
  }

  if (!rank) throw ParseError(1, 1, "missing [free] section with a rank");

  std::vector<Permutation> generators;
  if (gens) {
    if (!degree) gens->fail(0, "gens given without a degree");
    std::size_t from = 0;
    while (from <= gens->text.size()) {
      std::size_t semi = gens->text.find(';', from);
      if (semi == std::string_view::npos) semi = gens->text.size();
      const Span item = gens->sub(from, semi - from).trimmed();
      from = semi + 1;
      if (item.text.empty()) {
        if (semi == gens->text.size() && !generators.empty()) break;
        item.fail(0, "empty generator entry");
      }
      const std::size_t colon = item.text.find(':');
      if (colon == std::string_view::npos) item.fail(0, "expected 'y<j>: <cycles>'");
      const Span name = item.sub(0, colon).trimmed();
      const auto index = numbered_key(name, 'y');
      if (!index) name.fail(0, "expected a generator name y<j>");
      if (*index != static_cast<long>(generators.size()) + 1)
        name.fail(0, "expected y" + std::to_string(generators.size() + 1));
      const Span cycles = item.sub(colon + 1).trimmed();
      try {
        generators.push_back(parse_cycles(cycles.text, static_cast<std::size_t>(*degree)));
      } catch (const PermutationError& err) {
        cycles.fail(0, err.what());
      }
    }
  }

  ProblemSpec spec;
  spec.free = FreeFactor::of_rank(static_cast<int>(*rank));
  if (degree) spec.finite = FiniteGroupTable::enumerate(static_cast<std::size_t>(*degree), std::move(generators));

  for (auto* list : {&subgroup, &separate})
    for (const LocatedWord& w : *list) {
      for (std::size_t i = 0; i < w.word.size(); ++i) {
        const Letter l = w.word[i];
        const int limit = l.factor == Factor::X ? spec.free.rank : spec.finite.generator_count();
        if (l.index > limit) throw ParseError(w.line, w.columns[i], "unknown generator " + to_string(l.positive_form()));
      }
    }
  for (const LocatedWord& w : subgroup) spec.subgroup_words.push_back(w.word);
  for (const LocatedWord& w : separate) spec.separate_words.push_back(w.word);
  return spec;
}

std::vector<int> parse_sign_vector(std::string_view text) {
  std::vector<int> out;
  const Span all{text, 1, 1};
  std::size_t from = 0;
  while (from <= text.size()) {
    std::size_t comma = text.find(',', from);
    if (comma == std::string_view::npos) comma = text.size();
    const Span item = all.sub(from, comma - from).trimmed();
    if (item.text == "1" || item.text == "+1") {
      out.push_back(1);
    } else if (item.text == "-1") {
      out.push_back(-1);
    } else {
      item.fail(0, "expected +1 or -1");
    }
    from = comma + 1;
  }
  return out;
}

}  // namespace sepcert
