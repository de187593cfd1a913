#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "sepcert/certificate.hpp"
#include "sepcert/dot.hpp"
#include "sepcert/problem.hpp"

using namespace sepcert;
using namespace fixtures;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(SEPCERT_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Line and column of the ParseError thrown by `text`.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("no parse error");
  return {0, 0};
}

/// Image of `point` (1-based) under a cycle string of the given degree.
Point apply(const std::string& cycles, std::size_t degree, Point point) {
  return parse_cycles(cycles, degree)(point - 1) + 1;
}

Point act(const nlohmann::ordered_json& doc, const Word& w, Point point) {
  const std::size_t p = doc["degree"];
  for (Letter l : w) {
    const std::string name = to_string(l.positive_form());
    const Permutation q = parse_cycles(doc["generator_images"][name].get<std::string>(), p);
    point = (l.positive() ? q : q.inverse())(point - 1) + 1;
  }
  return point;
}

}  // namespace

TEST_CASE("parse_word") {
  CHECK(parse_word("y1 x1^-1 y1") == Word{Y1, inv(X1), Y1});
  CHECK(parse_word("1").empty());
  CHECK(parse_word("x1^2") == Word{X1, X1});
  CHECK(parse_word("  x2^-3  y1 ") == Word{inv(X2), inv(X2), inv(X2), Y1});
  CHECK(parse_word("x1^0").empty());
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("z1"), ParseError);
  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^"), ParseError);
  CHECK_THROWS_AS(parse_word("x1^-"), ParseError);
  CHECK_THROWS_AS(parse_word("x0"), ParseError);
  CHECK_THROWS_AS(parse_word("x1y1"), ParseError);
  try {
    parse_word("x1 q2");
  } catch (const ParseError& e) {
    CHECK(e.column() == 4);
  }
}

TEST_CASE("print(parse(w)) is the canonical spelling") {
  for (const Fixture& f : membership_fixtures())
    for (const auto* list : {&f.spec.subgroup_words, &f.spec.separate_words})
      for (const Word& w : *list) {
        CAPTURE(to_string(w));
        CHECK(parse_word(to_string(w)) == w);
        CHECK(to_string(parse_word(to_string(w))) == to_string(w));
      }
  CHECK(to_string(parse_word("x1 x1 y1^-1 y1^-1 x2")) == "x1^2 y1^-2 x2");
  CHECK(to_string(parse_word("1")) == "1");
}

TEST_CASE("parse_problem") {
  SUBCASE("figure 2 file") {
    const ProblemSpec spec = parse_problem(data("figure2.problem"));
    const ProblemSpec want = figure2_problem();
    CHECK(spec.free.rank == 2);
    CHECK(spec.finite.order() == 6);
    CHECK(spec.finite.generator_permutation(1) == want.finite.generator_permutation(1));
    CHECK(spec.finite.generator_permutation(2) == want.finite.generator_permutation(2));
    CHECK(spec.subgroup_words == want.subgroup_words);
    CHECK(spec.separate_words == want.separate_words);
  }
  SUBCASE("no finite section means trivial G") {
    const ProblemSpec spec = parse_problem("[free]\nrank = 3\n[separate]\ng1 = x3\n");
    CHECK(spec.finite.order() == 1);
    CHECK(spec.finite.generator_count() == 0);
    CHECK(spec.separate_words == std::vector<Word>{{X3}});
  }
  SUBCASE("comments and blank lines") {
    const ProblemSpec spec = parse_problem("# header\n\n[free]  # the free factor\nrank = 2 # two\n[subgroup]\nh1 = 1\n");
    CHECK(spec.subgroup_words == std::vector<Word>{{}});
  }
  SUBCASE("errors carry line and column") {
    CHECK(error_at("[free]\nrank = 1\n") == std::pair<std::size_t, std::size_t>{2, 8});
    CHECK(error_at("[free]\nrank = 2\n[subgroup]\nh1 = x1 x3\n") == std::pair<std::size_t, std::size_t>{4, 9});
    CHECK(error_at("[free]\nrank = 2\n[subgroup]\nh1 = y1\n") == std::pair<std::size_t, std::size_t>{4, 6});
    CHECK(error_at("[free]\nrank = 2\n[bogus]\n").first == 3);
    CHECK(error_at("rank = 2\n").first == 1);
    CHECK(error_at("[free]\nrank = 2\n[finite]\ndegree = 3\ngens = y1: (1 4)\n") ==
          std::pair<std::size_t, std::size_t>{5, 12});
    CHECK(error_at("[free]\nrank = 2\n[finite]\ndegree = 3\ngens = y2: (1 2)\n").first == 5);
    CHECK(error_at("[free]\nrank = 2\n[subgroup]\nh1 = x1\nh1 = x2\n").first == 5);
    CHECK(error_at("[free]\nrank = 2\n[free]\n").first == 3);
    CHECK(error_at("[subgroup]\nh1 = x1\n").first == 1);
  }
  SUBCASE("sign vectors") {
    CHECK(parse_sign_vector("+1,-1,1") == std::vector<int>{1, -1, 1});
    CHECK_THROWS_AS(parse_sign_vector("+1,2"), ParseError);
    CHECK_THROWS_AS(parse_sign_vector(""), ParseError);
  }
}

TEST_CASE("run_separate examples") {
  SUBCASE("trivial H, separate x1") {
    const RunResult r = run_separate(parse_problem(data("trivial_x1.problem")));
    CHECK(r.exit_code == ExitCode::Success);
    CHECK(r.document["degree"] == 7);
    const std::string type = r.document["image_type"];
    CHECK((type == "alternating" || type == "symmetric"));
    CHECK(r.document["separations"][0]["separated"] == true);
  }
  SUBCASE("figure 2") {
    const ProblemSpec spec = figure2_problem();
    const RunResult r = run_separate(spec);
    REQUIRE(r.exit_code == ExitCode::Success);
    const auto& doc = r.document;
    const Point base = doc["base"];
    for (const Word& h : spec.subgroup_words) CHECK(act(doc, h, base) == base);
    for (const Word& g : spec.separate_words) CHECK(act(doc, g, base) != base);
    CHECK(doc["separations"][0]["word"] == "y2");
    CHECK(doc["jordan"]["move_support"].get<std::size_t>() < doc["jordan"]["support_bound"].get<std::size_t>());
    for (Stage s : {Stage::Gamma, Stage::GammaStar, Stage::Precover, Stage::Cover}) CHECK_NOTHROW(r.stage(s));
  }
  SUBCASE("ker phi") {
    const RunResult r = run_separate(kernel_problem());
    CHECK(r.exit_code == ExitCode::HypothesisRejected);
    CHECK(r.document["rejection"] == "HypothesisNotSatisfied");
    CHECK_NOTHROW(r.stage(Stage::Gamma));
    CHECK_THROWS_AS(r.stage(Stage::Cover), Error);
  }
  SUBCASE("kernel file agrees with the fixture") {
    const ProblemSpec spec = parse_problem(data("kernel.problem"));
    const ProblemSpec want = kernel_problem();
    CHECK(isomorphic_based(build_gamma(spec).graph, build_gamma(want).graph));
    CHECK(run_separate(spec).exit_code == ExitCode::HypothesisRejected);
  }
  SUBCASE("separator in H") {
    const RunResult r = run_separate(parse_problem(data("member.problem")));
    CHECK(r.exit_code == ExitCode::MembershipRejected);
    CHECK(r.document["rejection"] == "GammaClosed");
    CHECK(r.document["index"] == 2);
  }
  SUBCASE("prime cap") {
    RunOptions o;
    o.cover.max_prime = 7;
    const RunResult r = run_separate(figure2_problem(), o);
    CHECK(r.exit_code == ExitCode::RecognitionExhausted);
  }
  SUBCASE("full verification") {
    RunOptions o;
    o.verify = VerifyLevel::Full;
    o.kurosh_length = 4;
    const RunResult r = run_separate(figure2_problem(), o);
    REQUIRE(r.exit_code == ExitCode::Success);
    CHECK(r.document["verification"]["kurosh"]["counterexamples"] == 0);
    CHECK(r.document["verification"]["kurosh"]["free_rank"] == 1);
  }
}

TEST_CASE("certificate cycle strings use the cover's vertex numbering") {
  const ProblemSpec spec = figure2_problem();
  const RunResult r = run_separate(spec);
  const LabeledGraph& cover = r.stage(Stage::Cover);
  const std::size_t p = r.document["degree"];
  for (Letter l : {X1, X2, Y1, Y2}) {
    const std::string cycles = r.document["generator_images"][to_string(l)];
    for (Vertex v = 0; v < p; ++v) CHECK(apply(cycles, p, static_cast<Point>(v + 1)) == *cover.follow(v, l) + 1);
  }
}

TEST_CASE("DOT export") {
  SUBCASE("single edge") {
    const std::string dot = to_dot(LabeledGraph(2, {{0, 1, X1}}, 0), "g");
    CHECK(dot ==
          "digraph \"g\" {\n"
          "  node [shape=circle];\n"
          "  1 [shape=doublecircle];\n"
          "  2;\n"
          "  1 -> 2 [label=\"x1\"];\n"
          "}\n");
  }
  SUBCASE("W_4") {
    const std::string dot = to_dot(gadget_w({4, {1, 1}, 1, 2}, 2), "w4");
    std::size_t x1 = 0, x2_loops = 0, nodes = 0;
    std::istringstream lines(dot);
    for (std::string line; std::getline(lines, line);) {
      if (line.find("[label=\"x1\"]") != std::string::npos) ++x1;
      if (line.find("[label=\"x2\"]") != std::string::npos) {
        const auto arrow = line.find(" -> ");
        const std::string from = line.substr(2, arrow - 2);
        const std::string to = line.substr(arrow + 4, line.find(' ', arrow + 4) - arrow - 4);
        if (from == to) ++x2_loops;
      }
      if (line.find("->") == std::string::npos && line.find(';') != std::string::npos &&
          line.find("node") == std::string::npos)
        ++nodes;
    }
    CHECK(nodes == 4);
    CHECK(x1 == 3);
    CHECK(x2_loops == 4);
  }
  SUBCASE("negative labels are printed in positive orientation") {
    const std::string dot = to_dot(LabeledGraph(2, {{0, 1, inv(Y2)}}, 1), "g");
    CHECK(dot.find("2 -> 1 [label=\"y2\"]") != std::string::npos);
    CHECK(dot.find("2 [shape=doublecircle]") != std::string::npos);
  }
  SUBCASE("deterministic") {
    const RunResult a = run_separate(figure2_problem());
    const RunResult b = run_separate(figure2_problem());
    CHECK(render(a) == render(b));
    for (Stage s : {Stage::Gamma, Stage::GammaStar, Stage::Precover, Stage::Cover})
      CHECK(to_dot(a.stage(s), to_string(s)) == to_dot(b.stage(s), to_string(s)));
  }
}
