#pragma once

// Problem fixtures shared by the stallings, kurosh and acceptance suites.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sepcert/stallings.hpp"

namespace fixtures {

using namespace sepcert;
using oracle::cycles;

inline const Letter X1 = Letter::x(1);
inline const Letter X2 = Letter::x(2);
inline const Letter X3 = Letter::x(3);
inline const Letter Y1 = Letter::y(1);
inline const Letter Y2 = Letter::y(2);

inline Letter inv(Letter l) { return l.inverse(); }

inline FiniteGroupTable z2() { return FiniteGroupTable::enumerate(2, {cycles(2, {{1, 2}})}); }
inline FiniteGroupTable z3() { return FiniteGroupTable::enumerate(3, {cycles(3, {{1, 2, 3}})}); }
inline FiniteGroupTable s3() {
  return FiniteGroupTable::enumerate(3, {cycles(3, {{1, 2, 3}}), cycles(3, {{1, 2}})});
}

inline ProblemSpec problem(int rank, FiniteGroupTable g, std::vector<Word> h, std::vector<Word> sep = {}) {
  return ProblemSpec{FreeFactor::of_rank(rank), std::move(g), std::move(h), std::move(sep)};
}

/// The action of F_2 * Z/2 on the two cosets of ker(X1, X2 -> 1, Y1 -> 0).
inline oracle::Action kernel_action() {
  return {{cycles(2, {{1, 2}}), cycles(2, {{1, 2}})}, {Permutation::identity(2)}};
}

/// H = ker phi with the Reidemeister-Schreier generating set.
inline ProblemSpec kernel_problem() {
  return problem(2, z2(), oracle::stabilizer_generators(kernel_action()));
}

inline ProblemSpec figure2_problem() {
  return problem(2, s3(), {{Y1, inv(X1), Y1}, {X1, X2, inv(X1)}}, {{Y2}});
}

struct Fixture {
  std::string name;
  ProblemSpec spec;
  std::optional<oracle::Action> action;  // H = stabilizer of point 0 when present
};

inline std::vector<Fixture> membership_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"trivial", problem(2, z2(), {}), std::nullopt});
  out.push_back({"<x1^2>", problem(2, z2(), {{X1, X1}}), std::nullopt});
  out.push_back({"<x1 x2 x1^-1>", problem(2, z2(), {{X1, X2, inv(X1)}}), std::nullopt});
  out.push_back({"<y1>", problem(2, z2(), {{Y1}}), std::nullopt});
  out.push_back({"<y1, x1 y1 x1^-1>", problem(2, z2(), {{Y1}, {X1, Y1, inv(X1)}}), std::nullopt});
  out.push_back({"figure 2", figure2_problem(), std::nullopt});
  out.push_back({"<x1 y1 x1^-1 y1> in Z/3", problem(2, z3(), {{X1, Y1, inv(X1), Y1}}), std::nullopt});
  out.push_back({"<x1^2, x2 y1>", problem(2, z2(), {{X1, X1}, {X2, Y1}}), std::nullopt});
  out.push_back({"<y1 y2> in S_3", problem(2, s3(), {{Y1, Y2}}), std::nullopt});
  out.push_back({"ker phi", kernel_problem(), kernel_action()});

  oracle::Action deg3{{cycles(3, {{1, 2, 3}}), cycles(3, {{1, 2}})}, {cycles(3, {{2, 3}})}};
  out.push_back({"stabilizer, degree 3", problem(2, z2(), oracle::stabilizer_generators(deg3)), deg3});

  oracle::Action deg4{{cycles(4, {{1, 2, 3, 4}}), Permutation::identity(4)},
                      {cycles(4, {{1, 2, 3}}), cycles(4, {{1, 2}})}};
  out.push_back({"stabilizer in F_2 * S_3", problem(2, s3(), oracle::stabilizer_generators(deg4)), deg4});
  return out;
}

/// A random problem over one of four small groups; may well be rejected.
inline ProblemSpec random_problem(std::mt19937& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int rank = pick(2, 3);
  FiniteGroupTable g;
  switch (pick(0, 3)) {
    case 1: g = z2(); break;
    case 2: g = z3(); break;
    case 3: g = s3(); break;
    default: break;
  }
  auto word = [&](int max_length) {
    Word w;
    const int length = pick(1, max_length);
    for (int i = 0; i < length; ++i) {
      const int sign = pick(0, 1) ? 1 : -1;
      const bool y = g.generator_count() > 0 && pick(0, 2) == 0;
      w.push_back(y ? Letter::y(pick(1, g.generator_count()), sign) : Letter::x(pick(1, rank), sign));
    }
    return w;
  };
  std::vector<Word> h, sep;
  for (int i = pick(0, 2); i > 0; --i) h.push_back(word(4));
  for (int i = pick(1, 2); i > 0; --i) sep.push_back(word(4));
  return problem(rank, std::move(g), std::move(h), std::move(sep));
}

/// True when every separator lies outside H and the hypothesis check passes.
inline bool accepted(const ProblemSpec& spec) {
  const Gamma g = build_gamma(spec);
  for (Vertex v : g.separator_endpoints)
    if (v == g.graph.base()) return false;
  return hypothesis_check(g.graph, spec.free.rank).kind != HypothesisVerdict::Kind::NotApplicable;
}

/// Exhaustive membership oracle: true iff w's normal form lies in the
/// precomputed ball of H (or w fixes point 0 for action fixtures).
class MembershipOracle {
 public:
  MembershipOracle(const Fixture& f, std::size_t length_cap) : fixture_(f) {
    if (!f.action) ball_ = oracle::subgroup_ball(f.spec.subgroup_words, f.spec.finite, length_cap);
  }

  bool contains(const Word& w) const {
    if (fixture_.action) return fixture_.action->act(0, w) == 0;
    return ball_.count(oracle::normal_form(w, fixture_.spec.finite)) > 0;
  }

 private:
  const Fixture& fixture_;
  std::set<oracle::NormalForm> ball_;
};

}  // namespace fixtures
