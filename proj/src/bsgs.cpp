#include "sepcert/bsgs.hpp"

#include <algorithm>
#include <deque>

namespace sepcert {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i) out *= i;
  return out;
}

OrbitPartition orbit_transitive(std::span<const Permutation> generators, std::size_t degree) {
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw PermutationError("generator degree mismatch");
  OrbitPartition out;
  std::vector<bool> seen(degree, false);
  for (Point start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Permutation& g : generators) {
        Point w = g(orbit[i]);
        if (!seen[w]) {
          seen[w] = true;
          orbit.push_back(w);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.orbits.push_back(std::move(orbit));
  }
  out.transitive = out.orbits.size() <= 1;
  return out;
}

namespace {

Point first_moved(const Permutation& p) {
  for (Point v = 0; v < p.degree(); ++v)
    if (p(v) != v) return v;
  return 0;
}

}  // namespace

StabilizerChain::StabilizerChain(std::span<const Permutation> generators, std::size_t degree) : degree_(degree) {
  std::vector<Permutation> gens;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw PermutationError("generator degree mismatch");
    if (!g.is_identity() && std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  auto fixes_base = [&](const Permutation& g, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
      if (g(levels_[l].point) != levels_[l].point) return false;
    return true;
  };

  for (const Permutation& g : gens) {
    if (fixes_base(g, levels_.size())) {
      Level level;
      level.point = first_moved(g);
      levels_.push_back(std::move(level));
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const Permutation& g : gens)
      if (fixes_base(g, l)) levels_[l].generators.push_back(g);
    rebuild_orbit(levels_[l]);
  }

  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    bool extended = false;
    for (std::size_t b = 0; b < levels_[level].orbit.size() && !extended; ++b) {
      const Point beta = levels_[level].orbit[b];
      for (std::size_t x = 0; x < levels_[level].generators.size() && !extended; ++x) {
        const Level& lv = levels_[level];
        const Permutation& gen = lv.generators[x];
        const Point image = gen(beta);
        Permutation schreier = lv.transversal[static_cast<std::size_t>(lv.slot[beta])] * gen *
                               lv.inverse_transversal[static_cast<std::size_t>(lv.slot[image])];
        if (schreier.is_identity()) continue;
        auto [residue, depth] = strip(std::move(schreier), level + 1);
        if (depth == levels_.size() && residue.is_identity()) continue;
        if (depth == levels_.size()) {
          Level fresh;
          fresh.point = first_moved(residue);
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = level + 1; l <= depth; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(depth);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

void StabilizerChain::rebuild_orbit(Level& level) const {
  level.orbit.assign(1, level.point);
  level.slot.assign(degree_, -1);
  level.transversal.assign(1, Permutation::identity(degree_));
  level.inverse_transversal.assign(1, Permutation::identity(degree_));
  level.slot[level.point] = 0;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const Point gamma = level.orbit[i];
    for (const Permutation& g : level.generators) {
      const Point image = g(gamma);
      if (level.slot[image] >= 0) continue;
      Permutation u = level.transversal[static_cast<std::size_t>(level.slot[gamma])] * g;
      level.slot[image] = static_cast<int>(level.transversal.size());
      level.inverse_transversal.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
      level.orbit.push_back(image);
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Point beta = g(levels_[l].point);
    const int slot = levels_[l].slot[beta];
    if (slot < 0) return {std::move(g), l};
    g = g * levels_[l].inverse_transversal[static_cast<std::size_t>(slot)];
  }
  return {std::move(g), levels_.size()};
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  for (const Level& l : levels_) out.push_back(l.point);
  return out;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> out;
  for (const Level& l : levels_) out.push_back(l.orbit.size());
  return out;
}

std::vector<Permutation> StabilizerChain::strong_generators() const {
  std::vector<Permutation> out;
  for (const Level& l : levels_)
    for (const Permutation& g : l.generators)
      if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

BigInt StabilizerChain::order() const {
  BigInt out = 1;
  for (const Level& l : levels_) out *= l.orbit.size();
  return out;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, depth] = strip(p, 0);
  return depth == levels_.size() && residue.is_identity();
}

BigInt bsgs_order(std::span<const Permutation> generators, std::size_t degree) {
  return StabilizerChain(generators, degree).order();
}

const char* to_string(ImageType t) {
  switch (t) {
    case ImageType::Alternating: return "alternating";
    case ImageType::Symmetric: return "symmetric";
    case ImageType::Other: break;
  }
  return "other";
}

Recognition recognize_alt_sym(std::span<const Permutation> generators, std::size_t degree) {
  Recognition out;
  out.order = bsgs_order(generators, degree);
  out.all_even = std::all_of(generators.begin(), generators.end(),
                             [](const Permutation& g) { return parity(g) == Parity::Even; });
  const BigInt full = factorial(static_cast<unsigned>(degree));
  if (!out.all_even && out.order == full)
    out.type = ImageType::Symmetric;
  else if (out.all_even && out.order * 2 == full)
    out.type = ImageType::Alternating;
  return out;
}

}  // namespace sepcert
