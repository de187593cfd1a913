#include "sepcert/certificate.hpp"

#include <algorithm>

#include "sepcert/kurosh.hpp"

namespace sepcert {

const char* to_string(Stage s) {
  switch (s) {
    case Stage::Gamma: return "gamma";
    case Stage::GammaStar: return "gamma_star";
    case Stage::Precover: return "precover";
    case Stage::Cover: break;
  }
  return "cover";
}

const LabeledGraph& RunResult::stage(Stage s) const {
  auto it = stages.find(s);
  if (it == stages.end()) throw Error(std::string("stage ") + to_string(s) + " was not computed");
  return it->second;
}

std::string render(const RunResult& r) { return r.document.dump(2) + "\n"; }

namespace {

using json = nlohmann::ordered_json;

void require(bool ok, const std::string& what) {
  if (!ok) throw CertificateError("certificate self-check failed: " + what);
}

std::string letter_name(Factor f, int i) { return (f == Factor::X ? "x" : "y") + std::to_string(i); }

json full_verification(const ProblemSpec& spec, const LabeledGraph& gamma, const SeparatingCover& c,
                       std::size_t kurosh_length) {
  const KuroshDecomposition d = kurosh_decompose(gamma, spec.finite);
  const IntersectionReport report = verify_intersection(gamma, spec.finite, spec.free.rank, d, kurosh_length);
  require(report.ok(), "factor intersection counterexample");
  require(d.delta.connected() && d.free_rank + d.delta.vertex_count() == d.delta.edge_pair_count() + 1,
          "free rank formula");

  const LabeledGraph& cover = c.cover.graph;
  require(is_embedding(gamma, cover, c.cover.embedding), "gamma embeds in the cover");
  for (const Component& y : components(cover, Factor::Y))
    require(isomorphic_based(y.graph, embed_y_component(spec.finite, y.graph).cover.graph),
            "Y-component is a coset graph");

  const auto words = element_words(spec.finite);
  std::size_t relations = 0;
  for (Element e = 0; e < spec.finite.order(); ++e)
    for (int j = 1; j <= spec.finite.generator_count(); ++j) {
      Word longer = words[e];
      longer.push_back(Letter::y(j));
      const Word& shorter = words[spec.finite.multiply(e, spec.finite.generator(j))];
      for (Point v = 0; v < cover.vertex_count(); ++v)
        require(c.images.act(v, longer) == c.images.act(v, shorter), "y-images respect the relations of G");
      ++relations;
    }

  json k;
  k["factors"] = d.factors.size();
  k["free_rank"] = d.free_rank;
  k["length_bound"] = kurosh_length;
  k["words_checked"] = report.checked;
  k["counterexamples"] = report.counterexamples.size();
  json v;
  v["level"] = "full";
  v["kurosh"] = std::move(k);
  v["relations_checked"] = relations;
  v["embedding"] = true;
  v["coset_components"] = true;
  return v;
}

}  // namespace

RunResult run_separate(const ProblemSpec& spec, const RunOptions& options) {
  spec.validate();
  RunResult out;
  const Gamma gamma = build_gamma(spec);
  out.stages[Stage::Gamma] = gamma.graph;
  const Vertex base = gamma.graph.base();

  for (std::size_t j = 0; j < gamma.separator_endpoints.size(); ++j) {
    if (gamma.separator_endpoints[j] != base) continue;
    out.exit_code = ExitCode::MembershipRejected;
    out.document["rejection"] = "GammaClosed";
    out.document["index"] = j + 1;
    out.document["word"] = to_string(spec.separate_words[j]);
    return out;
  }

  const HypothesisVerdict verdict = hypothesis_check(gamma.graph, spec.free.rank);
  if (verdict.kind == HypothesisVerdict::Kind::NotApplicable) {
    out.exit_code = ExitCode::HypothesisRejected;
    out.document["rejection"] = "HypothesisNotSatisfied";
    out.document["reason"] = verdict.reason;
    return out;
  }

  SeparatingCover c;
  try {
    c = build_separating_cover(spec, gamma.graph, verdict, options.cover);
  } catch (const RecognitionExhausted& e) {
    out.exit_code = ExitCode::RecognitionExhausted;
    out.document["rejection"] = "RecognitionExhausted";
    out.document["reason"] = e.what();
    return out;
  }
  out.stages[Stage::GammaStar] = c.gamma_star;
  out.stages[Stage::Precover] = c.precover;
  out.stages[Stage::Cover] = c.cover.graph;

  // Self-checks of every certificate invariant.
  const std::size_t p = c.plan.p;
  const Point cover_base = static_cast<Point>(c.cover.graph.base());
  require(c.cover.graph.vertex_count() == p && p == c.plan.k + c.plan.n + 4, "degree identity");
  require(is_prime(p), "degree is prime");
  require(c.recognition.type != ImageType::Other, "image is alternating or symmetric");
  const BigInt full = factorial(static_cast<unsigned>(p));
  require(c.recognition.order == full ||
              (c.recognition.type == ImageType::Alternating && 2 * c.recognition.order == full),
          "image order");
  const std::vector<Permutation> gens = c.images.all();
  const bool transitive = orbit_transitive(gens, p).transitive;
  require(transitive, "action is transitive");
  const std::size_t move_support = support(c.images.x[c.params.move_letter - 1]).size();
  require(move_support > 0 && move_support < c.plan.k + 5, "move letter support");

  json& doc = out.document;
  doc["degree"] = p;
  doc["prime"] = true;
  doc["base"] = cover_base + 1;
  json images = json::object();
  for (std::size_t i = 0; i < c.images.x.size(); ++i)
    images[letter_name(Factor::X, static_cast<int>(i + 1))] = to_cycle_string(c.images.x[i]);
  for (std::size_t j = 0; j < c.images.y.size(); ++j)
    images[letter_name(Factor::Y, static_cast<int>(j + 1))] = to_cycle_string(c.images.y[j]);
  doc["generator_images"] = std::move(images);
  doc["image_type"] = to_string(c.recognition.type);
  doc["order"] = c.recognition.order.str();

  json subgroup = json::array();
  for (const Word& h : spec.subgroup_words) {
    const Point image = c.images.act(cover_base, h);
    require(image == cover_base, "h fixes the base: " + to_string(h));
    subgroup.push_back({{"word", to_string(h)}, {"base_image", image + 1}});
  }
  json separations = json::array();
  for (const Word& g : spec.separate_words) {
    const Point image = c.images.act(cover_base, g);
    require(image != cover_base, "separator moves the base: " + to_string(g));
    separations.push_back({{"word", to_string(g)}, {"base_image", image + 1}, {"separated", true}});
  }
  doc["subgroup"] = std::move(subgroup);
  doc["separations"] = std::move(separations);

  json jordan;
  jordan["prime_degree"] = true;
  jordan["transitive"] = transitive;
  jordan["move_letter"] = letter_name(Factor::X, c.params.move_letter);
  jordan["move_support"] = move_support;
  jordan["support_bound"] = c.plan.k + 5;
  doc["jordan"] = std::move(jordan);

  json gadgets;
  gadgets["connect_letter"] = letter_name(Factor::X, c.params.connect_letter);
  gadgets["sign_vector"] = c.params.s;
  gadgets["defect_a"] = c.defect_a + 1;
  gadgets["defect_b"] = c.defect_b + 1;
  doc["gadgets"] = std::move(gadgets);

  json stats;
  stats["k"] = c.plan.k;
  stats["n"] = c.plan.n;
  stats["retries"] = c.retries;
  stats["vertex_counts"] = {{"gamma", gamma.graph.vertex_count()},
                            {"gamma_star", c.gamma_star.vertex_count()},
                            {"precover", c.precover.vertex_count()},
                            {"cover", c.cover.graph.vertex_count()}};
  doc["stats"] = std::move(stats);

  if (options.verify == VerifyLevel::Full) {
    doc["verification"] = full_verification(spec, gamma.graph, c, options.kurosh_length);
  } else {
    doc["verification"] = {{"level", "fast"}};
  }
  return out;
}

}  // namespace sepcert
