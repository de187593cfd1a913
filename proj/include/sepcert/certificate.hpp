#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "sepcert/wilton.hpp"

namespace sepcert {

/// Process exit codes of `sepcert separate`.
enum class ExitCode : int {
  Success = 0,
  InputError = 1,
  HypothesisRejected = 2,
  MembershipRejected = 3,
  RecognitionExhausted = 4,
  CertificateInvalid = 5,
};

/// A certificate self-check failed; the document is not emitted.
class CertificateError : public Error {
 public:
  using Error::Error;
};

enum class VerifyLevel { Fast, Full };

struct RunOptions {
  CoverOptions cover;
  VerifyLevel verify = VerifyLevel::Fast;
  std::size_t kurosh_length = 6;  // word length bound for the full level
};

enum class Stage { Gamma, GammaStar, Precover, Cover };

/// "gamma", "gamma_star", "precover", "cover".
const char* to_string(Stage s);

struct RunResult {
  ExitCode exit_code = ExitCode::Success;
  nlohmann::ordered_json document;
  std::map<Stage, LabeledGraph> stages;  // the stages computed before stopping

  /// Throws Error if the run stopped before `s`.
  const LabeledGraph& stage(Stage s) const;
};

/// Gamma, hypothesis check, cover, permutation images and recognition.
/// Rejections are reported in the document, not thrown; every invariant of a
/// certificate is re-checked before it is returned.
RunResult run_separate(const ProblemSpec& spec, const RunOptions& options = {});

/// The document as emitted on standard output.
std::string render(const RunResult& r);

}  // namespace sepcert
