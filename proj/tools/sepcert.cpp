#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sepcert/certificate.hpp"
#include "sepcert/dot.hpp"
#include "sepcert/problem.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sepcert::Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit_dot(const sepcert::RunResult& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [stage, graph] : r.stages) {
    const std::string name = sepcert::to_string(stage);
    sepcert::export_dot(graph, name, (std::filesystem::path(dir) / (name + ".dot")).string());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Separating surjections onto alternating and symmetric groups for subgroups of F_r * G"};
  app.require_subcommand(1);

  CLI::App* separate = app.add_subcommand("separate", "Certify that the g_j lie outside H");
  std::string problem_path;
  std::string dot_dir;
  std::string signs;
  std::size_t max_prime = 1000;
  std::string level = "fast";
  separate->add_option("file", problem_path, "Problem file")->required();
  separate->add_option("--emit-dot", dot_dir, "Write one DOT file per computed stage into this directory");
  separate->add_option("--sign-vector", signs, "Signs s_1..s_r of the V_s gadget, e.g. +1,-1");
  separate->add_option("--max-prime", max_prime, "Largest prime degree to try")->check(CLI::PositiveNumber);
  separate->add_option("--verify-level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const sepcert::ProblemSpec spec = sepcert::parse_problem(slurp(problem_path));
    sepcert::RunOptions options;
    options.cover.max_prime = max_prime;
    if (!signs.empty()) options.cover.signs = sepcert::parse_sign_vector(signs);
    options.verify = level == "full" ? sepcert::VerifyLevel::Full : sepcert::VerifyLevel::Fast;

    const sepcert::RunResult r = sepcert::run_separate(spec, options);
    if (!dot_dir.empty()) emit_dot(r, dot_dir);
    std::cout << sepcert::render(r);
    return static_cast<int>(r.exit_code);
  } catch (const sepcert::CertificateError& e) {
    std::cerr << "sepcert: " << e.what() << "\n";
    return static_cast<int>(sepcert::ExitCode::CertificateInvalid);
  } catch (const std::exception& e) {
    std::cerr << "sepcert: " << e.what() << "\n";
    return static_cast<int>(sepcert::ExitCode::InputError);
  }
}
