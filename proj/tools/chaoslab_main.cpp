// chaoslab: batch analyses and verification suites for transformation
// semigroups, iterated systems and Fort transformation groups.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chaoslab/analysis.hpp"
#include "chaoslab/errors.hpp"
#include "chaoslab/instance_io.hpp"
#include "chaoslab/verify.hpp"

namespace {

std::vector<std::string> split_ops(const std::string& csv) {
  std::vector<std::string> out;
  std::string current;
  for (char c : csv) {
    if (c == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Li-Yorke chaos modulo an ideal: analyses and verification"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Run analyses on an instance");
  analyze->fallthrough();
  std::string analyze_path;
  std::string ops_csv;
  int ideal_index = -1;
  long long window = 50;
  long long bound = 20;
  bool timing = false;
  analyze->add_option("file", analyze_path, "Instance file")->required();
  analyze->add_option("--ops", ops_csv,
                      "Comma-separated: prox,asym,scrambled,max-scrambled,"
                      "chaotic,classes,co-decompose,oracle,claims")
      ->required();
  analyze->add_option("--ideal", ideal_index,
                      "Run ideal-dependent ops for this listed ideal only");
  analyze->add_option("--window", window, "Definition-oracle phase window");
  analyze->add_option("--bound", bound, "Definition-oracle coefficient box");
  analyze->add_flag("--timing", timing,
                    "Append timing (breaks byte-for-byte determinism)");

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->fallthrough();
  std::string suite;
  std::uint64_t seed = 42;
  int budget = 200;
  verify->add_option("suite", suite,
                     "One of: section3, product, fort-oracle, claims, all")
      ->required();
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--budget", budget, "Instance budget");

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "Formula vs definition oracle for a translation instance");
  oracle->fallthrough();
  std::string oracle_path;
  long long oracle_window = 50;
  long long oracle_bound = 20;
  oracle->add_option("file", oracle_path, "Translation instance file")
      ->required();
  oracle->add_option("--window", oracle_window, "Phase window half-width");
  oracle->add_option("--bound", oracle_bound, "Coefficient box half-width");

  CLI11_PARSE(app, argc, argv);

  try {
    chaoslab::Report report;
    if (analyze->parsed()) {
      chaoslab::AnalyzeOptions options;
      options.ops = split_ops(ops_csv);
      if (ideal_index >= 0) options.ideal_index = ideal_index;
      options.window = window;
      options.bound = bound;
      options.timing = timing;
      report = chaoslab::run_analysis(chaoslab::parse_instance(analyze_path),
                                      options);
    } else if (verify->parsed()) {
      report = chaoslab::run_verify(suite, seed, budget);
    } else {
      chaoslab::AnalyzeOptions options;
      options.ops = {"oracle"};
      options.window = oracle_window;
      options.bound = oracle_bound;
      report = chaoslab::run_analysis(chaoslab::parse_instance(oracle_path),
                                      options);
    }
    std::cout << report.rendered(format);
    return report.exit_code;
  } catch (const chaoslab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
