#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "chaoslab/instance_io.hpp"

namespace chaoslab {

struct AnalyzeOptions {
  std::vector<std::string> ops;
  /// Index into the document's ideal list. When unset, ideal-dependent
  /// analyses run over every listed ideal.
  std::optional<int> ideal_index;
  long long window{50};
  long long bound{20};
  /// Timing lines are opt-in; with them off, reports are byte-identical
  /// across runs for identical inputs.
  bool timing{false};
};

struct Report {
  nlohmann::ordered_json machine;
  std::string text;
  /// 0 success, 1 a verification-style analysis found a counterexample,
  /// 2 input error (raised as exceptions before a Report exists).
  int exit_code{0};

  std::string rendered(const std::string& format) const;
};

/// Dispatches the requested analyses to the owning engine. Unknown ops or
/// ops the instance kind does not support raise Errc::unsupported_command.
Report run_analysis(const InstanceDocument& doc, const AnalyzeOptions& options);

}  // namespace chaoslab
