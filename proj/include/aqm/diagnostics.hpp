#pragma once

#include <string>
#include <vector>

namespace aqm {

/// One structural violation found in a model or requirements document.
/// `code` is a stable snake_case identifier (e.g. "dangling_impact_activity"),
/// `path` points at the offending element (node path, "entity | attribute",
/// "impacts[3]", "ranking.cutoff", ...), `message` explains it.
struct Diagnostic {
  std::string code;
  std::string path;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

struct ValidationResult {
  std::vector<Diagnostic> diagnostics;

  [[nodiscard]] bool ok() const { return diagnostics.empty(); }
  [[nodiscard]] bool has(const std::string& code) const {
    for (const auto& d : diagnostics) {
      if (d.code == code) return true;
    }
    return false;
  }
};

}  // namespace aqm
