#pragma once

#include <string>
#include <vector>

#include "aqm/diagnostics.hpp"

namespace aqm::io {

/// Why a document was refused. `code` is `syntax_error`, `wrong_type`,
/// `unknown_field`, `missing_field`, or `bad_value` for structural problems;
/// when the document parses but the content fails validation, `code` carries
/// the first diagnostic's code and `diagnostics` the full list.
struct ParseError {
  std::string code;
  std::string message;  // names the offending field path
  std::vector<Diagnostic> diagnostics;

  bool operator==(const ParseError&) const = default;
};

}  // namespace aqm::io
