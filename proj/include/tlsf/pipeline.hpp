#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tlsf/ast.hpp"
#include "tlsf/export.hpp"
#include "tlsf/rewrite.hpp"

namespace tlsf {

enum class OutputFormat : uint8_t {
  Check,      // one-line summary
  Basic,      // basic TLSF
  FullLtl,    // combined formula, fully parenthesized
  Promela,
  Psl,
  Wring,
  Unbeast,
  Slugs,
  GrkReport,  // structured classification report
};

struct RunConfig {
  std::string input_path;  // "-" reads standard input
  OutputFormat format = OutputFormat::Check;
  std::vector<std::pair<std::string, uint64_t>> params;
  std::optional<Model> target;
  std::optional<SemanticsTag> semantics;

  // formula rewrites, applied in this order to formula-level outputs
  bool apply_nnf = false;
  bool apply_replace_derived = false;
  std::vector<std::string> keep;  // operator names for replace-derived
  std::optional<std::pair<ltl::Direction, ltl::PushOp>> push_pull;
  bool single_pass = false;

  bool warnings_as_errors = false;
};

// exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitSyntax = 1;   // lexical or parse error
inline constexpr int kExitElab = 2;     // elaboration or kind error
inline constexpr int kExitExport = 3;   // export precondition failure
inline constexpr int kExitUsage = 4;    // bad arguments

/// Runs the whole pipeline; `in` backs the "-" input path. Output lands on
/// `out`, diagnostics (with positions) on `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tlsf
