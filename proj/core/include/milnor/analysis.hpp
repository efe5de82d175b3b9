#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "milnor/root_of_unity.hpp"
#include "milnor/validate.hpp"

namespace milnor {

enum class OutputFormat { Table, Json };

struct AnalyzeOptions {
  std::optional<std::string> polynomial;
  std::optional<std::filesystem::path> support_path;
  OutputFormat format = OutputFormat::Table;
  bool fast_only = false;
  bool validate = false;
  bool emit_hodge_tables = false;
  bool unsafe_large = false;
  std::optional<RootOfUnity> eigenvalue;  // restrict the eigenvalue report
};

inline constexpr int kMaxVariables = 6;
inline constexpr int kMaxSupportPoints = 40;

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitInternal = 3 };

/// Runs the whole analysis and writes the document to `out` and diagnostics
/// (including timing) to `err`. Returns 0 on success, 2 for bad input or a
/// violated precondition, 3 when two computations that must agree do not or
/// a requested validation fails. `validation` is forwarded to the validator.
int run_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err,
                const ValidationOptions& validation = {});

}  // namespace milnor
