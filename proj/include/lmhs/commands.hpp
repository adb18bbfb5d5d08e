#pragma once

#include <optional>
#include <string>

#include "lmhs/io.hpp"

namespace lmhs {

struct CommandOptions {
  std::string cone;  ///< empty: every nilpotent
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
  std::optional<int> truncation_order;
};

struct CommandResult {
  Json report;
  int exit_code = 0;  ///< 0 positive or completed, 2 negative
};

/// Runs one analysis subcommand. Module errors propagate as exceptions.
CommandResult run_command(const std::string& command, DegenerationInput input, const CommandOptions& opts);

/// Input document of the built-in genus-2 degeneration.
Json genus2_example();

/// Report for a failure: {"schema", "command", "error": {"kind", "message", "path"?}}.
Json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  const std::optional<std::string>& path = std::nullopt);

/// Stable JSON text (sorted keys, two-space indent, trailing newline).
std::string render_json(const Json& report);
/// Human-readable rendering; reports with a bigrading table get a
/// Hodge-Deligne diamond.
std::string render_text(const Json& report);

}  // namespace lmhs
