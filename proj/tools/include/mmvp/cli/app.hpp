#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mmvp/serialize.hpp"

namespace mmvp::cli {

enum ExitCode : int { kPass = 0, kToleranceFailure = 1, kConfigError = 2 };

/// Flag overrides shared by every subcommand.
struct Overrides {
  std::optional<unsigned> k_max;
  std::optional<double> tolerance;
  std::optional<std::filesystem::path> out_dir;
};

/// Result of one subcommand: the JSON report plus any extra files to write
/// (name relative to the output directory, contents).
struct CommandResult {
  int exit_code = kPass;
  Json report;
  std::vector<std::pair<std::string, std::string>> files;
};

CommandResult cmd_iterate(const Json& config, const Overrides& ov);
CommandResult cmd_verify(const Json& config, const Overrides& ov);
CommandResult cmd_field(const Json& config, const Overrides& ov);
CommandResult cmd_adomian(const Json& config, const Overrides& ov);

/// Built-in configurations per subcommand. Throws ParseError for unknown names.
Json preset_config(std::string_view command, std::string_view name);
std::vector<std::string> preset_names(std::string_view command);

/// Fixed "%.17g" formatting.
std::string format_real(double v);

/// Full command line: `mmvp <subcommand> [--config F | --preset P] [--out D] ...`.
/// The report goes to `out` (and to D/<name>.json when --out is given);
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmvp::cli
