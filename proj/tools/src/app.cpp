#include "mmvp/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mmvp/errors.hpp"

namespace mmvp::cli {

namespace {

struct Invocation {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::optional<unsigned> k_max;
  std::optional<double> tolerance;
};

Json load_config(const std::string& command, const Invocation& inv) {
  if (!inv.config_path.empty() && !inv.preset.empty()) throw ParseError("give either --config or --preset, not both");
  if (!inv.preset.empty()) return preset_config(command, inv.preset);
  if (inv.config_path.empty()) throw ParseError("missing --config or --preset");
  std::ifstream in(inv.config_path);
  if (!in) throw ParseError("cannot open config file '" + inv.config_path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << contents;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variation-of-parameters series solver and closed-form verifier", "mmvp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Invocation inv;
  const std::vector<std::pair<std::string, std::string>> subcommands{
      {"iterate", "Run the recursion and report iterates and the fitted general term"},
      {"verify", "Check closed forms: ODE residuals, recast equivalences, shifts, Maclaurin match"},
      {"field", "Sample u(x, y, t) on a grid and measure the PDE residual convergence"},
      {"adomian", "Dump the Adomian polynomials of a recursion through both routes"},
  };
  for (const auto& [name, desc] : subcommands) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("--config", inv.config_path, "JSON configuration file");
    sub->add_option("--preset", inv.preset, "Built-in configuration name");
    sub->add_option("--out", inv.out_dir, "Output directory");
    sub->add_option("--kmax", inv.k_max, "Override the iteration count");
    sub->add_option("--tolerance", inv.tolerance, "Override the pass threshold");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "mmvp: " << e.what() << "\n";
    return kConfigError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Overrides ov;
  ov.k_max = inv.k_max;
  ov.tolerance = inv.tolerance;
  if (!inv.out_dir.empty()) ov.out_dir = inv.out_dir;

  CommandResult result;
  try {
    const Json config = load_config(command, inv);
    if (command == "iterate") {
      result = cmd_iterate(config, ov);
    } else if (command == "verify") {
      result = cmd_verify(config, ov);
    } else if (command == "field") {
      result = cmd_field(config, ov);
    } else {
      result = cmd_adomian(config, ov);
    }
  } catch (const ValidityError& e) {
    err << "mmvp " << command << ": " << e.what() << "\n";
    return kToleranceFailure;
  } catch (const PatternMismatch& e) {
    err << "mmvp " << command << ": " << e.what() << "\n";
    return kToleranceFailure;
  } catch (const std::invalid_argument& e) {
    err << "mmvp " << command << ": config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const nlohmann::json::exception& e) {
    err << "mmvp " << command << ": config error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    const std::string report = result.report.dump(2) + "\n";
    std::filesystem::path dir = ov.out_dir.value_or(command == "field" ? "." : "");
    if (!dir.empty()) {
      std::filesystem::create_directories(dir);
      for (const auto& [name, contents] : result.files) write_file(dir / name, contents);
      if (result.files.empty()) {
        const std::string id = result.report.value("id", command);
        write_file(dir / (command + "_" + id + ".json"), report);
      }
    }
    out << report;
  } catch (const std::exception& e) {
    err << "mmvp " << command << ": " << e.what() << "\n";
    return kConfigError;
  }
  if (result.exit_code != kPass) err << "mmvp " << command << ": tolerance check failed\n";
  return result.exit_code;
}

}  // namespace mmvp::cli
