// focksim command line: run scenario files, or verify the build against its
// acceptance checks.
//
// Exit statuses: 0 success, 1 verification or integration failure,
// 2 configuration/parse error, 3 I/O error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "focksim/errors.hpp"
#include "focksim/io.hpp"
#include "focksim/runner.hpp"
#include "focksim/verify.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "focksim 0.1.0";

int run_command(const std::vector<std::string>& files, const std::string& out) {
  if (!out.empty() && files.size() > 1) {
    std::cerr << "--out requires a single scenario file\n";
    return 2;
  }
  for (const std::string& file : files) {
    const focksim::Scenario scenario = focksim::parse_scenario_file(file);
    const fs::path csv = out.empty() ? fs::path(scenario.name + ".csv")
                                     : fs::path(out);
    const focksim::RunReport report = focksim::run_scenario(scenario, csv);
    std::cout << focksim::format_report(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"number-operator entropy simulator on truncated Fock spaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(0, 1);

  std::vector<std::string> scenario_files;
  std::string out_path;
  CLI::App* run = app.add_subcommand("run", "integrate scenario files");
  run->add_option("files", scenario_files, "scenario files (key=value lines)")
      ->required();
  run->add_option("--out", out_path, "CSV output path (single scenario only)");

  CLI::App* verify = app.add_subcommand("verify", "run the acceptance checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (run->parsed()) return run_command(scenario_files, out_path);
    if (verify->parsed()) {
      const fs::path scratch = fs::temp_directory_path() / "focksim-verify";
      return focksim::verify::run_and_print(std::cout, scratch);
    }
    std::cerr << app.help();
    return 2;
  } catch (const focksim::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const focksim::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const focksim::IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
