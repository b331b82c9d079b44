#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "focksim/analysis.hpp"
#include "focksim/dynamics.hpp"

namespace focksim {

inline constexpr double kVerdictTolerance = 1e-9;

/// Outcome of one scenario run: endpoint entropies per copy and scaled by
/// the copy count, plus any integration warnings.
struct RunReport {
  std::string scenario_name;
  Model model = Model::LindbladDecay;
  Verdict verdict;
  double s_initial = 0.0;
  double s_final = 0.0;
  double n_initial = 0.0;
  double n_final = 0.0;
  long copies = 1;
  double s_initial_total = 0.0;
  double s_final_total = 0.0;
  std::vector<std::string> warnings;
  std::filesystem::path csv_path;
};

/// Integrate the scenario, write its CSV, and summarize. Integration and
/// truncation errors propagate; write failures raise IoError.
RunReport run_scenario(const Scenario& scenario,
                       const std::filesystem::path& out_csv);

/// Human-readable block for one report.
std::string format_report(const RunReport& report);

}  // namespace focksim
