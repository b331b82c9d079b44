#include "focksim/runner.hpp"

#include <sstream>

#include "focksim/io.hpp"

namespace focksim {

RunReport run_scenario(const Scenario& scenario,
                       const std::filesystem::path& out_csv) {
  const Trajectory trajectory = run_trajectory(scenario);
  write_trajectory_csv(trajectory, out_csv, scenario.sample_every);

  RunReport report;
  report.scenario_name = scenario.name;
  report.model = scenario.model;
  report.verdict = endpoint_verdict(trajectory, kVerdictTolerance);
  report.s_initial = trajectory.samples.front().entropy;
  report.s_final = trajectory.samples.back().entropy;
  report.n_initial = trajectory.samples.front().n_expect;
  report.n_final = trajectory.samples.back().n_expect;
  report.copies = scenario.copies;
  report.s_initial_total = scenario.copies * report.s_initial;
  report.s_final_total = scenario.copies * report.s_final;
  report.csv_path = out_csv;

  if (trajectory.tail_flagged) {
    std::ostringstream w;
    w << "tail mass reached " << trajectory.max_tail_mass
      << " at the truncation edge; consider a larger dim";
    report.warnings.push_back(w.str());
  }
  if (trajectory.min_eigenvalue < -1e-9) {
    std::ostringstream w;
    w << "state eigenvalue dipped to " << trajectory.min_eigenvalue;
    report.warnings.push_back(w.str());
  }
  return report;
}

std::string format_report(const RunReport& report) {
  std::ostringstream out;
  out << "scenario " << report.scenario_name << " [" << to_string(report.model)
      << "]\n";
  out.precision(15);
  out << "  S_initial = " << report.s_initial
      << "   S_final = " << report.s_final << "  (per copy)\n";
  out << "  <N>_initial = " << report.n_initial
      << "   <N>_final = " << report.n_final << "\n";
  if (report.copies != 1)
    out << "  totals for " << report.copies
        << " copies: S_initial = " << report.s_initial_total
        << "   S_final = " << report.s_final_total << "\n";
  out << "  verdict: " << to_string(report.verdict.kind)
      << " (tolerance " << report.verdict.tolerance << ")\n";
  out << "  csv: " << report.csv_path.string() << "\n";
  for (const std::string& w : report.warnings) out << "  warning: " << w << "\n";
  return out.str();
}

}  // namespace focksim
