#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace focksim::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Run every acceptance criterion. CSV determinism checks write into
/// scratch_dir (created if absent; creation failure raises IoError).
std::vector<CriterionResult> run_all(const std::filesystem::path& scratch_dir);

/// run_all plus one PASS/FAIL line per criterion; returns 0 iff all passed.
int run_and_print(std::ostream& out, const std::filesystem::path& scratch_dir);

}  // namespace focksim::verify
