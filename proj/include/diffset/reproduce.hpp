#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diffset/search.hpp"

namespace diffset {

struct ReproduceOptions {
  std::uint32_t kmax = 9;   // mgr-spectra: largest k
  bool self_check = true;   // mgr-spectra: repeat every spectrum without canonicity pruning
  std::uint32_t vmax = 20;  // grid: largest v
  SearchBudget budget;      // per search (per modulus / per grid cell)
  unsigned jobs = 1;
};

enum class ReproduceOutcome { Pass, Mismatch, Timeout };

std::string to_string(ReproduceOutcome outcome);

struct ReproduceArtifact {
  std::string name;  // file name, e.g. "table2.json"
  std::string content;
};

struct ReproduceResult {
  std::string target;
  ReproduceOutcome outcome = ReproduceOutcome::Pass;
  std::vector<std::string> lines;  // one "PASS ..." / "FAIL ..." / "TIMEOUT ..." line per check
  std::vector<ReproduceArtifact> artifacts;
};

/// Targets: table2, table1-scan, mgr-spectra, octic-tables, grid.
std::vector<std::string> reproduce_targets();

/// Recomputes one published result and compares it with the embedded expected values.
/// Throws std::invalid_argument for an unknown target.
ReproduceResult reproduce(const std::string& target, const ReproduceOptions& options = {});

}  // namespace diffset
