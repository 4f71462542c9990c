#pragma once

#include "seshadri/app/cases.hpp"
#include "seshadri/app/commands.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seshadri::app {

struct CaseFailure {
  std::string id;
  std::string field;  ///< JSON pointer into the output, or "" for a whole-case error
  Json expected;
  Json actual;
};

struct Report {
  std::size_t cases_run = 0;
  std::size_t passes = 0;
  std::vector<std::string> ids;  ///< ids run, in table order
  std::vector<CaseFailure> failures;
  double wall_seconds = 0;

  [[nodiscard]] bool ok() const { return failures.empty(); }
};

/// Runs every case whose id starts with `prefix` (all cases if none).
Report run_reproduction(const std::optional<std::string>& prefix, const RunConfig& config,
                        const std::vector<ReproductionCase>& cases = builtin_cases());

/// The report without wall time unless requested, so that two runs with the
/// same seed serialize identically.
Json report_to_json(const Report& report, bool include_timing);

}  // namespace seshadri::app
