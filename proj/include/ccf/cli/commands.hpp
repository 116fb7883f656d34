#pragma once
/// @file commands.hpp
/// Command implementations and the command-line entry point.

#include <iosfwd>
#include <string>
#include <vector>

#include "ccf/cli/fixtures.hpp"

namespace ccf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 2,
  kExitInfeasible = 3,
  kExitNotConverged = 4,
};

void apply_overrides(AnalysisConfig& config, const AnalysisOverrides& overrides);

/// Full pipeline for one configuration, plus any requested elicitation
/// tables. Non-convergence is recorded in the report, not thrown.
ReportDocument run_analysis(const AnalysisConfig& config, const std::string& scenario = {});

ElicitationTable run_alpha_elicitation(const DraftConfig& draft, const std::vector<double>& counts);
ElicitationTable run_rate_elicitation(const DraftConfig& draft,
                                      const std::vector<HypotheticalExposure>& data);

/// Parses "M:T" into a hypothetical exposure.
HypotheticalExposure parse_exposure(const std::string& text);

/// Runs the command line. Reports go to out (or --output), diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccf::cli
