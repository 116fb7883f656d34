#pragma once
/// @file fixtures.hpp
/// Built-in reference cases for the reproduce command.

#include <string>
#include <vector>

#include "ccf/cli/report.hpp"

namespace ccf::cli {

/// Settings the command line may override on any analysis.
struct AnalysisOverrides {
  std::optional<unsigned> taylor_order;
  std::optional<double> tolerance;
  friend bool operator==(const AnalysisOverrides&, const AnalysisOverrides&) = default;
};

/// Two-component network: n = (8, 3), 14 failures in 24 years.
AnalysisConfig network_config();

/// Four-component system with n = (35, 1, 0, 0). Scenarios:
/// "precise-t" (s in [1, 10], t fixed), "box" (s in [1, 10], t box) and
/// "fixed-s" (s = 2, t box).
AnalysisConfig four_component_config(const std::string& scenario);
std::vector<std::string> four_component_scenarios();

/// Prior mean used for the four-component case.
std::vector<double> four_component_prior_mean();

std::vector<std::string> reproduction_cases();

/// Throws ConfigError for an unknown case name.
ReproductionDocument reproduce(const std::string& case_name, const AnalysisOverrides& overrides);

}  // namespace ccf::cli
