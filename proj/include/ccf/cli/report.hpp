#pragma once
/// @file report.hpp
/// Report documents: the analysis results together with an echo of the
/// configuration. JSON numbers are written at full precision and paired
/// with 3-significant-digit display strings, which are ignored on reading.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccf/cli/config.hpp"

namespace ccf::cli {

struct RateEntry {
  int multiplicity = 0;
  Interval g;
  double error_bound = 0.0;
  std::optional<Interval> q;             // error-inflated
  std::optional<Interval> q_uninflated;  // diagnostics
  SearchDiagnostics lower;
  SearchDiagnostics upper;
  SearchDiagnostics error;
  friend bool operator==(const RateEntry&, const RateEntry&) = default;
};

struct ReportDocument {
  std::string scenario;
  std::string tool_version;
  std::string generated_at;  // excluded from determinism comparisons
  AnalysisConfig config;
  std::vector<Interval> theta;
  std::optional<Interval> qt;
  std::vector<RateEntry> rates;
  double max_expected_x = 0.0;
  std::vector<UnattainableBound> unattainable_bounds;
  std::vector<Warning> warnings;
  std::vector<ElicitationTable> elicitation;
  bool converged = true;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

/// Posterior means under one precise reference prior.
struct ReferencePriorResult {
  std::string name;
  DirichletHyper prior;
  std::vector<double> posterior_mean;
  friend bool operator==(const ReferencePriorResult&, const ReferencePriorResult&) = default;
};

/// Output of the reproduce command: a case may hold several scenarios.
struct ReproductionDocument {
  std::string case_name;
  std::vector<ReferencePriorResult> reference_priors;
  std::vector<ReportDocument> scenarios;
  friend bool operator==(const ReproductionDocument&, const ReproductionDocument&) = default;
};

ReportDocument make_report(const AnalysisConfig& config, const RateBoundsReport& result);

/// Value rounded to three significant digits, as text.
std::string display_number(double x);
std::string display_interval(const Interval& x);

nlohmann::json to_json(const ReportDocument& report);
ReportDocument report_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ReproductionDocument& doc);
ReproductionDocument reproduction_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ElicitationTable& table);
ElicitationTable elicitation_from_json(const nlohmann::json& doc);

/// Copy of doc with every "generated_at" member removed.
nlohmann::json without_timestamps(nlohmann::json doc);

/// Plain-text renderings for --format table.
void write_table(std::ostream& os, const ReportDocument& report);
void write_table(std::ostream& os, const ReproductionDocument& doc);
void write_table(std::ostream& os, const ElicitationTable& table);

/// Current UTC time, ISO 8601.
std::string utc_timestamp();

}  // namespace ccf::cli
