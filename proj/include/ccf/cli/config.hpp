#pragma once
/// @file config.hpp
/// JSON analysis configurations. Parsing is strict: unknown keys and type
/// mismatches are rejected before any computation, and every model
/// invariant is re-checked on load.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccf/errors.hpp"
#include "ccf/rate_inference.hpp"

namespace ccf::cli {

/// Schema violation in a configuration document.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct MarginalConfig {
  long failures = 0;
  double exposure_time = 0.0;
  std::string time_unit;  // label only, never converted
  friend bool operator==(const MarginalConfig&, const MarginalConfig&) = default;
};

/// Hypothetical data for elicitation tables attached to a report.
struct ElicitationRequest {
  std::vector<double> alpha_counts;
  std::vector<HypotheticalExposure> rate_data;
  friend bool operator==(const ElicitationRequest&, const ElicitationRequest&) = default;
};

enum class OutputFormat { json, table };

struct OutputOptions {
  OutputFormat format = OutputFormat::json;
  std::optional<ElicitationRequest> elicitation;
  friend bool operator==(const OutputOptions&, const OutputOptions&) = default;
};

struct AnalysisConfig {
  std::string description;
  int k = 0;
  std::vector<long> counts;
  std::optional<MarginalConfig> marginal;
  DirichletBox dirichlet_box;
  std::optional<GammaBox> gamma_box;  // present exactly when marginal is
  unsigned taylor_order = kDefaultTaylorOrder;
  OptimizerSettings optimizer;
  OutputOptions output;

  FailureCounts failure_counts() const { return FailureCounts(counts); }
  std::optional<MarginalModel> marginal_model() const;
  friend bool operator==(const AnalysisConfig&, const AnalysisConfig&) = default;
};

/// Box-only document for elicitation.
struct DraftConfig {
  std::string description;
  int k = 0;
  std::optional<DirichletBox> dirichlet_box;
  std::optional<GammaBox> gamma_box;
};

/// Throws ConfigError for schema problems and the core errors
/// (DimensionError, DomainError, InfeasibleError) for model violations.
AnalysisConfig parse_config(const nlohmann::json& doc);
DraftConfig parse_draft(const nlohmann::json& doc);

nlohmann::json to_json(const AnalysisConfig& config);

/// Reads and parses a JSON file; malformed JSON is a ConfigError.
nlohmann::json read_json_file(const std::filesystem::path& path);

std::string to_string(OutputFormat format);
OutputFormat parse_output_format(const std::string& name);

}  // namespace ccf::cli
