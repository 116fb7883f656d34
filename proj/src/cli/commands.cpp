#include "ccf/cli/commands.hpp"

#include <fstream>
#include <ostream>

#include <CLI11.hpp>

namespace ccf::cli {

using nlohmann::json;

void apply_overrides(AnalysisConfig& config, const AnalysisOverrides& overrides) {
  if (overrides.taylor_order) config.taylor_order = *overrides.taylor_order;
  if (overrides.tolerance) {
    config.optimizer.refinement_tolerance = *overrides.tolerance;
    config.optimizer.validate();
  }
}

ReportDocument run_analysis(const AnalysisConfig& config, const std::string& scenario) {
  const RateBoundsReport result =
      full_report(config.failure_counts(), config.dirichlet_box, config.marginal_model(),
                  config.taylor_order, config.optimizer);
  ReportDocument report = make_report(config, result);
  report.scenario = scenario;
  if (const auto& request = config.output.elicitation) {
    if (!request->alpha_counts.empty()) {
      report.elicitation.push_back(elicit_alpha_learning(config.dirichlet_box, request->alpha_counts));
    }
    if (!request->rate_data.empty()) {
      if (!config.gamma_box) throw ConfigError("rate elicitation needs a gamma_box");
      report.elicitation.push_back(elicit_qt_learning(*config.gamma_box, request->rate_data));
    }
  }
  return report;
}

ElicitationTable run_alpha_elicitation(const DraftConfig& draft, const std::vector<double>& counts) {
  if (!draft.dirichlet_box) throw ConfigError("alpha elicitation needs a dirichlet_box");
  return elicit_alpha_learning(*draft.dirichlet_box, counts);
}

ElicitationTable run_rate_elicitation(const DraftConfig& draft,
                                      const std::vector<HypotheticalExposure>& data) {
  if (!draft.gamma_box) throw ConfigError("rate elicitation needs a gamma_box");
  return elicit_qt_learning(*draft.gamma_box, data);
}

HypotheticalExposure parse_exposure(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("expected M:T, got '" + text + "'");
  try {
    std::size_t used_m = 0, used_t = 0;
    const std::string m = text.substr(0, colon), t = text.substr(colon + 1);
    const long failures = std::stol(m, &used_m);
    const double exposure = std::stod(t, &used_t);
    if (used_m != m.size() || used_t != t.size()) throw std::invalid_argument(text);
    return HypotheticalExposure{failures, exposure};
  } catch (const std::logic_error&) {
    throw ConfigError("expected M:T, got '" + text + "'");
  }
}

namespace {

struct Options {
  std::string config_path;
  std::string output_path;
  std::optional<unsigned> taylor_order;
  std::optional<double> tolerance;
  std::optional<std::string> format;
  std::string case_name;
  std::vector<double> counts;
  std::vector<std::string> data;

  AnalysisOverrides overrides() const { return {taylor_order, tolerance}; }
  OutputFormat resolve_format(OutputFormat fallback) const {
    return format ? parse_output_format(*format) : fallback;
  }
};

template <class Doc>
void emit(const Doc& doc, OutputFormat format, const Options& opts, std::ostream& out) {
  std::ofstream file;
  if (!opts.output_path.empty()) {
    file.open(opts.output_path);
    if (!file) throw ConfigError("cannot write " + opts.output_path);
  }
  std::ostream& os = opts.output_path.empty() ? out : file;
  if (format == OutputFormat::json) {
    os << to_json(doc).dump(2) << '\n';
  } else {
    write_table(os, doc);
  }
}

int analyze(const Options& opts, std::ostream& out) {
  AnalysisConfig config = parse_config(read_json_file(opts.config_path));
  apply_overrides(config, opts.overrides());
  const ReportDocument report = run_analysis(config);
  emit(report, opts.resolve_format(config.output.format), opts, out);
  return report.converged ? kExitOk : kExitNotConverged;
}

int reproduce_case(const Options& opts, std::ostream& out) {
  const ReproductionDocument doc = reproduce(opts.case_name, opts.overrides());
  emit(doc, opts.resolve_format(OutputFormat::json), opts, out);
  for (const ReportDocument& r : doc.scenarios) {
    if (!r.converged) return kExitNotConverged;
  }
  return kExitOk;
}

int elicit(const Options& opts, bool alpha, std::ostream& out) {
  const DraftConfig draft = parse_draft(read_json_file(opts.config_path));
  ElicitationTable table;
  if (alpha) {
    table = run_alpha_elicitation(draft, opts.counts);
  } else {
    std::vector<HypotheticalExposure> data;
    for (const std::string& d : opts.data) data.push_back(parse_exposure(d));
    table = run_rate_elicitation(draft, data);
  }
  emit(table, opts.resolve_format(OutputFormat::table), opts, out);
  return kExitOk;
}

void add_common_flags(CLI::App& app, Options& opts) {
  app.add_option("--output", opts.output_path, "Write the report here instead of stdout");
  app.add_option("--taylor-order", opts.taylor_order, "Taylor order p (default 4)")
      ->check(CLI::Range(0u, kMaxTaylorOrder));
  app.add_option("--tolerance", opts.tolerance, "Optimizer refinement tolerance (default 1e-9)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opts.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower and upper posterior expectations of common-cause failure rates", "ccf"};
  app.require_subcommand(1);
  Options opts;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Run an analysis configuration");
  analyze_cmd->add_option("--config", opts.config_path, "Analysis configuration (JSON)")->required();
  add_common_flags(*analyze_cmd, opts);

  CLI::App* reproduce_cmd = app.add_subcommand("reproduce", "Run a built-in reference case");
  reproduce_cmd->add_option("case", opts.case_name, "kelly-atwood or network")->required();
  add_common_flags(*reproduce_cmd, opts);

  CLI::App* elicit_cmd = app.add_subcommand("elicit", "Hypothetical-data tables for a draft box");
  elicit_cmd->require_subcommand(1);
  CLI::App* alpha_cmd = elicit_cmd->add_subcommand("alpha", "Learning-parameter table for alpha-factors");
  alpha_cmd->add_option("--config", opts.config_path, "Draft box (JSON)")->required();
  alpha_cmd->add_option("--counts", opts.counts, "Hypothetical failure counts m")->required();
  add_common_flags(*alpha_cmd, opts);
  CLI::App* rate_cmd = elicit_cmd->add_subcommand("rate", "Learning-parameter table for q_t");
  rate_cmd->add_option("--config", opts.config_path, "Draft box (JSON)")->required();
  rate_cmd->add_option("--data", opts.data, "Hypothetical failures and time, as M:T")->required();
  add_common_flags(*rate_cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    if (*analyze_cmd) return analyze(opts, out);
    if (*reproduce_cmd) return reproduce_case(opts, out);
    return elicit(opts, static_cast<bool>(*alpha_cmd), out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace ccf::cli
