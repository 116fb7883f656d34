#include "ccf/cli/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <ostream>

#ifndef CCF_VERSION
#define CCF_VERSION "unknown"
#endif

namespace ccf::cli {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ConfigError(std::string("report is missing field ") + key);
  return *it;
}

json interval_json(const Interval& x) {
  return {{"lower", x.lo}, {"upper", x.hi}, {"display", display_interval(x)}};
}

Interval interval_from(const json& j) {
  return Interval{member(j, "lower").get<double>(), member(j, "upper").get<double>()};
}

json optional_interval_json(const std::optional<Interval>& x) {
  return x ? interval_json(*x) : json(nullptr);
}

std::optional<Interval> optional_interval_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return interval_from(j);
}

json diagnostics_json(const SearchDiagnostics& d) {
  return {{"converged", d.converged},
          {"sweeps", d.sweeps},
          {"evaluations", d.evaluations},
          {"argument", {{"s", d.argument.s}, {"t", d.argument.t}}}};
}

SearchDiagnostics diagnostics_from(const json& j) {
  const json& arg = member(j, "argument");
  return SearchDiagnostics{member(j, "converged").get<bool>(), member(j, "sweeps").get<int>(),
                           member(j, "evaluations").get<long>(),
                           HyperPoint{member(arg, "s").get<double>(),
                                      member(arg, "t").get<std::vector<double>>()}};
}

std::string plain_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

void row(std::ostream& os, const std::string& label, const std::string& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "  %-22s ", label.c_str());
  os << buf << value << '\n';
}

}  // namespace

std::string display_number(double x) {
  if (x == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%#.3g", x);
  return buf;
}

std::string display_interval(const Interval& x) {
  return "[" + display_number(x.lo) + ", " + display_number(x.hi) + "]";
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ReportDocument make_report(const AnalysisConfig& config, const RateBoundsReport& result) {
  ReportDocument r;
  r.tool_version = CCF_VERSION;
  r.generated_at = utc_timestamp();
  r.config = config;
  r.theta = result.theta;
  r.qt = result.qt;
  for (const RateBounds& rate : result.rates) {
    r.rates.push_back(RateEntry{rate.multiplicity, rate.g, rate.error_bound, rate.q,
                                rate.q_uninflated, rate.search.lower, rate.search.upper,
                                rate.search.error});
  }
  r.max_expected_x = result.max_expected_x;
  r.unattainable_bounds = result.box_check.unattainable;
  r.warnings = result.warnings;
  r.converged = result.converged();
  return r;
}

json to_json(const ElicitationTable& table) {
  json rows = json::array();
  for (const ElicitationRow& r : table.rows) {
    rows.push_back({{"evidence", r.evidence},
                    {"quantity", r.quantity},
                    {"multiplicity", r.multiplicity},
                    {"amount", r.amount},
                    {"failures", r.failures},
                    {"value", r.value},
                    {"display", display_number(r.value)}});
  }
  return {{"kind", table.kind}, {"rows", rows}};
}

ElicitationTable elicitation_from_json(const json& doc) {
  ElicitationTable t{member(doc, "kind").get<std::string>(), {}};
  for (const json& r : member(doc, "rows")) {
    t.rows.push_back(ElicitationRow{member(r, "evidence").get<std::string>(),
                                    member(r, "quantity").get<std::string>(),
                                    member(r, "multiplicity").get<int>(),
                                    member(r, "amount").get<double>(),
                                    member(r, "failures").get<long>(),
                                    member(r, "value").get<double>()});
  }
  return t;
}

json to_json(const ReportDocument& r) {
  json theta = json::array();
  for (std::size_t i = 0; i < r.theta.size(); ++i) {
    json e = interval_json(r.theta[i]);
    e["multiplicity"] = i + 1;
    theta.push_back(e);
  }
  json rates = json::array();
  for (const RateEntry& e : r.rates) {
    rates.push_back({{"multiplicity", e.multiplicity},
                     {"g", interval_json(e.g)},
                     {"taylor_error_bound", e.error_bound},
                     {"taylor_error_bound_display", display_number(e.error_bound)},
                     {"q", optional_interval_json(e.q)},
                     {"diagnostics",
                      {{"q_uninflated", optional_interval_json(e.q_uninflated)},
                       {"lower_search", diagnostics_json(e.lower)},
                       {"upper_search", diagnostics_json(e.upper)},
                       {"error_search", diagnostics_json(e.error)}}}});
  }
  json unattainable = json::array();
  for (const UnattainableBound& u : r.unattainable_bounds) {
    unattainable.push_back({{"multiplicity", u.multiplicity},
                            {"side", u.upper ? "upper" : "lower"},
                            {"bound", u.bound},
                            {"attainable", u.attainable}});
  }
  json warnings = json::array();
  for (const Warning& w : r.warnings) warnings.push_back({{"code", w.code}, {"message", w.message}});
  json elicitation = json::array();
  for (const ElicitationTable& t : r.elicitation) elicitation.push_back(to_json(t));

  return {{"scenario", r.scenario},
          {"tool_version", r.tool_version},
          {"generated_at", r.generated_at},
          {"config", to_json(r.config)},
          {"results",
           {{"theta", theta},
            {"qt", optional_interval_json(r.qt)},
            {"rates", rates},
            {"max_expected_x", r.max_expected_x}}},
          {"unattainable_bounds", unattainable},
          {"warnings", warnings},
          {"elicitation", elicitation},
          {"converged", r.converged}};
}

ReportDocument report_from_json(const json& doc) {
  ReportDocument r;
  r.scenario = member(doc, "scenario").get<std::string>();
  r.tool_version = member(doc, "tool_version").get<std::string>();
  r.generated_at = member(doc, "generated_at").get<std::string>();
  r.config = parse_config(member(doc, "config"));
  const json& results = member(doc, "results");
  for (const json& t : member(results, "theta")) r.theta.push_back(interval_from(t));
  r.qt = optional_interval_from(member(results, "qt"));
  for (const json& e : member(results, "rates")) {
    const json& d = member(e, "diagnostics");
    r.rates.push_back(RateEntry{member(e, "multiplicity").get<int>(), interval_from(member(e, "g")),
                                member(e, "taylor_error_bound").get<double>(),
                                optional_interval_from(member(e, "q")),
                                optional_interval_from(member(d, "q_uninflated")),
                                diagnostics_from(member(d, "lower_search")),
                                diagnostics_from(member(d, "upper_search")),
                                diagnostics_from(member(d, "error_search"))});
  }
  r.max_expected_x = member(results, "max_expected_x").get<double>();
  for (const json& u : member(doc, "unattainable_bounds")) {
    r.unattainable_bounds.push_back(UnattainableBound{
        member(u, "multiplicity").get<int>(), member(u, "side").get<std::string>() == "upper",
        member(u, "bound").get<double>(), member(u, "attainable").get<double>()});
  }
  for (const json& w : member(doc, "warnings")) {
    r.warnings.push_back(
        Warning{member(w, "code").get<std::string>(), member(w, "message").get<std::string>()});
  }
  for (const json& t : member(doc, "elicitation")) r.elicitation.push_back(elicitation_from_json(t));
  r.converged = member(doc, "converged").get<bool>();
  return r;
}

json to_json(const ReproductionDocument& d) {
  json priors = json::array();
  for (const ReferencePriorResult& p : d.reference_priors) {
    json display = json::array();
    for (double m : p.posterior_mean) display.push_back(display_number(m));
    priors.push_back({{"name", p.name},
                      {"s", p.prior.s},
                      {"t", p.prior.t},
                      {"posterior_mean", p.posterior_mean},
                      {"posterior_mean_display", display}});
  }
  json scenarios = json::array();
  for (const ReportDocument& r : d.scenarios) scenarios.push_back(to_json(r));
  return {{"case", d.case_name}, {"reference_priors", priors}, {"scenarios", scenarios}};
}

ReproductionDocument reproduction_from_json(const json& doc) {
  ReproductionDocument d;
  d.case_name = member(doc, "case").get<std::string>();
  for (const json& p : member(doc, "reference_priors")) {
    d.reference_priors.push_back(ReferencePriorResult{
        member(p, "name").get<std::string>(),
        DirichletHyper{member(p, "s").get<double>(), member(p, "t").get<std::vector<double>>()},
        member(p, "posterior_mean").get<std::vector<double>>()});
  }
  for (const json& s : member(doc, "scenarios")) d.scenarios.push_back(report_from_json(s));
  return d;
}

json without_timestamps(json doc) {
  if (doc.is_object()) {
    doc.erase("generated_at");
    for (auto& [key, value] : doc.items()) value = without_timestamps(value);
  } else if (doc.is_array()) {
    for (auto& value : doc) value = without_timestamps(value);
  }
  return doc;
}

void write_table(std::ostream& os, const ReportDocument& r) {
  os << (r.scenario.empty() ? std::string("analysis") : r.scenario) << '\n';
  if (!r.config.description.empty()) os << "  " << r.config.description << '\n';
  const std::string unit =
      r.config.marginal && !r.config.marginal->time_unit.empty()
          ? " per " + r.config.marginal->time_unit
          : std::string{};
  for (std::size_t i = 0; i < r.theta.size(); ++i) {
    row(os, "theta_" + std::to_string(i + 1), display_interval(r.theta[i]));
  }
  if (r.qt) row(os, "q_t", display_interval(*r.qt) + unit);
  for (const RateEntry& e : r.rates) {
    const std::string j = std::to_string(e.multiplicity);
    row(os, "g_" + j, display_interval(e.g) + "  error " + display_number(e.error_bound));
    if (e.q) row(os, "q_" + j, display_interval(*e.q) + unit);
  }
  row(os, "max E(x)", display_number(r.max_expected_x));
  for (const Warning& w : r.warnings) os << "  warning [" << w.code << "] " << w.message << '\n';
  if (!r.converged) os << "  optimizer did not converge; values are best found\n";
  for (const ElicitationTable& t : r.elicitation) write_table(os, t);
}

void write_table(std::ostream& os, const ReproductionDocument& d) {
  os << "case " << d.case_name << '\n';
  for (const ReferencePriorResult& p : d.reference_priors) {
    std::string means;
    for (double m : p.posterior_mean) means += (means.empty() ? "" : ", ") + display_number(m);
    row(os, p.name + " prior", "s = " + display_number(p.prior.s) + "  E(theta) = (" + means + ")");
  }
  for (const ReportDocument& r : d.scenarios) {
    os << '\n';
    write_table(os, r);
  }
}

void write_table(std::ostream& os, const ElicitationTable& t) {
  os << "elicitation (" << t.kind << ")\n";
  for (const ElicitationRow& r : t.rows) {
    const std::string given = r.failures < 0
                                  ? "m = " + plain_number(r.amount)
                                  : "M = " + std::to_string(r.failures) +
                                        ", T = " + plain_number(r.amount);
    os << "  " << given << "  " << r.evidence << ": " << r.quantity << " = "
       << display_number(r.value) << '\n';
  }
}

}  // namespace ccf::cli
