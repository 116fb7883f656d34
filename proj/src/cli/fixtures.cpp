#include "ccf/cli/fixtures.hpp"

#include "ccf/cli/commands.hpp"

namespace ccf::cli {

namespace {

const std::vector<long> kFourComponentCounts{35, 1, 0, 0};

DirichletBox four_component_t_box(Interval s) {
  return DirichletBox{s, {{0.95, 1.0}, {0.0, 0.03}, {0.0, 0.015}, {0.0, 0.005}}};
}

Warning theta2_reference_note(const ReportDocument& r) {
  return Warning{
      "reference_value_discrepancy",
      "lower E(theta_2) = " + display_number(r.theta[1].lo) +
          " = 1/46 is attained at s = s_hi = 10 because t_lo_2 = 0 <= n_2/N; the published "
          "value 0.0270 = 1/37 corresponds to s = 1 and is treated as an erratum"};
}

}  // namespace

AnalysisConfig network_config() {
  AnalysisConfig c;
  c.description = "two-component electrical network";
  c.k = 2;
  c.counts = {8, 3};
  c.marginal = MarginalConfig{14, 24.0, "year"};
  c.dirichlet_box = DirichletBox{{1.0, 4.0}, {{0.8, 0.9}, {0.1, 0.2}}};
  c.gamma_box = GammaBox{{3.0, 3.0}, {0.175, 0.525}};
  return c;
}

std::vector<double> four_component_prior_mean() { return {0.95, 0.03, 0.015, 0.005}; }

std::vector<std::string> four_component_scenarios() { return {"precise-t", "box", "fixed-s"}; }

AnalysisConfig four_component_config(const std::string& scenario) {
  AnalysisConfig c;
  c.k = 4;
  c.counts = kFourComponentCounts;
  if (scenario == "precise-t") {
    c.description = "four-component system, s in [1, 10], t fixed at the prior mean";
    c.dirichlet_box = DirichletBox::with_fixed_t({1.0, 10.0}, four_component_prior_mean());
  } else if (scenario == "box") {
    c.description = "four-component system, s in [1, 10], t in a box";
    c.dirichlet_box = four_component_t_box({1.0, 10.0});
  } else if (scenario == "fixed-s") {
    c.description = "four-component system, s = 2, t in a box";
    c.dirichlet_box = four_component_t_box({2.0, 2.0});
  } else {
    throw ConfigError("unknown four-component scenario '" + scenario + "'");
  }
  return c;
}

std::vector<std::string> reproduction_cases() { return {"kelly-atwood", "network"}; }

ReproductionDocument reproduce(const std::string& case_name, const AnalysisOverrides& overrides) {
  ReproductionDocument doc;
  doc.case_name = case_name;
  if (case_name == "network") {
    AnalysisConfig c = network_config();
    apply_overrides(c, overrides);
    doc.scenarios.push_back(run_analysis(c, "network"));
  } else if (case_name == "kelly-atwood") {
    const FailureCounts n(kFourComponentCounts);
    const std::vector<std::pair<std::string, DirichletHyper>> priors{
        {"constrained-noninformative", cni_prior(four_component_prior_mean())},
        {"uniform", uniform_prior(4)},
        {"jeffreys", jeffreys_prior(4)}};
    for (const auto& [name, h] : priors) {
      doc.reference_priors.push_back({name, h, posterior_mean_theta(n, h)});
    }
    for (const std::string& s : four_component_scenarios()) {
      AnalysisConfig c = four_component_config(s);
      apply_overrides(c, overrides);
      ReportDocument r = run_analysis(c, s);
      if (s == "box") r.warnings.push_back(theta2_reference_note(r));
      doc.scenarios.push_back(std::move(r));
    }
  } else {
    throw ConfigError("unknown case '" + case_name + "' (expected kelly-atwood or network)");
  }
  return doc;
}

}  // namespace ccf::cli
