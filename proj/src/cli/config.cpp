#include "ccf/cli/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>

#include "ccf/model.hpp"

namespace ccf::cli {

using nlohmann::json;

namespace {

std::string where(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path.empty() ? "document must be an object" : path + " must be an object");
  return j;
}

void reject_unknown(const json& obj, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown field " + where(path, key));
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError("missing field " + where(path, key));
  return *it;
}

const json* optional_field(const json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) throw ConfigError(path + " must be finite");
  return x;
}

long get_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ConfigError(path + " must be an integer");
  return j.get<long>();
}

long get_count(const json& j, const std::string& path) {
  const long n = get_integer(j, path);
  if (n < 0) throw ConfigError(path + " must be nonnegative");
  return n;
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path + " must be a string");
  return j.get<std::string>();
}

std::vector<double> get_numbers(const json& j, const std::string& path) {
  if (!j.is_array()) throw ConfigError(path + " must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

int parse_system(const json& doc) {
  const json& sys = require_object(require(doc, "", "system"), "system");
  reject_unknown(sys, "system", {"k"});
  const long k = get_integer(require(sys, "system", "k"), "system.k");
  SystemSize size(static_cast<int>(std::clamp<long>(k, -1, 1000)));
  return size.value();
}

DirichletBox parse_dirichlet_box(const json& j, int k) {
  const std::string path = "dirichlet_box";
  require_object(j, path);
  reject_unknown(j, path, {"s_lo", "s_hi", "t_lo", "t_hi"});
  const double s_lo = get_number(require(j, path, "s_lo"), path + ".s_lo");
  const double s_hi = get_number(require(j, path, "s_hi"), path + ".s_hi");
  const auto t_lo = get_numbers(require(j, path, "t_lo"), path + ".t_lo");
  const auto t_hi = get_numbers(require(j, path, "t_hi"), path + ".t_hi");
  if (t_lo.size() != t_hi.size()) {
    throw DimensionError("dirichlet_box.t_lo and t_hi differ in length");
  }
  DirichletBox box{Interval::make(s_lo, s_hi), {}};
  for (std::size_t i = 0; i < t_lo.size(); ++i) {
    box.t_ranges.push_back(Interval::make(t_lo[i], t_hi[i]));
  }
  validate_box(box, k);
  return box;
}

GammaBox parse_gamma_box(const json& j) {
  const std::string path = "gamma_box";
  require_object(j, path);
  reject_unknown(j, path, {"u_lo", "u_hi", "v_lo", "v_hi"});
  GammaBox box{
      Interval::make(get_number(require(j, path, "u_lo"), path + ".u_lo"),
                     get_number(require(j, path, "u_hi"), path + ".u_hi")),
      Interval::make(get_number(require(j, path, "v_lo"), path + ".v_lo"),
                     get_number(require(j, path, "v_hi"), path + ".v_hi"))};
  box.validate();
  return box;
}

MarginalConfig parse_marginal(const json& j) {
  const std::string path = "marginal";
  require_object(j, path);
  reject_unknown(j, path, {"failures", "exposure_time", "time_unit"});
  MarginalConfig m;
  m.failures = get_count(require(j, path, "failures"), path + ".failures");
  m.exposure_time = get_number(require(j, path, "exposure_time"), path + ".exposure_time");
  if (const json* unit = optional_field(j, "time_unit")) {
    m.time_unit = get_string(*unit, path + ".time_unit");
  }
  MarginalData{m.failures, m.exposure_time}.validate();
  return m;
}

OptimizerSettings parse_optimizer(const json& j) {
  const std::string path = "optimizer";
  require_object(j, path);
  reject_unknown(j, path,
                 {"grid_points_per_dim", "refinement_tolerance", "max_iterations", "multistart_count"});
  OptimizerSettings s;
  auto int_field = [&](const char* key, int& target) {
    if (const json* v = optional_field(j, key)) {
      const long x = get_integer(*v, where(path, key));
      if (x > std::numeric_limits<int>::max() || x < std::numeric_limits<int>::min()) {
        throw ConfigError(where(path, key) + " out of range");
      }
      target = static_cast<int>(x);
    }
  };
  int_field("grid_points_per_dim", s.grid_points_per_dim);
  int_field("max_iterations", s.max_iterations);
  int_field("multistart_count", s.multistart_count);
  if (const json* v = optional_field(j, "refinement_tolerance")) {
    s.refinement_tolerance = get_number(*v, path + ".refinement_tolerance");
  }
  s.validate();
  return s;
}

ElicitationRequest parse_elicitation(const json& j) {
  const std::string path = "output.elicitation";
  require_object(j, path);
  reject_unknown(j, path, {"alpha_counts", "rate_data"});
  ElicitationRequest r;
  if (const json* a = optional_field(j, "alpha_counts")) {
    r.alpha_counts = get_numbers(*a, path + ".alpha_counts");
  }
  if (const json* d = optional_field(j, "rate_data")) {
    if (!d->is_array()) throw ConfigError(path + ".rate_data must be an array");
    for (std::size_t i = 0; i < d->size(); ++i) {
      const std::string p = path + ".rate_data[" + std::to_string(i) + "]";
      const json& e = require_object((*d)[i], p);
      reject_unknown(e, p, {"failures", "exposure_time"});
      r.rate_data.push_back({get_count(require(e, p, "failures"), p + ".failures"),
                             get_number(require(e, p, "exposure_time"), p + ".exposure_time")});
    }
  }
  return r;
}

OutputOptions parse_output(const json& j) {
  require_object(j, "output");
  reject_unknown(j, "output", {"format", "elicitation"});
  OutputOptions o;
  if (const json* f = optional_field(j, "format")) {
    o.format = parse_output_format(get_string(*f, "output.format"));
  }
  if (const json* e = optional_field(j, "elicitation")) o.elicitation = parse_elicitation(*e);
  return o;
}

std::string parse_description(const json& doc) {
  const json* d = optional_field(doc, "description");
  return d ? get_string(*d, "description") : std::string{};
}

}  // namespace

std::optional<MarginalModel> AnalysisConfig::marginal_model() const {
  if (!marginal || !gamma_box) return std::nullopt;
  return MarginalModel{{marginal->failures, marginal->exposure_time}, *gamma_box};
}

AnalysisConfig parse_config(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"description", "system", "counts", "marginal", "dirichlet_box",
                           "gamma_box", "taylor_order", "optimizer", "output"});
  AnalysisConfig c;
  c.description = parse_description(doc);
  c.k = parse_system(doc);

  const json& counts = require(doc, "", "counts");
  if (!counts.is_array()) throw ConfigError("counts must be an array");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    c.counts.push_back(get_count(counts[i], "counts[" + std::to_string(i) + "]"));
  }
  if (c.counts.size() != static_cast<std::size_t>(c.k)) {
    throw DimensionError("counts has " + std::to_string(c.counts.size()) + " entries, k = " +
                         std::to_string(c.k));
  }

  c.dirichlet_box = parse_dirichlet_box(require(doc, "", "dirichlet_box"), c.k);

  const json* marginal = optional_field(doc, "marginal");
  const json* gamma = optional_field(doc, "gamma_box");
  if ((marginal == nullptr) != (gamma == nullptr)) {
    throw ConfigError("marginal and gamma_box must be given together");
  }
  if (marginal) {
    c.marginal = parse_marginal(*marginal);
    c.gamma_box = parse_gamma_box(*gamma);
  }

  if (const json* p = optional_field(doc, "taylor_order")) {
    const long order = get_integer(*p, "taylor_order");
    if (order < 0 || order > static_cast<long>(kMaxTaylorOrder)) {
      throw ConfigError("taylor_order must lie in [0, " + std::to_string(kMaxTaylorOrder) + "]");
    }
    c.taylor_order = static_cast<unsigned>(order);
  }
  if (const json* o = optional_field(doc, "optimizer")) c.optimizer = parse_optimizer(*o);
  if (const json* o = optional_field(doc, "output")) c.output = parse_output(*o);
  return c;
}

DraftConfig parse_draft(const json& doc) {
  require_object(doc, "");
  reject_unknown(doc, "", {"description", "system", "dirichlet_box", "gamma_box"});
  DraftConfig d;
  d.description = parse_description(doc);
  d.k = parse_system(doc);
  if (const json* b = optional_field(doc, "dirichlet_box")) {
    d.dirichlet_box = parse_dirichlet_box(*b, d.k);
  }
  if (const json* g = optional_field(doc, "gamma_box")) d.gamma_box = parse_gamma_box(*g);
  return d;
}

json to_json(const AnalysisConfig& c) {
  json doc = json::object();
  if (!c.description.empty()) doc["description"] = c.description;
  doc["system"] = {{"k", c.k}};
  doc["counts"] = c.counts;
  if (c.marginal) {
    doc["marginal"] = {{"failures", c.marginal->failures},
                       {"exposure_time", c.marginal->exposure_time},
                       {"time_unit", c.marginal->time_unit}};
  }
  json t_lo = json::array(), t_hi = json::array();
  for (const Interval& r : c.dirichlet_box.t_ranges) {
    t_lo.push_back(r.lo);
    t_hi.push_back(r.hi);
  }
  doc["dirichlet_box"] = {{"s_lo", c.dirichlet_box.s_range.lo},
                          {"s_hi", c.dirichlet_box.s_range.hi},
                          {"t_lo", t_lo},
                          {"t_hi", t_hi}};
  if (c.gamma_box) {
    doc["gamma_box"] = {{"u_lo", c.gamma_box->u_range.lo},
                        {"u_hi", c.gamma_box->u_range.hi},
                        {"v_lo", c.gamma_box->v_range.lo},
                        {"v_hi", c.gamma_box->v_range.hi}};
  }
  doc["taylor_order"] = c.taylor_order;
  doc["optimizer"] = {{"grid_points_per_dim", c.optimizer.grid_points_per_dim},
                      {"refinement_tolerance", c.optimizer.refinement_tolerance},
                      {"max_iterations", c.optimizer.max_iterations},
                      {"multistart_count", c.optimizer.multistart_count}};
  json output = {{"format", to_string(c.output.format)}};
  if (c.output.elicitation) {
    json rate = json::array();
    for (const auto& e : c.output.elicitation->rate_data) {
      rate.push_back({{"failures", e.failures}, {"exposure_time", e.exposure}});
    }
    output["elicitation"] = {{"alpha_counts", c.output.elicitation->alpha_counts},
                             {"rate_data", rate}};
  }
  doc["output"] = output;
  return doc;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::string to_string(OutputFormat format) {
  return format == OutputFormat::json ? "json" : "table";
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "table") return OutputFormat::table;
  throw ConfigError("unknown output format '" + name + "' (expected json or table)");
}

}  // namespace ccf::cli
