#pragma once

/// @file box_search.hpp
/// Deterministic derivative-free optimisation of a function of Dirichlet
/// hyperparameters (s, t) over a box intersected with the simplex.
///
/// Phase one scores the vertices of box-and-simplex and a coarse lattice.
/// Phase two refines the best starts by bounded golden-section line
/// searches along s and along exchange directions e_a - e_b in t, which
/// keep sum t = 1 and stay inside the box.

#include <functional>
#include <span>
#include <vector>

#include "ccf/imprecise.hpp"

namespace ccf {

struct OptimizerSettings {
  int grid_points_per_dim = 5;
  double refinement_tolerance = 1e-9;
  int max_iterations = 10000;
  int multistart_count = 8;

  void validate() const;
  friend bool operator==(const OptimizerSettings&, const OptimizerSettings&) = default;
};

enum class Sense { minimize, maximize };

struct HyperPoint {
  double s;
  std::vector<double> t;
  friend bool operator==(const HyperPoint&, const HyperPoint&) = default;
};

struct SearchResult {
  double value;
  HyperPoint argument;
  bool converged;
  int sweeps;  // refinement sweeps of the start that produced the optimum
  long evaluations;
};

using HyperObjective = std::function<double(double s, std::span<const double> t)>;

/// Phase-one candidates, in a fixed order. Every point is feasible.
std::vector<HyperPoint> candidate_points(const DirichletBox& box, const OptimizerSettings& settings);

/// Throws InfeasibleError if the box misses the simplex.
SearchResult optimize_over_box(const HyperObjective& objective, const DirichletBox& box,
                               const OptimizerSettings& settings, Sense sense);

}  // namespace ccf
