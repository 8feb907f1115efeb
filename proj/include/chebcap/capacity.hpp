#pragma once

#include <vector>

#include "chebcap/intervals.hpp"
#include "chebcap/remez.hpp"

namespace chebcap {

/// Free parameters of the several-interval capacity lower bound, in radians.
/// gamma[j-1] holds gamma_j (j = 1..l, gamma_1 = 0, gamma_l = pi);
/// delta[j-2] holds delta_j (j = 2..l).
struct SolyninParams {
  std::vector<double> gamma;
  std::vector<double> delta;

  double gamma_at(std::size_t j) const { return gamma[j - 1]; }
  double delta_at(std::size_t j) const { return delta[j - 2]; }
};

/// Checks phi_j <= gamma_j <= psi_j and psi_{j-1} <= delta_j <= phi_j.
bool feasible(const AngleCoordinates& angles, const SolyninParams& params, double tol = 1e-12);

/// Lower bound for the capacity of a normalized union of l >= 2 intervals:
///
///   cap E >= 1/2 prod_{j=1}^{l-1}
///       sin((psi_j - gamma_j) pi / (2 (delta_{j+1} - gamma_j)))^{2 (delta_{j+1} - gamma_j)^2 / pi^2}
///     * sin((gamma_{j+1} - phi_{j+1}) pi / (2 (gamma_{j+1} - delta_{j+1})))^{2 (gamma_{j+1} - delta_{j+1})^2 / pi^2}
///
/// A factor whose exponent vanishes counts as 1. Throws InvalidInput for
/// infeasible parameters or l < 2.
double solynin_bound(const AngleCoordinates& angles, const SolyninParams& params);

/// gamma_j = (phi_j + psi_j) / 2 for 1 < j < l, delta_j = (phi_j + psi_{j-1}) / 2.
SolyninParams midpoint_params(const AngleCoordinates& angles);

/// The bound at midpoint_params, evaluated from its own reduced product
/// (independent of solynin_bound).
double solynin_midpoint_bound(const AngleCoordinates& angles);

struct OptimizerOptions {
  int max_sweeps = 500;
  double improvement_tol = 1e-13;
  double boundary_margin = 1e-9;
  int line_search_iterations = 90;
};

struct OptimizedBound {
  double value;
  SolyninParams params;
  int sweeps;
};

/// Coordinate ascent with golden-section line searches, started at the
/// midpoint parameters. Deterministic; the result never falls below the
/// midpoint value.
OptimizedBound solynin_optimized_bound(const AngleCoordinates& angles, const OptimizerOptions& opts = {});

/// (L_n(E) / 2)^{1/n}, an upper estimate of cap E.
double capacity_upper_estimate(const IntervalUnion& set, int n, const RemezOptions& opts = {});

struct CapacityBracket {
  double lower = 0.0;
  double midpoint_lower = 0.0;
  SolyninParams lower_params;  ///< empty for a single interval
  double upper = 0.0;
  int degree_used = 0;
  double scale = 1.0;          ///< half-width of the hull; capacities scale by it
};

CapacityBracket capacity_bracket(const IntervalUnion& set, int n, const RemezOptions& opts = {});

/// Lower capacity bound alone (no Remez solve): exact for one interval,
/// optimized Solynin bound otherwise, scaled to the input frame.
double capacity_lower_bound(const IntervalUnion& set);

struct RatioReport {
  std::vector<int> k;
  std::vector<double> deviations;    ///< L_k(E)
  std::vector<double> ratios;        ///< L_k / lower^k, each >= 2 by construction of lower
  std::vector<double> upper_ratios;  ///< L_k / upper^k, diagnostic only
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double cap_est = 0.0;              ///< the certified lower bound used as base
  double upper_est = 0.0;            ///< upper estimate at degree k_max
};

RatioReport ratio_sequence(const IntervalUnion& set, int k_max, const RemezOptions& opts = {});

}  // namespace chebcap
