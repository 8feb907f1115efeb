#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "chebcap/chebpoly.hpp"
#include "chebcap/intervals.hpp"

namespace chebcap {

struct RemezOptions {
  int max_iterations = 200;
  /// Stop once (max|M| - level) / max|M| drops below this.
  double tolerance = 1e-12;
  /// When the level stops increasing, a gap below this is still accepted.
  double acceptance = 1e-9;
  /// Candidate search grid: per interval, min_samples plus this many samples
  /// per expected oscillation.
  int samples_per_oscillation = 24;
  int min_samples = 48;
};

/// Polynomial of degree <= n held by its values at n + 1 distinct nodes and
/// evaluated with the first (modified Lagrange) barycentric formula.
class BarycentricPolynomial {
 public:
  BarycentricPolynomial() = default;
  BarycentricPolynomial(std::vector<double> nodes, std::vector<double> values);

  /// Builds the monic degree-n polynomial with values sign_j * level at the
  /// n + 1 ascending nodes, sign_j = (-1)^(n-j). The level is determined by
  /// monicity: level = 1 / sum_j |w_j|.
  static BarycentricPolynomial levelled_monic(std::vector<double> nodes);

  double operator()(double x) const;
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }
  /// Leading coefficient of the interpolant, sum_j w_j y_j.
  double leading() const;

 private:
  std::vector<double> nodes_;
  std::vector<double> values_;
  std::vector<double> weights_;  // w_j / W
  double log_weight_scale_ = 0.0;  // log W
};

/// Monic minimal polynomial of degree n on a union of intervals.
struct MinimalPolyResult {
  int degree = 0;
  Polynomial poly;                          ///< monic, input coordinates
  double deviation = 0.0;                   ///< L_n: sup of |M_n| over the set
  double level = 0.0;                       ///< levelled error at the final reference
  std::vector<double> alternation_points;   ///< x_0 < ... < x_n, M_n(x_j) = (-1)^(n-j) L_n
  int iterations = 0;
  double residual = 0.0;                    ///< deviation - level

  // Stable representation used by operator(): M_n(x) = dilation * normalized(frame(x)).
  AffineMap frame;                          ///< input -> hull [-1, 1]
  double dilation = 1.0;
  BarycentricPolynomial normalized;
  ChebExpansion normalized_cheb;            ///< same polynomial in the hull frame's Chebyshev basis

  double operator()(double x) const { return dilation * normalized(frame(x)); }
};

/// Multi-interval Remez exchange. Throws InvalidInput for n < 1 or n above
/// the degree cap and ConvergenceError when the tolerance is not reached.
MinimalPolyResult minimal_polynomial(const IntervalUnion& set, int n, const RemezOptions& opts = {});

/// Sup of |p| over the set, on a Chebyshev-Lobatto grid per interval with
/// golden-section refinement of the grid maxima.
double sup_norm(const IntervalUnion& set, int samples_per_interval,
                const std::function<double(double)>& f);

struct BlowUpResult {
  IntervalUnion c_prime;
  int ell_prime = 0;
};

/// C' = {x : |M_n(x)| <= L_n}, a superset of C made of at most n intervals.
BlowUpResult blow_up_set(const IntervalUnion& set, const MinimalPolyResult& result);

struct WitnessReport {
  double grid_max = 0.0;        ///< max |M_n| over the witness grid
  bool bounded = false;         ///< grid_max <= L_n + residual
  bool alternates = false;      ///< signs (-1)^(n-j) at the reported points
  bool sandwich_applicable = false;
  bool sandwich_ok = false;
  double sandwich_deviation = 0.0;
  bool pass = false;
};

/// Checks boundedness and alternation of `result` on a grid, then re-solves on
/// C'' (default: C' itself) and compares deviations when C subset C'' subset C'.
WitnessReport minimality_witness(const IntervalUnion& set, const MinimalPolyResult& result,
                                 int grid_density,
                                 const std::optional<IntervalUnion>& c_double_prime = std::nullopt,
                                 const RemezOptions& opts = {});

}  // namespace chebcap
