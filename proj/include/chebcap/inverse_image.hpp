#pragma once

#include <vector>

#include "chebcap/chebpoly.hpp"
#include "chebcap/intervals.hpp"
#include "chebcap/remez.hpp"

namespace chebcap {

struct InverseImageResult {
  IntervalUnion image;                  ///< {x real : -1 <= P(x) <= 1}
  bool is_real = false;                 ///< all 2n roots of P^2 - 1 are real
  std::vector<double> boundary_points;  ///< real solutions of P(x) = +-1, ascending
  int boundary_multiplicity = 0;        ///< those solutions counted with multiplicity
};

/// Real section of P^{-1}([-1, 1]). Throws EmptyImage when it has no interval.
InverseImageResult inverse_image(const Polynomial& p);

/// (2 |c_n|)^{-1/n}; throws InvalidInput when the inverse image is not real.
double capacity_of_inverse_image(const Polynomial& p);

struct ComposedMinimal {
  Polynomial poly;   ///< 2 / (2 c_n)^k T_k(P), monic of degree k n
  double deviation;  ///< 2 / (2 |c_n|)^k
};

ComposedMinimal composed_minimal_sequence(const Polynomial& p, int k);

/// Evaluates 2 / (2 c_n)^k T_k(P(x)) through the recurrence instead of the
/// expanded coefficients.
double eval_composed(const Polynomial& p, int k, double x);

struct SharpnessReport {
  int degree = 0;
  double remez_deviation = 0.0;
  double predicted_deviation = 0.0;  ///< 2 cap(A)^n
  double relative_error = 0.0;
  double coefficient_distance = 0.0; ///< Remez polynomial vs P / c_n
  bool pass = false;
};

/// Solves the minimax problem on A = P^{-1}([-1, 1]) and compares with the
/// closed form L_n(A) = 2 cap(A)^n and the monic rescale of P.
SharpnessReport verify_sharpness(const Polynomial& p, const RemezOptions& opts = {});

struct TwoIntervalMinimal {
  Polynomial poly;
  double deviation;
};

/// Closed-form minimal polynomial on [-1, -alpha] U [alpha, 1] for even n.
TwoIntervalMinimal symmetric_two_interval_minpoly(double alpha, int n);

/// The degree-2 map (2x^2 - alpha^2 - 1) / (1 - alpha^2) whose inverse image
/// is [-1, -alpha] U [alpha, 1].
Polynomial two_interval_map(double alpha);

}  // namespace chebcap
