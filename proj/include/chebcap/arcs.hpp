#pragma once

#include "chebcap/chebpoly.hpp"
#include "chebcap/intervals.hpp"
#include "chebcap/remez.hpp"

namespace chebcap {

/// Unit-circle arcs {z : |z| = 1, Re z in C}, symmetric about the real axis.
class ArcSet {
 public:
  /// Throws InvalidInput unless projection lies inside [-1, 1].
  explicit ArcSet(IntervalUnion projection);
  static ArcSet full_circle() { return ArcSet(IntervalUnion::single(-1.0, 1.0)); }

  const IntervalUnion& projection() const { return projection_; }

 private:
  IntervalUnion projection_;
};

/// sqrt(2 cap_c) for 0 < cap_c <= 1/2.
double robinson_capacity(double cap_c);

/// A_0 + 2 sum_l A_l T_l(x), which equals |P(z)|^2 for |z| = 1, Re z = x.
ChebExpansion squared_modulus_series(const Polynomial& p);

/// max |P(z)| over the arcs, via the squared-modulus series on the projection.
double arc_sup_norm(const Polynomial& p, const ArcSet& arcs);

struct ArcBoundReport {
  int n = 0;
  int k_star = 0;         ///< lowest index with a nonzero coefficient
  double b_kstar = 0.0;
  double lower = 0.0;     ///< sqrt(2 |b_k*|) cap_gamma^(n - k*)
  double sup_norm = 0.0;
  double cap_gamma = 0.0;
};

/// Needs monic P whose lowest nonzero coefficient is below the leading one.
ArcBoundReport arc_lower_bound(const Polynomial& p, const ArcSet& arcs, double cap_gamma);

/// z^m sum_k b_k 2^(m-1) (z^k + z^-k) with the k = 0 term 2^m b_0; monic of degree 2m.
Polynomial lift_even(const ChebExpansion& m_poly, int m);
/// z times lift_even; monic of degree 2m + 1.
Polynomial lift_odd(const ChebExpansion& m_poly, int m);

/// Constructive upper bound 2^m L_m(E) on L_n of the arcs over E, m = floor(n/2).
double arc_deviation_upper(const ArcSet& arcs, int n, const RemezOptions& opts = {});

/// The lifted polynomial behind arc_deviation_upper.
Polynomial arc_lifted_polynomial(const ArcSet& arcs, int n, const RemezOptions& opts = {});

}  // namespace chebcap
