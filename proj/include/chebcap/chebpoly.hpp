#pragma once

#include <complex>
#include <span>
#include <vector>

namespace chebcap {

/// Relative magnitude below which trailing coefficients are dropped.
inline constexpr double kDropTolerance = 1e-13;

/// Real polynomial in the monomial basis, c_0 + c_1 x + ... + c_n x^n.
/// The zero polynomial is stored as the single coefficient 0.
class Polynomial {
 public:
  Polynomial() : coeffs_{0.0} {}
  explicit Polynomial(std::vector<double> coeffs, double drop_tol = kDropTolerance);

  static Polynomial monomial(int degree, double coeff = 1.0);
  static Polynomial linear(double c0, double c1) { return Polynomial({c0, c1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator[](int k) const { return k <= degree() ? coeffs_[k] : 0.0; }
  double leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  bool is_monic() const { return leading() == 1.0; }

  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> z) const;
  /// Bound on the rounding error of operator()(x): sum |c_k| |x|^k.
  double magnitude(double x) const;

  Polynomial derivative() const;
  /// p(scale * x + shift).
  Polynomial compose_affine(double scale, double shift) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& p);
  friend Polynomial operator+(const Polynomial& p, double c);
  friend Polynomial operator-(const Polynomial& p, double c);

 private:
  std::vector<double> coeffs_;
};

/// Max |a_k - b_k| over the union of both coefficient ranges.
double coefficient_distance(const Polynomial& a, const Polynomial& b);

/// Finite Chebyshev series b_0 T_0 + ... + b_n T_n.
class ChebExpansion {
 public:
  ChebExpansion() : coeffs_{0.0} {}
  explicit ChebExpansion(std::vector<double> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator[](int k) const { return k <= degree() ? coeffs_[k] : 0.0; }

  /// Clenshaw recurrence.
  double operator()(double x) const;
  ChebExpansion derivative() const;

 private:
  std::vector<double> coeffs_;
};

/// T_k(x) by the three-term recurrence, valid for every real x.
double cheb_T(int k, double x);

/// T_k(P(x)) as a polynomial of degree k * deg P.
Polynomial compose_T(int k, const Polynomial& p);

/// A_l = sum_k b_k b_{k+l}, l = 0..n.
std::vector<double> autocorrelate(std::span<const double> b);

ChebExpansion to_cheb(const Polynomial& p);
Polynomial to_monomial(const ChebExpansion& b);

/// Chebyshev coefficients of the degree-n interpolant through f at the
/// Chebyshev-Lobatto points cos(j pi / n), given as values[j] = f(cos(j pi / n)).
ChebExpansion cheb_interpolate_lobatto(std::span<const double> values);

struct Root {
  double x;
  int multiplicity;
};

struct RootOptions {
  /// Isolating intervals narrower than this that still show several sign
  /// variations are reported as one clustered root.
  double cluster_width = 1e-8;
};

/// Real roots of p in [lo, hi], ascending. Isolation subdivides [lo, hi] and
/// counts sign variations of the Bernstein coefficients (Descartes' rule);
/// isolated simple roots are polished by bisection and Newton.
std::vector<Root> real_roots_in(const Polynomial& p, double lo, double hi,
                                const RootOptions& opts = {});

/// Solutions of p(x) = level in [lo, hi], ascending. Works on the monotone
/// pieces between the critical points of p; a critical point where p is
/// within rounding of the level is a tangency and is reported with
/// multiplicity (its multiplicity as a root of p') + 1. Prefer this over
/// real_roots_in(p - level) when tangencies are expected.
std::vector<Root> level_set(const Polynomial& p, double level, double lo, double hi,
                            const RootOptions& opts = {});

/// Cauchy bound: every root z satisfies |z| <= the returned value.
double root_bound(const Polynomial& p);

}  // namespace chebcap
