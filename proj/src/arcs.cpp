#include "chebcap/arcs.hpp"

#include <cmath>

#include "chebcap/errors.hpp"

namespace chebcap {

namespace {

constexpr double kZeroCoeff = 1e-13;

std::vector<double> lifted_coeffs(const ChebExpansion& b, int m, int shift) {
  if (m < 0) throw InvalidInput("lift degree must be >= 0");
  if (b.degree() > m) throw InvalidInput("Chebyshev expansion degree exceeds m");
  const double expected = m == 0 ? 1.0 : std::ldexp(1.0, 1 - m);
  if (std::abs(b[m] - expected) > 1e-12 * expected) {
    throw InvalidInput("leading Chebyshev coefficient is not 2^(1-m); the polynomial is not monic");
  }
  std::vector<double> c(2 * m + 1 + shift, 0.0);
  c[m + shift] = std::ldexp(b[0], m);
  for (int k = 1; k <= m; ++k) {
    const double v = std::ldexp(b[k], m - 1);
    c[m + k + shift] = v;
    c[m - k + shift] = v;
  }
  c.back() = 1.0;
  return c;
}

}  // namespace

ArcSet::ArcSet(IntervalUnion projection) : projection_(std::move(projection)) {
  if (projection_.lower() < -1.0 || projection_.upper() > 1.0) {
    throw InvalidInput("arc projection must lie inside [-1, 1]");
  }
}

double robinson_capacity(double cap_c) {
  if (!(cap_c > 0.0 && cap_c <= 0.5)) throw InvalidInput("projection capacity must lie in (0, 1/2]");
  return std::sqrt(2.0 * cap_c);
}

ChebExpansion squared_modulus_series(const Polynomial& p) {
  std::vector<double> a = autocorrelate(p.coeffs());
  for (std::size_t l = 1; l < a.size(); ++l) a[l] *= 2.0;
  return ChebExpansion(std::move(a));
}

double arc_sup_norm(const Polynomial& p, const ArcSet& arcs) {
  const ChebExpansion q = squared_modulus_series(p);
  const int samples = 64 * (p.degree() + 1);
  const double sq = sup_norm(arcs.projection(), samples, [&](double x) { return q(x); });
  return std::sqrt(sq);
}

ArcBoundReport arc_lower_bound(const Polynomial& p, const ArcSet& arcs, double cap_gamma) {
  if (!p.is_monic()) throw InvalidInput("arc lower bound needs a monic polynomial");
  ArcBoundReport r;
  r.n = p.degree();
  r.cap_gamma = cap_gamma;
  while (r.k_star < r.n && std::abs(p[r.k_star]) <= kZeroCoeff) ++r.k_star;
  if (r.k_star == r.n) throw InvalidInput("P = z^n is excluded from the arc lower bound");
  r.b_kstar = p[r.k_star];
  r.lower = std::sqrt(2.0 * std::abs(r.b_kstar)) * std::pow(cap_gamma, r.n - r.k_star);
  r.sup_norm = arc_sup_norm(p, arcs);
  return r;
}

Polynomial lift_even(const ChebExpansion& m_poly, int m) {
  return Polynomial(lifted_coeffs(m_poly, m, 0), 0.0);
}

Polynomial lift_odd(const ChebExpansion& m_poly, int m) {
  return Polynomial(lifted_coeffs(m_poly, m, 1), 0.0);
}

Polynomial arc_lifted_polynomial(const ArcSet& arcs, int n, const RemezOptions& opts) {
  if (n < 1) throw InvalidInput("arc degree must be >= 1");
  const int m = n / 2;
  ChebExpansion b({1.0});
  if (m > 0) {
    std::vector<double> c = to_cheb(minimal_polynomial(arcs.projection(), m, opts).poly).coeffs();
    c.resize(m + 1, 0.0);
    c[m] = std::ldexp(1.0, 1 - m);
    b = ChebExpansion(std::move(c));
  }
  return n % 2 == 0 ? lift_even(b, m) : lift_odd(b, m);
}

double arc_deviation_upper(const ArcSet& arcs, int n, const RemezOptions& opts) {
  if (n < 1) throw InvalidInput("arc degree must be >= 1");
  const int m = n / 2;
  if (m == 0) return 1.0;
  return std::ldexp(minimal_polynomial(arcs.projection(), m, opts).deviation, m);
}

}  // namespace chebcap
