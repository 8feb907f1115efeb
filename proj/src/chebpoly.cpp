#include "chebcap/chebpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chebcap/errors.hpp"

namespace chebcap {

namespace {

void check_finite(const std::vector<double>& c) {
  for (double v : c) {
    if (!std::isfinite(v)) throw NumericOverflow("polynomial coefficient is not finite");
  }
}

void check_degree(int n, const char* what) {
  if (n > degree_cap()) {
    throw InvalidInput(std::string(what) + ": degree " + std::to_string(n) +
                       " exceeds the degree cap " + std::to_string(degree_cap()));
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs, double drop_tol) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  check_finite(coeffs_);
  double scale = 0.0;
  for (double c : coeffs_) scale = std::max(scale, std::abs(c));
  while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= drop_tol * scale) coeffs_.pop_back();
  if (scale == 0.0) coeffs_.assign(1, 0.0);
}

Polynomial Polynomial::monomial(int degree, double coeff) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

double Polynomial::operator()(double x) const {
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

std::complex<double> Polynomial::operator()(std::complex<double> z) const {
  std::complex<double> r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * z + *it;
  return r;
}

double Polynomial::magnitude(double x) const {
  const double ax = std::abs(x);
  double r = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * ax + std::abs(*it);
  return r;
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) return Polynomial();
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Polynomial(std::move(d), 0.0);
}

Polynomial Polynomial::compose_affine(double scale, double shift) const {
  std::vector<double> r{coeffs_.back()};
  for (int k = degree() - 1; k >= 0; --k) {
    std::vector<double> next(r.size() + 1, 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      next[i] += shift * r[i];
      next[i + 1] += scale * r[i];
    }
    next[0] += coeffs_[k];
    r = std::move(next);
  }
  return Polynomial(std::move(r), 0.0);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw InvalidInput("the zero polynomial has no monic form");
  std::vector<double> c = coeffs_;
  const double lead = c.back();
  for (double& v : c) v /= lead;
  c.back() = 1.0;
  return Polynomial(std::move(c), 0.0);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-1.0) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> c = p.coeffs_;
  for (double& v : c) v *= s;
  return Polynomial(std::move(c), 0.0);
}

Polynomial operator+(const Polynomial& p, double c) {
  std::vector<double> v = p.coeffs_;
  v[0] += c;
  return Polynomial(std::move(v), 0.0);
}

Polynomial operator-(const Polynomial& p, double c) { return p + (-c); }

double coefficient_distance(const Polynomial& a, const Polynomial& b) {
  const int n = std::max(a.degree(), b.degree());
  double d = 0.0;
  for (int k = 0; k <= n; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

ChebExpansion::ChebExpansion(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  check_finite(coeffs_);
}

double ChebExpansion::operator()(double x) const {
  double b1 = 0.0, b2 = 0.0;
  for (int k = degree(); k >= 1; --k) {
    const double b0 = coeffs_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + x * b1 - b2;
}

ChebExpansion ChebExpansion::derivative() const {
  const int n = degree();
  if (n == 0) return ChebExpansion();
  std::vector<double> d(static_cast<std::size_t>(n) + 2, 0.0);
  for (int k = n; k >= 1; --k) d[k - 1] = d[k + 1] + 2.0 * k * coeffs_[k];
  d[0] *= 0.5;
  d.resize(static_cast<std::size_t>(n));
  return ChebExpansion(std::move(d));
}

double cheb_T(int k, double x) {
  if (k < 0) throw InvalidInput("Chebyshev degree must be nonnegative");
  if (k == 0) return 1.0;
  double t0 = 1.0, t1 = x;
  for (int j = 1; j < k; ++j) {
    const double t2 = 2.0 * x * t1 - t0;
    t0 = t1;
    t1 = t2;
  }
  return t1;
}

Polynomial compose_T(int k, const Polynomial& p) {
  if (k < 1) throw InvalidInput("compose_T needs k >= 1");
  check_degree(k * p.degree(), "compose_T");
  Polynomial prev({1.0});
  Polynomial cur = p;
  const Polynomial two_p = 2.0 * p;
  for (int j = 1; j < k; ++j) {
    Polynomial next = two_p * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> autocorrelate(std::span<const double> b) {
  const std::size_t n = b.size();
  std::vector<double> a(n, 0.0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k + l < n; ++k) a[l] += b[k] * b[k + l];
  return a;
}

ChebExpansion to_cheb(const Polynomial& p) {
  const int n = p.degree();
  check_degree(n, "to_cheb");
  // Horner in the Chebyshev basis, r <- x r + c_k, accumulated in extended
  // precision: the monomial coefficients cancel heavily at high degree.
  std::vector<long double> r{p[n]};
  for (int k = n - 1; k >= 0; --k) {
    std::vector<long double> next(r.size() + 1, 0.0L);
    next[1] += r[0];
    for (std::size_t j = 1; j < r.size(); ++j) {
      next[j + 1] += 0.5L * r[j];
      next[j - 1] += 0.5L * r[j];
    }
    next[0] += p[k];
    r = std::move(next);
  }
  std::vector<double> out(r.begin(), r.begin() + n + 1);
  return ChebExpansion(std::move(out));
}

Polynomial to_monomial(const ChebExpansion& b) {
  const int n = b.degree();
  check_degree(n, "to_monomial");
  std::vector<long double> acc(static_cast<std::size_t>(n) + 1, 0.0L);
  std::vector<long double> t_prev{1.0L}, t_cur{0.0L, 1.0L};
  acc[0] += b[0];
  for (int j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < t_cur.size(); ++i) acc[i] += b[j] * t_cur[i];
    std::vector<long double> t_next(t_cur.size() + 1, 0.0L);
    for (std::size_t i = 0; i < t_cur.size(); ++i) t_next[i + 1] += 2.0L * t_cur[i];
    for (std::size_t i = 0; i < t_prev.size(); ++i) t_next[i] -= t_prev[i];
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return Polynomial(std::vector<double>(acc.begin(), acc.end()));
}

ChebExpansion cheb_interpolate_lobatto(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("interpolation needs at least one value");
  const int n = static_cast<int>(values.size()) - 1;
  if (n == 0) return ChebExpansion({values[0]});
  std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 0; k <= n; ++k) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double w = (j == 0 || j == n) ? 0.5 : 1.0;
      // cos(j k pi / n) with the angle reduced mod 2n for accuracy
      const int m = (j * k) % (2 * n);
      s += w * values[j] * std::cos(std::numbers::pi * m / n);
    }
    c[k] = 2.0 * s / n;
  }
  c[0] *= 0.5;
  c[n] *= 0.5;
  return ChebExpansion(std::move(c));
}

double root_bound(const Polynomial& p) {
  if (p.is_zero()) throw InvalidInput("the zero polynomial has no root bound");
  double m = 0.0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, std::abs(p[k] / p.leading()));
  return 1.0 + m;
}

}  // namespace chebcap
