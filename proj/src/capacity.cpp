#include "chebcap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "chebcap/errors.hpp"

namespace chebcap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log of sin(num * pi / (2 den))^(2 den^2 / pi^2); a zero exponent gives 0.
double log_factor(double num, double den) {
  if (den == 0.0) return 0.0;
  const double s = std::sin(num * kPi / (2.0 * den));
  if (s <= 0.0) return kNegInf;
  return 2.0 * den * den / (kPi * kPi) * std::log(s);
}

double log_bound(const AngleCoordinates& a, const SolyninParams& p) {
  const std::size_t l = a.size();
  double acc = std::log(0.5);
  for (std::size_t j = 1; j < l; ++j) {
    acc += log_factor(a.psi[j - 1] - p.gamma_at(j), p.delta_at(j + 1) - p.gamma_at(j));
    acc += log_factor(p.gamma_at(j + 1) - a.phi[j], p.gamma_at(j + 1) - p.delta_at(j + 1));
  }
  return acc;
}

void check_angles(const AngleCoordinates& a) {
  if (a.size() < 2) throw InvalidInput("the several-interval capacity bound needs at least two intervals");
  if (a.psi.size() != a.phi.size()) throw InvalidInput("angle coordinate lists differ in length");
}

/// Golden-section maximization of f over [lo, hi].
template <typename F>
std::pair<double, double> line_max(const F& f, double lo, double hi, int iters) {
  constexpr double g = 0.6180339887498949;
  double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < iters && c < d; ++it) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = f(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace

bool feasible(const AngleCoordinates& a, const SolyninParams& p, double tol) {
  const std::size_t l = a.size();
  if (p.gamma.size() != l || p.delta.size() + 1 != l) return false;
  if (std::abs(p.gamma.front()) > tol || std::abs(p.gamma.back() - kPi) > tol) return false;
  for (std::size_t j = 2; j < l; ++j) {
    if (p.gamma_at(j) < a.phi[j - 1] - tol || p.gamma_at(j) > a.psi[j - 1] + tol) return false;
  }
  for (std::size_t j = 2; j <= l; ++j) {
    if (p.delta_at(j) < a.psi[j - 2] - tol || p.delta_at(j) > a.phi[j - 1] + tol) return false;
  }
  return true;
}

double solynin_bound(const AngleCoordinates& angles, const SolyninParams& params) {
  check_angles(angles);
  if (!feasible(angles, params)) throw InvalidInput("capacity bound parameters violate their constraints");
  return std::exp(log_bound(angles, params));
}

SolyninParams midpoint_params(const AngleCoordinates& a) {
  check_angles(a);
  const std::size_t l = a.size();
  SolyninParams p;
  p.gamma.assign(l, 0.0);
  p.gamma.back() = kPi;
  for (std::size_t j = 2; j < l; ++j) p.gamma[j - 1] = 0.5 * (a.phi[j - 1] + a.psi[j - 1]);
  for (std::size_t j = 2; j <= l; ++j) p.delta.push_back(0.5 * (a.phi[j - 1] + a.psi[j - 2]));
  return p;
}

double solynin_midpoint_bound(const AngleCoordinates& a) {
  check_angles(a);
  const std::size_t l = a.size();
  const auto& phi = a.phi;
  const auto& psi = a.psi;
  auto term = [](double arg, double width) {
    const double s = std::sin(arg);
    return s <= 0.0 ? kNegInf : width * width / (2.0 * kPi * kPi) * std::log(s);
  };
  // Indices below are 0-based: phi[j] is phi_{j+1}.
  double acc = std::log(0.5);
  // First interval (gamma_1 = 0).
  acc += term(psi[0] * kPi / (phi[1] + psi[0]), phi[1] + psi[0]);
  // Inner intervals, left-hand factors.
  for (std::size_t j = 1; j + 1 < l; ++j) {
    acc += term((psi[j] - phi[j]) * kPi / (2.0 * (phi[j + 1] - phi[j])), phi[j + 1] - phi[j]);
  }
  // Inner intervals, right-hand factors.
  for (std::size_t j = 1; j + 1 < l; ++j) {
    acc += term((psi[j] - phi[j]) * kPi / (2.0 * (psi[j] - psi[j - 1])), psi[j] - psi[j - 1]);
  }
  // Last interval (gamma_l = pi).
  const double w = 2.0 * kPi - phi[l - 1] - psi[l - 2];
  acc += term((kPi - phi[l - 1]) * kPi / w, w);
  return std::exp(acc);
}

OptimizedBound solynin_optimized_bound(const AngleCoordinates& a, const OptimizerOptions& opts) {
  check_angles(a);
  const std::size_t l = a.size();
  SolyninParams p = midpoint_params(a);
  double best = log_bound(a, p);

  struct Coord {
    double* value;
    double lo, hi;
  };
  std::vector<Coord> coords;
  // gamma_j degenerates (a sine factor hits zero) at both ends of its box.
  for (std::size_t j = 2; j < l; ++j) {
    coords.push_back({&p.gamma[j - 1], a.phi[j - 1] + opts.boundary_margin,
                      a.psi[j - 1] - opts.boundary_margin});
  }
  for (std::size_t j = 2; j <= l; ++j) coords.push_back({&p.delta[j - 2], a.psi[j - 2], a.phi[j - 1]});

  int sweep = 0;
  for (; sweep < opts.max_sweeps; ++sweep) {
    const double before = best;
    for (Coord& c : coords) {
      if (!(c.lo < c.hi)) continue;
      const double keep = *c.value;
      auto f = [&](double v) {
        *c.value = v;
        return log_bound(a, p);
      };
      const auto [v, fv] = line_max(f, c.lo, c.hi, opts.line_search_iterations);
      if (fv > best) {
        *c.value = v;
        best = fv;
      } else {
        *c.value = keep;
      }
    }
    if (std::exp(best) - std::exp(before) < opts.improvement_tol) {
      ++sweep;
      break;
    }
  }
  return {std::exp(best), p, sweep};
}

double capacity_upper_estimate(const IntervalUnion& set, int n, const RemezOptions& opts) {
  const MinimalPolyResult r = minimal_polynomial(set, n, opts);
  return std::pow(0.5 * r.deviation, 1.0 / n);
}

double capacity_lower_bound(const IntervalUnion& set) {
  const Normalized norm = normalize(set);
  const double scale = 1.0 / norm.map.scale;
  if (norm.set.size() == 1) return 0.5 * scale;
  return scale * solynin_optimized_bound(to_angles(norm.set)).value;
}

CapacityBracket capacity_bracket(const IntervalUnion& set, int n, const RemezOptions& opts) {
  CapacityBracket b;
  const Normalized norm = normalize(set);
  b.scale = 1.0 / norm.map.scale;
  b.degree_used = n;
  if (norm.set.size() == 1) {
    b.lower = b.midpoint_lower = 0.5 * b.scale;
  } else {
    const AngleCoordinates angles = to_angles(norm.set);
    const OptimizedBound opt = solynin_optimized_bound(angles);
    b.lower = b.scale * opt.value;
    b.lower_params = opt.params;
    b.midpoint_lower = b.scale * solynin_midpoint_bound(angles);
  }
  b.upper = capacity_upper_estimate(set, n, opts);
  return b;
}

RatioReport ratio_sequence(const IntervalUnion& set, int k_max, const RemezOptions& opts) {
  if (k_max < 1 || k_max > 50) throw InvalidInput("ratio_sequence needs 1 <= k_max <= 50");
  RatioReport rep;
  rep.cap_est = capacity_lower_bound(set);
  for (int k = 1; k <= k_max; ++k) {
    rep.k.push_back(k);
    rep.deviations.push_back(minimal_polynomial(set, k, opts).deviation);
  }
  rep.upper_est = std::pow(0.5 * rep.deviations.back(), 1.0 / k_max);
  for (std::size_t i = 0; i < rep.k.size(); ++i) {
    rep.ratios.push_back(rep.deviations[i] / std::pow(rep.cap_est, rep.k[i]));
    rep.upper_ratios.push_back(rep.deviations[i] / std::pow(rep.upper_est, rep.k[i]));
  }
  rep.min_ratio = *std::min_element(rep.ratios.begin(), rep.ratios.end());
  rep.max_ratio = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  return rep;
}

}  // namespace chebcap
