// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "chebcap/arcs.hpp"
#include "chebcap/capacity.hpp"
#include "chebcap/cli.hpp"
#include "chebcap/errors.hpp"
#include "chebcap/inverse_image.hpp"
#include "chebcap/remez.hpp"
#include "oracles.hpp"

using namespace chebcap;

namespace {

struct Outcome {
  bool pass = true;
  bool warn = false;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("CRITERION %d [%s] %s: %s (%.2fs)\n", id, o.pass ? (o.warn ? "PASS, WARN" : "PASS") : "FAIL", title,
              o.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

IntervalUnion U(std::vector<std::pair<double, double>> p) { return IntervalUnion::from_pairs(std::move(p)); }
IntervalUnion pair_set(double a) { return U({{-1.0, -a}, {a, 1.0}}); }

const Polynomial X = Polynomial::linear(0.0, 1.0);
Polynomial T(int k) { return compose_T(k, X); }

const double kAlphas[] = {0.3, 0.5, 0.6, 0.7};

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const IntervalUnion I = IntervalUnion::single(-1, 1);
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    const double dev = minimal_polynomial(I, n).deviation;
    worst = std::max(worst, std::abs(dev - std::ldexp(1.0, 1 - n)) / std::ldexp(1.0, 1 - n));
  }
  const CapacityBracket b = capacity_bracket(I, 20);
  const double bracket_err = std::max(std::abs(b.lower - 0.5), std::abs(b.upper - 0.5));
  const double secs = elapsed_since(t0);
  return {worst <= 1e-9 && bracket_err <= 1e-10 && secs < 5.0, false,
          "max rel err " + sci(worst) + ", bracket err " + sci(bracket_err) + ", " + sci(secs) + " s"};
}

Outcome criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_rel = 0.0, worst_coef = 0.0;
  for (double a : kAlphas) {
    for (int n = 2; n <= 12; n += 2) {
      const MinimalPolyResult r = minimal_polynomial(pair_set(a), n);
      const TwoIntervalMinimal cf = symmetric_two_interval_minpoly(a, n);
      worst_rel = std::max(worst_rel, std::abs(r.deviation - cf.deviation) / cf.deviation);
      worst_coef = std::max(worst_coef, coefficient_distance(r.poly, cf.poly));
    }
  }
  const double secs = elapsed_since(t0);
  return {worst_rel <= 1e-8 && worst_coef <= 1e-7 && secs < 30.0, false,
          "max rel err " + sci(worst_rel) + ", max coef dist " + sci(worst_coef) + ", " + sci(secs) + " s"};
}

std::vector<Polynomial> sharpness_fixtures() {
  std::vector<Polynomial> out;
  for (int n = 2; n <= 8; ++n) out.push_back(T(n));
  for (double l : {1.2, 1.5}) out.push_back(l * T(2));
  for (auto [l, m] : {std::pair{1.25, 0.0}, {1.4, 0.1}, {1.6, -0.3}}) out.push_back(l * T(3) + m);
  for (auto [l, m] : {std::pair{1.1, 0.0}, {1.3, 0.15}, {2.0, 0.5}}) out.push_back(l * T(4) + m);
  out.push_back(compose_T(2, 1.2 * T(4)));
  out.push_back(compose_T(3, 1.2 * T(2)));
  for (double a : kAlphas) out.push_back(two_interval_map(a));
  return out;
}

Outcome criterion3() {
  int used = 0, bad = 0, max_components = 0;
  double worst_rel = 0.0, worst_grid = 0.0;
  for (const Polynomial& p : sharpness_fixtures()) {
    const InverseImageResult img = inverse_image(p);
    if (!img.is_real) continue;
    ++used;
    max_components = std::max<int>(max_components, static_cast<int>(img.image.size()));
    const SharpnessReport s = verify_sharpness(p);
    worst_rel = std::max(worst_rel, s.relative_error);
    if (s.relative_error > 1e-7) ++bad;
    for (int k = 1; k <= 4; ++k) {
      const ComposedMinimal cm = composed_minimal_sequence(p, k);
      const double sup = oracle::grid_sup(img.image, [&](double x) { return eval_composed(p, k, x); });
      const double rel = std::abs(sup - cm.deviation) / cm.deviation;
      worst_grid = std::max(worst_grid, rel);
      if (rel > 1e-8) ++bad;
    }
  }
  return {used >= 20 && bad == 0, false,
          std::to_string(used) + " fixtures (up to " + std::to_string(max_components) +
              " intervals), max rel err " + sci(worst_rel) + ", composed grid err " + sci(worst_grid)};
}

Outcome criterion4() {
  double worst_pair = 0.0;
  for (double a : kAlphas) {
    const double v = solynin_optimized_bound(to_angles(pair_set(a))).value;
    worst_pair = std::max(worst_pair, std::abs(v - 0.5 * std::sqrt(1 - a * a)));
  }
  // Inverse images with three and four components; their capacity is exact.
  const std::vector<Polynomial> many = {1.25 * T(3), 1.4 * T(3) + 0.1, 1.6 * T(3) - 0.3,
                                        1.1 * T(4),  1.3 * T(4) + 0.15, 2.0 * T(4) + 0.5,
                                        compose_T(2, 1.2 * T(4))};
  double worst_gap = 0.0;
  std::ostringstream per;
  for (const Polynomial& p : many) {
    const IntervalUnion a = inverse_image(p).image;
    const double upper = capacity_upper_estimate(a, p.degree());
    const double lower = capacity_lower_bound(a);
    const double gap = (upper - lower) / upper;
    worst_gap = std::max(worst_gap, gap);
    per << " l" << a.size() << ":" << sci(gap);
  }
  const bool pass = worst_pair <= 1e-8 && worst_gap < 0.05;
  return {pass, pass && worst_gap >= 0.02,
          "pair err " + sci(worst_pair) + ", worst relative gap " + sci(worst_gap) + " [" + per.str() + " ]"};
}

Outcome criterion5() {
  std::vector<NamedSet> sets = fixture_battery();
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) sets.push_back({"random", random_union(rng, 4)});
  int violations = 0, checks = 0;
  double worst = INFINITY;
  for (const NamedSet& ns : sets) {
    const double lower = capacity_lower_bound(ns.set);
    for (int n = 1; n <= 20; ++n) {
      const double dev = minimal_polynomial(ns.set, n).deviation;
      const double slack = (dev - 2.0 * std::pow(lower, n)) / dev;
      worst = std::min(worst, slack);
      if (slack < -1e-9) ++violations;
      ++checks;
    }
  }
  return {violations == 0, false,
          std::to_string(checks) + " checks, " + std::to_string(violations) + " violations, worst slack " + sci(worst)};
}

Outcome criterion6() {
  const RatioReport a = ratio_sequence(IntervalUnion::single(-1, 1), 10);
  double worst_i = 0.0;
  for (double r : a.ratios) worst_i = std::max(worst_i, std::abs(r - 2.0));
  const RatioReport e = ratio_sequence(pair_set(0.6), 20);
  double worst_even = 0.0, min_odd_excess = INFINITY;
  for (std::size_t i = 0; i < e.k.size(); ++i) {
    if (e.k[i] % 2 == 0) worst_even = std::max(worst_even, std::abs(e.ratios[i] - 2.0));
    else min_odd_excess = std::min(min_odd_excess, e.ratios[i] - 2.0);
  }
  const double global_min = std::min(a.min_ratio, e.min_ratio);
  const bool pass = worst_i <= 1e-9 && worst_even <= 1e-9 && min_odd_excess > 0.0 &&
                    std::abs(global_min - 2.0) <= 1e-6;
  return {pass, false,
          "[-1,1] err " + sci(worst_i) + ", E0.6 even err " + sci(worst_even) + ", odd excess >= " +
              sci(min_odd_excess) + ", min " + sci(global_min)};
}

Outcome criterion7() {
  std::mt19937_64 rng(77);
  const std::vector<IntervalUnion> projections = {
      IntervalUnion::single(-1, 1), pair_set(0.5), pair_set(0.6), U({{-1.0, 0.0}, {0.5, 1.0}}),
      U({{-1.0, -0.6}, {-0.2, 0.2}, {0.6, 1.0}})};

  // (a) squared-modulus identity at random points of the arcs
  double worst_id = 0.0;
  for (int t = 0; t < 200; ++t) {
    std::vector<double> c(2 + t % 11);
    for (double& v : c) v = 2.0 * uniform01(rng) - 1.0;
    const Polynomial p(c);
    const IntervalUnion& proj = projections[t % projections.size()];
    const Interval iv = proj[static_cast<std::size_t>(uniform01(rng) * proj.size())];
    const double x = iv.lo + uniform01(rng) * iv.width();
    const std::complex<double> z(x, (t % 2 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1 - x * x)));
    const double lhs = std::norm(p(z));
    const double rhs = squared_modulus_series(p)(x);
    worst_id = std::max(worst_id, std::abs(lhs - rhs));
  }

  // (b) lower-bound chain with the certified capacity
  int violations = 0;
  for (const IntervalUnion& proj : projections) {
    const ArcSet arcs(proj);
    const double cap_gamma = robinson_capacity(capacity_lower_bound(proj));
    for (int t = 0; t < 50; ++t) {
      std::vector<double> c(2 + t % 10);
      for (double& v : c) v = 2.0 * uniform01(rng) - 1.0;
      c.back() = 1.0;
      const ArcBoundReport r = arc_lower_bound(Polynomial(c), arcs, cap_gamma);
      if (r.sup_norm < r.lower - 1e-9) ++violations;
    }
  }

  // (c) lifts on the single interval and the symmetric pairs
  double worst_lift = 0.0;
  for (const IntervalUnion& proj : {IntervalUnion::single(-1, 1), pair_set(0.5), pair_set(0.6)}) {
    const ArcSet arcs(proj);
    for (int m = 1; m <= 6; ++m) {
      const MinimalPolyResult r = minimal_polynomial(proj, m);
      std::vector<double> b = to_cheb(r.poly).coeffs();
      b.resize(m + 1, 0.0);
      b[m] = std::ldexp(1.0, 1 - m);
      const double want = std::ldexp(r.deviation, m);
      for (const Polynomial& lifted : {lift_even(ChebExpansion(b), m), lift_odd(ChebExpansion(b), m)})
        worst_lift = std::max(worst_lift, std::abs(arc_sup_norm(lifted, arcs) - want) / want);
    }
  }
  return {worst_id <= 1e-10 && violations == 0 && worst_lift <= 1e-8, false,
          "identity err " + sci(worst_id) + ", " + std::to_string(violations) + " chain violations / 250, lift err " +
              sci(worst_lift)};
}

Outcome criterion8() {
  const IntervalUnion e = pair_set(0.6);
  const int n_max = 20;
  std::vector<double> dev(n_max + 1);
  for (int n = 1; n <= n_max; ++n) dev[n] = minimal_polynomial(e, n).deviation;
  const double upper = std::pow(0.5 * dev[n_max], 1.0 / n_max);
  std::vector<double> q;
  for (int n = 1; n <= n_max; ++n) q.push_back(dev[n] / std::pow(upper, n));

  // least-squares slope of q_n against n, and the residual scatter
  const double m = q.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double x = i + 1.0;
    sx += x, sy += q[i], sxx += x * x, sxy += x * q[i];
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double icept = (sy - slope * sx) / m;
  double ss = 0;
  for (std::size_t i = 0; i < q.size(); ++i) ss += std::pow(q[i] - icept - slope * (i + 1.0), 2);
  const double noise = std::sqrt(ss / (m - 2));
  const double drift = slope * (m - 1);

  // arc-side chain: constructive upper bounds over the lifted arcs
  const ArcSet arcs(e);
  const double cap_gamma = robinson_capacity(std::min(0.5, upper));
  double arc_max = 0.0;
  for (int n = 1; n <= n_max; ++n) arc_max = std::max(arc_max, arc_deviation_upper(arcs, n) / std::pow(cap_gamma, n));

  const double q_max = *std::max_element(q.begin(), q.end());
  const bool pass = std::isfinite(q_max) && std::isfinite(arc_max) && drift <= noise;
  return {pass, false,
          "max L_n/upper^n " + sci(q_max) + ", LS slope " + sci(slope) + " (drift " + sci(drift) + " vs noise " +
              sci(noise) + "), max arc ratio " + sci(arc_max)};
}

Outcome criterion9() {
  const std::vector<IntervalUnion> sets = {IntervalUnion::single(-1, 1), IntervalUnion::single(0.0, 1.0),
                                           pair_set(0.5), U({{-1.0, 0.0}, {0.5, 1.0}}),
                                           U({{-1.0, -0.9}, {-0.1, 1.0}}), U({{-0.3, 0.2}, {0.6, 0.9}})};
  double worst = 0.0;
  for (const IntervalUnion& s : sets)
    for (int n = 1; n <= 3; ++n)
      worst = std::max(worst, std::abs(minimal_polynomial(s, n).deviation - oracle::brute_minimax(s, n)));
  return {worst <= 1e-6, false, "max abs diff vs brute force " + sci(worst)};
}

}  // namespace

int main() {
  report(1, "single interval closed form", criterion1);
  report(2, "symmetric two intervals closed form", criterion2);
  report(3, "sharpness on inverse images", criterion3);
  report(4, "capacity lower bound sharpness", criterion4);
  report(5, "main inequality, independent lower bound", criterion5);
  report(6, "ratio sequence", criterion6);
  report(7, "arc identities", criterion7);
  report(8, "ratio boundedness", criterion8);
  report(9, "brute-force oracle equivalence", criterion9);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
