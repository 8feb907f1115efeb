#include "chebcap/inverse_image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chebcap/errors.hpp"

namespace chebcap {

InverseImageResult inverse_image(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) throw InvalidInput("inverse image needs a polynomial of degree >= 1");

  const double bound = 1.01 * std::max(root_bound(p - 1.0), root_bound(p + 1.0));

  InverseImageResult out{IntervalUnion::single(-1.0, 1.0), false, {}, 0};
  for (const double level : {1.0, -1.0}) {
    for (const Root& r : level_set(p, level, -bound, bound)) {
      out.boundary_points.push_back(r.x);
      out.boundary_multiplicity += r.multiplicity;
    }
  }
  std::sort(out.boundary_points.begin(), out.boundary_points.end());
  out.is_real = out.boundary_multiplicity == 2 * n;
  if (out.boundary_points.empty()) throw EmptyImage("P never attains +-1; the inverse image is empty");

  std::vector<double> pts = out.boundary_points;
  pts.erase(std::unique(pts.begin(), pts.end(), [](double a, double b) { return b - a <= 1e-12; }),
            pts.end());

  std::vector<std::pair<double, double>> comps;
  bool open = false;
  double start = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    const bool inside = std::abs(p(0.5 * (pts[k] + pts[k + 1]))) <= 1.0;
    if (inside && !open) {
      open = true;
      start = pts[k];
    } else if (!inside && open) {
      open = false;
      comps.emplace_back(start, pts[k]);
    }
  }
  if (open) comps.emplace_back(start, pts.back());
  if (comps.empty()) throw EmptyImage("the real inverse image has no interval component");
  out.image = IntervalUnion::from_pairs(std::move(comps));
  return out;
}

double capacity_of_inverse_image(const Polynomial& p) {
  if (!inverse_image(p).is_real) {
    throw InvalidInput("the inverse image is not real; the capacity formula does not apply");
  }
  return std::pow(2.0 * std::abs(p.leading()), -1.0 / p.degree());
}

ComposedMinimal composed_minimal_sequence(const Polynomial& p, int k) {
  if (k < 1) throw InvalidInput("composed_minimal_sequence needs k >= 1");
  if (!inverse_image(p).is_real) {
    throw InvalidInput("the inverse image is not real; the composed sequence is not minimal");
  }
  const double c = p.leading();
  const double factor = 2.0 / std::pow(2.0 * c, k);
  const double deviation = 2.0 / std::pow(2.0 * std::abs(c), k);
  if (!std::isfinite(factor) || factor == 0.0) {
    throw NumericOverflow("scale factor 2 / (2 c_n)^k is not representable");
  }
  return {(factor * compose_T(k, p)).monic(), deviation};
}

double eval_composed(const Polynomial& p, int k, double x) {
  return 2.0 / std::pow(2.0 * p.leading(), k) * cheb_T(k, p(x));
}

SharpnessReport verify_sharpness(const Polynomial& p, const RemezOptions& opts) {
  const InverseImageResult img = inverse_image(p);
  if (!img.is_real) throw InvalidInput("verify_sharpness needs a real inverse image");
  SharpnessReport rep;
  rep.degree = p.degree();
  const MinimalPolyResult r = minimal_polynomial(img.image, rep.degree, opts);
  rep.remez_deviation = r.deviation;
  rep.predicted_deviation = 2.0 * std::pow(capacity_of_inverse_image(p), rep.degree);
  rep.relative_error = std::abs(rep.remez_deviation - rep.predicted_deviation) / rep.predicted_deviation;
  rep.coefficient_distance = coefficient_distance(r.poly, p.monic());
  rep.pass = rep.relative_error <= 1e-7 && rep.coefficient_distance <= 1e-6;
  return rep;
}

Polynomial two_interval_map(double alpha) {
  const double d = 1.0 - alpha * alpha;
  return Polynomial({-(alpha * alpha + 1.0) / d, 0.0, 2.0 / d});
}

TwoIntervalMinimal symmetric_two_interval_minpoly(double alpha, int n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  if (n < 2 || n % 2 != 0) {
    throw InvalidInput("closed-form two-interval minimal polynomial needs an even degree n >= 2");
  }
  const double deviation = std::ldexp(std::pow(1.0 - alpha * alpha, n / 2.0), 1 - n);
  const Polynomial m = (deviation * compose_T(n / 2, two_interval_map(alpha))).monic();
  return {m, deviation};
}

}  // namespace chebcap
