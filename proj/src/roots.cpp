// Real root isolation by Bernstein-coefficient sign variations.

#include <algorithm>
#include <cmath>
#include <limits>

#include "chebcap/chebpoly.hpp"
#include "chebcap/errors.hpp"

namespace chebcap {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class Isolator {
 public:
  Isolator(const Polynomial& p, const RootOptions& opts) : p_(p), dp_(p.derivative()), opts_(opts) {
    const int n = p.degree();
    // ratio_[i][k] = C(i, k) / C(n, k)
    std::vector<std::vector<double>> binom(n + 1);
    for (int i = 0; i <= n; ++i) {
      binom[i].assign(i + 1, 1.0);
      for (int k = 1; k < i; ++k) binom[i][k] = binom[i - 1][k - 1] + binom[i - 1][k];
    }
    ratio_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      ratio_[i].resize(i + 1);
      for (int k = 0; k <= i; ++k) ratio_[i][k] = binom[i][k] / binom[n][k];
    }
  }

  void run(double a, double b, std::vector<Root>& out) {
    const std::vector<double> bern = bernstein(a, b);
    const int v = variations(bern);
    if (v == 0) return;
    const double fa = p_(a), fb = p_(b);
    if (v == 1 && ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0))) {
      out.push_back({polish(a, b, fa), 1});
      return;
    }
    if (b - a <= opts_.cluster_width) {
      out.push_back({cluster_location(a, b), v});
      return;
    }
    const double m = split_point(a, b);
    run(a, m, out);
    run(m, b, out);
  }

 private:
  std::vector<double> bernstein(double a, double b) const {
    const Polynomial shifted = p_.compose_affine(b - a, a);
    const std::vector<double>& q = shifted.coeffs();
    const int n = p_.degree();
    std::vector<double> bern(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
      double s = 0.0;
      for (int k = 0; k <= i && k < static_cast<int>(q.size()); ++k) s += ratio_[i][k] * q[k];
      bern[i] = s;
    }
    return bern;
  }

  static int variations(const std::vector<double>& c) {
    int v = 0;
    int last = 0;
    for (double x : c) {
      const int s = (x > 0.0) - (x < 0.0);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Prefers the midpoint, but moves off it when p is within rounding of zero
  // there, so that no root sits on a subdivision boundary.
  double split_point(double a, double b) const {
    static constexpr double kOffsets[] = {0.5, 0.4375, 0.5625, 0.375, 0.625, 0.3125, 0.6875};
    double best = a + 0.5 * (b - a);
    double best_ratio = -1.0;
    for (double t : kOffsets) {
      const double m = a + t * (b - a);
      const double mag = p_.magnitude(m);
      const double ratio = mag > 0.0 ? std::abs(p_(m)) / mag : 0.0;
      if (ratio > 64.0 * kEps) return m;
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = m;
      }
    }
    return best;
  }

  // Safeguarded Newton inside a sign-change bracket.
  double polish(double a, double b, double fa) const {
    double x = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
      const double fx = p_(x);
      if (fx == 0.0) return x;
      if ((fx < 0.0) == (fa < 0.0)) {
        a = x;
        fa = fx;
      } else {
        b = x;
      }
      const double dfx = dp_(x);
      double next = dfx != 0.0 ? x - fx / dfx : a + 0.5 * (b - a);
      if (!(next > a && next < b)) next = a + 0.5 * (b - a);
      if (next == x || b - a <= 2.0 * kEps * std::max(1.0, std::abs(x))) {
        x = next;
        break;
      }
      x = next;
    }
    return x;
  }

  // Minimizes |p| over a tiny isolating interval by golden-section search.
  double cluster_location(double a, double b) const {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = std::abs(p_(c)), fd = std::abs(p_(d));
    for (int it = 0; it < 80 && b - a > 0.0; ++it) {
      if (fc <= fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = std::abs(p_(c));
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = std::abs(p_(d));
      }
    }
    return 0.5 * (a + b);
  }

  const Polynomial& p_;
  Polynomial dp_;
  RootOptions opts_;
  std::vector<std::vector<double>> ratio_;
};

}  // namespace

std::vector<Root> real_roots_in(const Polynomial& p, double lo, double hi, const RootOptions& opts) {
  if (p.is_zero()) throw InvalidInput("real_roots_in: polynomial is identically zero");
  if (!(lo <= hi)) throw InvalidInput("real_roots_in: empty search interval");
  if (p.degree() == 0) return {};

  // Search a slightly widened window so roots sitting exactly on lo or hi are
  // interior to the isolation.
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  const double pad = 1e-9 * std::max(hi - lo, scale);
  std::vector<Root> raw;
  Isolator iso(p, opts);
  iso.run(lo - pad, hi + pad, raw);

  std::vector<Root> merged;
  for (const Root& r : raw) {
    if (!merged.empty() && r.x - merged.back().x <= opts.cluster_width) {
      Root& m = merged.back();
      const int total = m.multiplicity + r.multiplicity;
      m.x = (m.x * m.multiplicity + r.x * r.multiplicity) / total;
      m.multiplicity = total;
    } else {
      merged.push_back(r);
    }
  }

  const double keep_tol = 1e-12 * scale;
  std::vector<Root> out;
  for (Root r : merged) {
    if (r.x < lo - keep_tol || r.x > hi + keep_tol) continue;
    r.x = std::clamp(r.x, lo, hi);
    out.push_back(r);
  }
  return out;
}

std::vector<Root> level_set(const Polynomial& p, double level, double lo, double hi, const RootOptions& opts) {
  if (p.degree() < 1) throw InvalidInput("level_set needs a polynomial of degree >= 1");
  if (!(lo <= hi)) throw InvalidInput("level_set: empty search interval");
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  const double pad = 1e-9 * std::max(hi - lo, scale);
  const double a = lo - pad, b = hi + pad;

  struct Break {
    double x;
    double g;  // p(x) - level, forced to 0 at tangencies
  };
  std::vector<Root> raw;
  std::vector<Break> breaks{{a, p(a) - level}};
  if (p.degree() >= 2) {
    for (const Root& c : real_roots_in(p.derivative(), a, b, opts)) {
      double g = p(c.x) - level;
      if (std::abs(g) <= 64.0 * kEps * (p.magnitude(c.x) + std::abs(level))) {
        g = 0.0;
        raw.push_back({c.x, c.multiplicity + 1});
      }
      breaks.push_back({c.x, g});
    }
  }
  breaks.push_back({b, p(b) - level});

  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double u = breaks[k].x, v = breaks[k + 1].x;
    const double gu = breaks[k].g, gv = breaks[k + 1].g;
    if (!((gu < 0.0 && gv > 0.0) || (gu > 0.0 && gv < 0.0))) continue;
    // p is monotone here: plain bisection to full precision
    for (int it = 0; it < 200; ++it) {
      const double m = u + 0.5 * (v - u);
      if (m <= u || m >= v) break;
      const double gm = p(m) - level;
      if (gm == 0.0) {
        u = v = m;
        break;
      }
      if ((gm < 0.0) == (gu < 0.0)) u = m;
      else v = m;
    }
    raw.push_back({u + 0.5 * (v - u), 1});
  }
  std::sort(raw.begin(), raw.end(), [](const Root& x, const Root& y) { return x.x < y.x; });

  std::vector<Root> out;
  const double keep_tol = 1e-12 * scale;
  for (Root r : raw) {
    if (r.x < lo - keep_tol || r.x > hi + keep_tol) continue;
    r.x = std::clamp(r.x, lo, hi);
    if (!out.empty() && r.x - out.back().x <= opts.cluster_width) {
      Root& m = out.back();
      if (r.multiplicity > m.multiplicity) m.x = r.x;
      m.multiplicity += r.multiplicity;
    } else {
      out.push_back(r);
    }
  }
  return out;
}

}  // namespace chebcap
