#include "chebcap/remez.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "chebcap/errors.hpp"

namespace chebcap {

namespace {

constexpr double kInvGolden = 0.6180339887498949;

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

/// Golden-section maximization of g on [a, b].
template <typename G>
std::pair<double, double> golden_max(const G& g, double a, double b, int iters = 64) {
  double c = b - kInvGolden * (b - a), d = a + kInvGolden * (b - a);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < iters && c < d; ++it) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - kInvGolden * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + kInvGolden * (b - a);
      gd = g(d);
    }
  }
  return gc >= gd ? std::pair{c, gc} : std::pair{d, gd};
}

/// count >= 2 Chebyshev-Lobatto points of the interval, ascending, endpoints exact.
std::vector<double> lobatto_points(Interval iv, int count) {
  std::vector<double> x(count);
  const int m = count - 1;
  for (int j = 0; j <= m; ++j) {
    x[j] = iv.mid() - 0.5 * iv.width() * std::cos(std::numbers::pi * j / m);
  }
  x.front() = iv.lo;
  x.back() = iv.hi;
  return x;
}

std::vector<double> angle_fractions(const std::vector<Interval>& ivs) {
  std::vector<double> theta;
  double total = 0.0;
  for (const auto& iv : ivs) {
    theta.push_back(std::acos(std::clamp(iv.lo, -1.0, 1.0)) - std::acos(std::clamp(iv.hi, -1.0, 1.0)));
    total += theta.back();
  }
  for (double& t : theta) t /= total;
  return theta;
}

/// Splits `total` points over intervals in proportion to `fractions`
/// (largest remainder), with at least one per interval when possible.
std::vector<int> allocate(int total, const std::vector<double>& fractions) {
  const std::size_t l = fractions.size();
  std::vector<int> counts(l);
  std::vector<std::pair<double, std::size_t>> rem;
  int used = 0;
  for (std::size_t i = 0; i < l; ++i) {
    const double share = total * fractions[i];
    counts[i] = static_cast<int>(std::floor(share));
    used += counts[i];
    rem.emplace_back(share - counts[i], i);
  }
  std::stable_sort(rem.begin(), rem.end(), [](auto& a, auto& b) { return a.first > b.first; });
  for (std::size_t k = 0; used < total; ++k, ++used) ++counts[rem[k % l].second];
  if (total >= static_cast<int>(l)) {
    for (std::size_t i = 0; i < l; ++i) {
      if (counts[i] > 0) continue;
      const auto donor = std::max_element(counts.begin(), counts.end());
      --*donor;
      counts[i] = 1;
    }
  }
  return counts;
}

std::vector<double> initial_reference(const std::vector<Interval>& ivs, int n) {
  const std::vector<int> counts = allocate(n + 1, angle_fractions(ivs));
  std::vector<double> ref;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    if (counts[i] == 1) {
      ref.push_back(ivs[i].mid());
    } else if (counts[i] >= 2) {
      const auto pts = lobatto_points(ivs[i], counts[i]);
      ref.insert(ref.end(), pts.begin(), pts.end());
    }
  }
  return ref;
}

struct Candidate {
  double x;
  double e;
};

/// Signed local extrema: for every maximal run of constant sign inside each
/// interval, the point of largest |p|, refined by golden-section search.
template <typename F>
std::vector<Candidate> signed_extrema(const F& p, const std::vector<Interval>& ivs,
                                      const std::vector<std::vector<double>>& grids,
                                      const std::vector<double>& ref) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    std::vector<double> xs = grids[i];
    for (double r : ref) {
      if (r > ivs[i].lo && r < ivs[i].hi) xs.push_back(r);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<double> vs(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) vs[k] = p(xs[k]);

    auto finish_run = [&](std::size_t best, int s) {
      const double a = xs[best == 0 ? 0 : best - 1];
      const double b = xs[std::min(best + 1, xs.size() - 1)];
      Candidate c{xs[best], vs[best]};
      if (a < b) {
        const auto [xr, gr] = golden_max([&](double x) { return s * p(x); }, a, b);
        if (gr > s * c.e) c = {xr, s * gr};
      }
      out.push_back(c);
    };

    int run_sign = 0;
    std::size_t best = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const int s = sgn(vs[k]);
      if (s == 0) continue;
      if (run_sign == 0) {
        run_sign = s;
        best = k;
      } else if (s != run_sign) {
        finish_run(best, run_sign);
        run_sign = s;
        best = k;
      } else if (std::abs(vs[k]) > std::abs(vs[best])) {
        best = k;
      }
    }
    if (run_sign != 0) finish_run(best, run_sign);
  }
  return out;
}

/// Collapses consecutive same-sign candidates to the largest; ties keep the leftmost.
std::vector<Candidate> merge_signs(const std::vector<Candidate>& in) {
  std::vector<Candidate> out;
  for (const Candidate& c : in) {
    if (!out.empty() && sgn(c.e) == sgn(out.back().e)) {
      if (std::abs(c.e) > std::abs(out.back().e)) out.back() = c;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

/// Single-point exchange: brings the global maximum into the reference while
/// keeping the sign pattern (-1)^(n-j).
std::vector<double> single_exchange(std::vector<double> ref, const Candidate& top) {
  const int n = static_cast<int>(ref.size()) - 1;
  auto sign_at = [n](int j) { return ((n - j) % 2 == 0) ? 1 : -1; };
  const int s = sgn(top.e);
  const int pos = static_cast<int>(std::lower_bound(ref.begin(), ref.end(), top.x) - ref.begin());
  if (pos == 0) {
    if (sign_at(0) == s) {
      ref[0] = top.x;
    } else {
      ref.pop_back();
      ref.insert(ref.begin(), top.x);
    }
  } else if (pos == n + 1) {
    if (sign_at(n) == s) {
      ref[n] = top.x;
    } else {
      ref.erase(ref.begin());
      ref.push_back(top.x);
    }
  } else {
    ref[sign_at(pos - 1) == s ? pos - 1 : pos] = top.x;
  }
  return ref;
}

std::vector<double> exchange(const std::vector<Candidate>& cands, const std::vector<double>& ref,
                             double level) {
  const std::size_t need = ref.size();
  std::vector<Candidate> strong;
  for (const Candidate& c : cands) {
    if (std::abs(c.e) >= level * (1.0 - 1e-10)) strong.push_back(c);
  }
  std::vector<Candidate> alt = merge_signs(strong);
  if (alt.size() < need) alt = merge_signs(cands);
  if (alt.size() < need) {
    const auto top = std::max_element(cands.begin(), cands.end(), [](auto& a, auto& b) {
      return std::abs(a.e) < std::abs(b.e);
    });
    return single_exchange(ref, *top);
  }
  std::size_t first = 0, last = alt.size() - 1;
  while (last - first + 1 > need) {
    if (std::abs(alt[first].e) < std::abs(alt[last].e)) {
      ++first;
    } else {
      --last;
    }
  }
  std::vector<double> out;
  for (std::size_t k = first; k <= last; ++k) out.push_back(alt[k].x);
  return out;
}

}  // namespace

BarycentricPolynomial::BarycentricPolynomial(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.empty() || nodes_.size() != values_.size())
    throw InvalidInput("barycentric form needs matching nonempty nodes and values");
  const std::size_t m = nodes_.size();
  std::vector<double> logw(m, 0.0);
  std::vector<int> sign(m, 1);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      const double d = nodes_[j] - nodes_[k];
      if (d == 0.0) throw InvalidInput("barycentric nodes must be distinct");
      logw[j] -= std::log(std::abs(d));
      if (d < 0.0) sign[j] = -sign[j];
    }
  }
  log_weight_scale_ = *std::max_element(logw.begin(), logw.end());
  weights_.resize(m);
  for (std::size_t j = 0; j < m; ++j) weights_[j] = sign[j] * std::exp(logw[j] - log_weight_scale_);
}

BarycentricPolynomial BarycentricPolynomial::levelled_monic(std::vector<double> nodes) {
  const std::size_t m = nodes.size();
  BarycentricPolynomial p(std::move(nodes), std::vector<double>(m, 0.0));
  double s = 0.0;
  for (double w : p.weights_) s += std::abs(w);
  const double level = std::exp(-p.log_weight_scale_) / s;
  for (std::size_t j = 0; j < m; ++j) p.values_[j] = ((m - 1 - j) % 2 == 0 ? level : -level);
  return p;
}

double BarycentricPolynomial::operator()(double x) const {
  double sum = 0.0, log_l = 0.0;
  int sign = 1;
  for (std::size_t j = 0; j < nodes_.size(); ++j) {
    const double d = x - nodes_[j];
    if (d == 0.0) return values_[j];
    sum += weights_[j] * values_[j] / d;
    log_l += std::log(std::abs(d));
    if (d < 0.0) sign = -sign;
  }
  return sign * std::exp(log_l + log_weight_scale_) * sum;
}

double BarycentricPolynomial::leading() const {
  double s = 0.0;
  for (std::size_t j = 0; j < nodes_.size(); ++j) s += weights_[j] * values_[j];
  return std::exp(log_weight_scale_) * s;
}

MinimalPolyResult minimal_polynomial(const IntervalUnion& set, int n, const RemezOptions& opts) {
  if (n < 1) throw InvalidInput("minimal_polynomial needs degree n >= 1");
  if (n > degree_cap()) {
    throw InvalidInput("degree " + std::to_string(n) + " exceeds the degree cap " +
                       std::to_string(degree_cap()));
  }
  const Normalized norm = normalize(set);
  const std::vector<Interval> ivs = norm.set.intervals();
  const std::vector<double> fractions = angle_fractions(ivs);

  std::vector<std::vector<double>> grids;
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const int osc = static_cast<int>(std::ceil((n + 1) * fractions[i]));
    grids.push_back(lobatto_points(ivs[i], opts.min_samples + opts.samples_per_oscillation * osc));
  }

  std::vector<double> ref = initial_reference(ivs, n);
  BarycentricPolynomial p;
  double level = 0.0, emax = 0.0, gap = 1.0, best_level = 0.0;
  int stalled = 0, it = 0;
  bool done = false;
  for (it = 1; it <= opts.max_iterations; ++it) {
    p = BarycentricPolynomial::levelled_monic(ref);
    level = std::abs(p.values().front());
    const auto cands = signed_extrema(p, ivs, grids, ref);
    emax = 0.0;
    for (const auto& c : cands) emax = std::max(emax, std::abs(c.e));
    gap = (emax - level) / emax;
    if (gap <= opts.tolerance) {
      done = true;
      break;
    }
    stalled = level <= best_level * (1.0 + 1e-14) ? stalled + 1 : 0;
    best_level = std::max(best_level, level);
    if (stalled >= 3 && gap <= opts.acceptance) {
      done = true;
      break;
    }
    std::vector<double> next = exchange(cands, ref, level);
    for (std::size_t k = 1; k < next.size(); ++k) {
      if (!(next[k] > next[k - 1])) {
        throw ConvergenceError("Remez exchange produced a degenerate reference", ref, level, gap);
      }
    }
    if (next == ref) {
      if (gap <= opts.acceptance) {
        done = true;
        break;
      }
      throw ConvergenceError("Remez exchange stalled with gap " + std::to_string(gap), ref, level,
                             gap);
    }
    ref = std::move(next);
  }
  if (!done) {
    if (gap > opts.acceptance) {
      throw ConvergenceError("Remez did not converge in " + std::to_string(opts.max_iterations) +
                                 " iterations (gap " + std::to_string(gap) + ")",
                             ref, level, gap);
    }
    it = opts.max_iterations;
  }

  MinimalPolyResult r;
  r.degree = n;
  r.iterations = it;
  r.frame = norm.map;
  r.dilation = std::pow(1.0 / norm.map.scale, n);
  r.normalized = p;
  r.deviation = emax * r.dilation;
  r.level = level * r.dilation;
  r.residual = r.deviation - r.level;
  const AffineMap back = norm.map.inverse();
  for (double t : ref) r.alternation_points.push_back(back(t));

  std::vector<double> samples(n + 1);
  for (int j = 0; j <= n; ++j) samples[j] = p(std::cos(std::numbers::pi * j / n));
  std::vector<double> cheb = cheb_interpolate_lobatto(samples).coeffs();
  cheb[n] = std::ldexp(1.0, 1 - n);
  if (is_symmetric(norm.set)) {
    for (int k = 0; k <= n; ++k) {
      if ((n - k) % 2 != 0) cheb[k] = 0.0;
    }
  }
  r.normalized_cheb = ChebExpansion(cheb);
  const Polynomial local = to_monomial(r.normalized_cheb);
  r.poly = (r.dilation * local.compose_affine(norm.map.scale, norm.map.shift)).monic();
  return r;
}

double sup_norm(const IntervalUnion& set, int samples_per_interval,
                const std::function<double(double)>& f) {
  const int count = std::max(samples_per_interval, 3);
  double best = 0.0;
  for (const Interval& iv : set.intervals()) {
    const std::vector<double> xs = lobatto_points(iv, count);
    std::vector<double> vs(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k) vs[k] = std::abs(f(xs[k]));
    for (std::size_t k = 0; k < xs.size(); ++k) {
      best = std::max(best, vs[k]);
      const bool left_ok = k == 0 || vs[k] >= vs[k - 1];
      const bool right_ok = k + 1 == xs.size() || vs[k] >= vs[k + 1];
      if (!(left_ok && right_ok)) continue;
      const double a = xs[k == 0 ? 0 : k - 1];
      const double b = xs[std::min(k + 1, xs.size() - 1)];
      best = std::max(best, golden_max([&](double x) { return std::abs(f(x)); }, a, b).second);
    }
  }
  return best;
}

BlowUpResult blow_up_set(const IntervalUnion& set, const MinimalPolyResult& result) {
  const Polynomial local = to_monomial(result.normalized_cheb);
  const double dev = result.deviation / result.dilation;
  std::vector<double> bounds;
  for (const double level : {-dev, dev}) {
    for (const Root& r : level_set(local, level, -1.5, 1.5)) bounds.push_back(r.x);
  }
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end(),
                           [](double a, double b) { return b - a <= 1e-12; }),
               bounds.end());

  const AffineMap back = result.frame.inverse();
  std::vector<std::pair<double, double>> comps;
  bool open = false;
  double start = 0.0;
  for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
    const double mid = 0.5 * (bounds[k] + bounds[k + 1]);
    const bool inside = std::abs(result.normalized(mid)) <= dev;
    if (inside && !open) {
      open = true;
      start = bounds[k];
    } else if (!inside && open) {
      open = false;
      comps.emplace_back(back(start), back(bounds[k]));
    }
  }
  if (open) comps.emplace_back(back(start), back(bounds.back()));
  if (comps.empty()) {
    throw ConvergenceError("blow-up set: no sublevel interval found", result.alternation_points,
                           result.level, 0.0);
  }
  BlowUpResult out{IntervalUnion::from_pairs(std::move(comps)), 0};
  out.ell_prime = static_cast<int>(out.c_prime.size());
  if (!is_subset(set, out.c_prime, 1e-9 * (set.upper() - set.lower()))) {
    throw ConvergenceError("blow-up set does not cover the input set", result.alternation_points,
                           result.level, 0.0);
  }
  return out;
}

WitnessReport minimality_witness(const IntervalUnion& set, const MinimalPolyResult& result,
                                 int grid_density, const std::optional<IntervalUnion>& c_double_prime,
                                 const RemezOptions& opts) {
  WitnessReport rep;
  const double dev = result.deviation;
  const double slack = result.residual + 1e-12 * dev;
  const int count = std::max(grid_density, 2);
  for (const Interval& iv : set.intervals()) {
    for (int k = 0; k < count; ++k) {
      const double x = iv.lo + iv.width() * k / (count - 1);
      rep.grid_max = std::max(rep.grid_max, std::abs(result(x)));
    }
  }
  rep.bounded = rep.grid_max <= dev + slack;

  const int n = result.degree;
  rep.alternates = static_cast<int>(result.alternation_points.size()) == n + 1;
  for (int j = 0; j <= n && rep.alternates; ++j) {
    const double x = result.alternation_points[j];
    const double s = (n - j) % 2 == 0 ? 1.0 : -1.0;
    rep.alternates = contains(set, x, 1e-12) && s * result(x) >= dev - 2.0 * slack;
  }

  const IntervalUnion c_prime = blow_up_set(set, result).c_prime;
  const IntervalUnion middle = c_double_prime.value_or(c_prime);
  const double tol = 1e-9 * (c_prime.upper() - c_prime.lower());
  rep.sandwich_applicable = is_subset(set, middle, tol) && is_subset(middle, c_prime, tol);
  if (rep.sandwich_applicable) {
    const MinimalPolyResult again = minimal_polynomial(middle, n, opts);
    rep.sandwich_deviation = again.deviation;
    rep.sandwich_ok = std::abs(again.deviation - dev) <= 1e-8 * dev;
  }
  rep.pass = rep.bounded && rep.alternates && (!rep.sandwich_applicable || rep.sandwich_ok);
  return rep;
}

}  // namespace chebcap
