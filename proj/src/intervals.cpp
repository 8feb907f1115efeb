#include "chebcap/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "chebcap/errors.hpp"
#include "chebcap/format.hpp"

namespace chebcap {

int degree_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("CHEBCAP_MAX_DEGREE")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<int>(v);
    }
    return 100;
  }();
  return cap;
}

IntervalUnion IntervalUnion::from_pairs(std::vector<std::pair<double, double>> pairs) {
  if (pairs.empty()) throw InvalidInput("interval union needs at least one interval");
  for (const auto& [lo, hi] : pairs) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw InvalidInput("interval endpoints must be finite");
    if (!(lo < hi)) throw InvalidInput("interval [" + fmt17(lo) + ", " + fmt17(hi) +
                                       "] has empty interior");
  }
  std::sort(pairs.begin(), pairs.end());
  const double width = pairs.back().second - pairs.front().first;
  const double gap_tol = kTouchingGap * 0.5 * width;  // gap measured in the normalized frame

  IntervalUnion u;
  u.endpoints_.reserve(2 * pairs.size());
  u.endpoints_.push_back(pairs.front().first);
  u.endpoints_.push_back(pairs.front().second);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const auto [lo, hi] = pairs[i];
    double& last_hi = u.endpoints_.back();
    if (lo < last_hi - gap_tol) {
      throw InvalidInput("intervals overlap near " + fmt17(lo));
    }
    if (lo - last_hi <= gap_tol) {
      last_hi = std::max(last_hi, hi);
      u.merged_touching_ = true;
      continue;
    }
    u.endpoints_.push_back(lo);
    u.endpoints_.push_back(hi);
  }
  return u;
}

IntervalUnion IntervalUnion::single(double lo, double hi) { return from_pairs({{lo, hi}}); }

std::vector<Interval> IntervalUnion::intervals() const {
  std::vector<Interval> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back((*this)[i]);
  return out;
}

double IntervalUnion::measure() const {
  double m = 0.0;
  for (std::size_t i = 0; i < size(); ++i) m += (*this)[i].width();
  return m;
}

double IntervalUnion::descending_endpoint(std::size_t j) const {
  if (j < 1 || j > endpoints_.size()) throw InvalidInput("endpoint index out of range");
  return endpoints_[endpoints_.size() - j];
}

Interval IntervalUnion::descending_interval(std::size_t j) const {
  return {descending_endpoint(2 * j), descending_endpoint(2 * j - 1)};
}

AffineMap AffineMap::inverse() const {
  if (scale == 0.0) throw InvalidInput("affine map is not invertible");
  return {1.0 / scale, -shift / scale};
}

IntervalUnion AffineMap::apply(const IntervalUnion& u) const {
  std::vector<std::pair<double, double>> pairs;
  for (const auto& iv : u.intervals()) {
    double a = (*this)(iv.lo), b = (*this)(iv.hi);
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  return IntervalUnion::from_pairs(std::move(pairs));
}

Normalized normalize(const IntervalUnion& u) {
  const double lo = u.lower(), hi = u.upper();
  const double half = 0.5 * (hi - lo);
  if (!(half > 0.0)) throw InvalidInput("degenerate hull");
  const double mid = 0.5 * (hi + lo);
  AffineMap map{1.0 / half, -mid / half};
  if (is_normalized(u, 0.0)) map = {1.0, 0.0};

  std::vector<std::pair<double, double>> pairs;
  for (const auto& iv : u.intervals()) pairs.emplace_back(map(iv.lo), map(iv.hi));
  // Pin the hull exactly; rounding in the map may leave it an ulp off.
  pairs.front().first = -1.0;
  pairs.back().second = 1.0;
  return {IntervalUnion::from_pairs(std::move(pairs)), map};
}

bool is_normalized(const IntervalUnion& u, double tol) {
  return std::abs(u.lower() + 1.0) <= tol && std::abs(u.upper() - 1.0) <= tol;
}

AngleCoordinates to_angles(const IntervalUnion& normalized) {
  if (!is_normalized(normalized)) throw InvalidInput("to_angles expects a union with hull [-1, 1]");
  const std::size_t l = normalized.size();
  AngleCoordinates a;
  a.phi.resize(l);
  a.psi.resize(l);
  for (std::size_t j = 1; j <= l; ++j) {
    const Interval iv = normalized.descending_interval(j);
    a.phi[j - 1] = std::acos(std::clamp(iv.hi, -1.0, 1.0));
    a.psi[j - 1] = std::acos(std::clamp(iv.lo, -1.0, 1.0));
  }
  a.phi.front() = 0.0;
  a.psi.back() = std::numbers::pi;
  return a;
}

bool contains(const IntervalUnion& u, double x, double tol) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Interval iv = u[i];
    if (x >= iv.lo - tol && x <= iv.hi + tol) return true;
  }
  return false;
}

bool is_subset(const IntervalUnion& inner, const IntervalUnion& outer, double tol) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const Interval a = inner[i];
    bool covered = false;
    for (std::size_t k = 0; k < outer.size() && !covered; ++k) {
      const Interval b = outer[k];
      covered = a.lo >= b.lo - tol && a.hi <= b.hi + tol;
    }
    if (!covered) return false;
  }
  return true;
}

bool is_symmetric(const IntervalUnion& u, double tol) {
  const auto e = u.endpoints();
  const double c = 0.5 * (u.lower() + u.upper());
  const double w = u.upper() - u.lower();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (std::abs((e[i] - c) + (e[e.size() - 1 - i] - c)) > tol * w) return false;
  }
  return true;
}

IntervalUnion parse_intervals(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return parse_intervals_json(text);
  return parse_intervals_text(text);
}

IntervalUnion parse_intervals_text(std::string_view text) {
  std::vector<std::pair<double, double>> pairs;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(';', start), text.size());
    std::string chunk(text.substr(start, stop - start));
    start = stop + 1;
    if (chunk.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream in(chunk);
    double a = 0.0, b = 0.0;
    std::string extra;
    if (!(in >> a >> b) || (in >> extra)) {
      throw InvalidInput("cannot parse interval \"" + chunk + "\" (expected \"lo hi\")");
    }
    pairs.emplace_back(a, b);
  }
  return IntervalUnion::from_pairs(std::move(pairs));
}

IntervalUnion parse_intervals_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("invalid interval JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidInput("interval JSON must be an array of [lo, hi] pairs");
  std::vector<std::pair<double, double>> pairs;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw InvalidInput("interval JSON must be an array of [lo, hi] pairs");
    pairs.emplace_back(p[0].get<double>(), p[1].get<double>());
  }
  return IntervalUnion::from_pairs(std::move(pairs));
}

std::string format_intervals_text(const IntervalUnion& u) {
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += "; ";
    out += fmt17(u[i].lo) + " " + fmt17(u[i].hi);
  }
  return out;
}

std::string format_intervals_json(const IntervalUnion& u) {
  std::string out = "[";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) out += ",";
    out += "[" + fmt17(u[i].lo) + "," + fmt17(u[i].hi) + "]";
  }
  return out + "]";
}

}  // namespace chebcap
