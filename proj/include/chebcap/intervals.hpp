#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chebcap {

inline constexpr double kContainsTolerance = 1e-12;

/// Gap (relative to the hull width) below which neighbouring intervals are
/// treated as touching and merged.
inline constexpr double kTouchingGap = 1e-12;

struct Interval {
  double lo;
  double hi;

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
};

/// A finite union of disjoint closed intervals with nonempty interiors.
///
/// Endpoints are kept ascending: interval 0 is the leftmost. Classical
/// several-interval notation numbers the endpoints from the right,
/// a_{2l} < ... < a_2 < a_1, with interval j = [a_{2j}, a_{2j-1}]; the
/// `descending_endpoint` / `descending_interval` adapters provide that view.
class IntervalUnion {
 public:
  /// Validates and sorts the pairs. Pairs must satisfy lo < hi and be finite;
  /// overlapping pairs are rejected, touching ones (gap <= kTouchingGap of the
  /// hull width) are merged and `merged_touching()` is set.
  static IntervalUnion from_pairs(std::vector<std::pair<double, double>> pairs);
  static IntervalUnion single(double lo, double hi);

  std::size_t size() const { return endpoints_.size() / 2; }
  Interval operator[](std::size_t i) const { return {endpoints_[2 * i], endpoints_[2 * i + 1]}; }
  std::span<const double> endpoints() const { return endpoints_; }
  std::vector<Interval> intervals() const;

  double lower() const { return endpoints_.front(); }
  double upper() const { return endpoints_.back(); }
  Interval hull() const { return {lower(), upper()}; }
  double measure() const;

  bool merged_touching() const { return merged_touching_; }

  /// a_j for j = 1..2l (a_1 is the largest endpoint).
  double descending_endpoint(std::size_t j) const;
  /// Interval j = 1..l counted from the right: [a_{2j}, a_{2j-1}].
  Interval descending_interval(std::size_t j) const;

  bool operator==(const IntervalUnion& other) const { return endpoints_ == other.endpoints_; }

 private:
  std::vector<double> endpoints_;
  bool merged_touching_ = false;
};

/// y = scale * x + shift.
struct AffineMap {
  double scale = 1.0;
  double shift = 0.0;

  double operator()(double x) const { return scale * x + shift; }
  AffineMap inverse() const;
  IntervalUnion apply(const IntervalUnion& u) const;
};

struct Normalized {
  IntervalUnion set;
  AffineMap map;  // input -> normalized
};

/// Affinely maps the hull of `u` onto [-1, 1].
Normalized normalize(const IntervalUnion& u);

bool is_normalized(const IntervalUnion& u, double tol = 1e-12);

/// Angle coordinates phi_j = arccos(a_{2j-1}), psi_j = arccos(a_{2j}) of a
/// normalized union, ordered 0 = phi_1 < psi_1 < phi_2 < ... < psi_l = pi.
struct AngleCoordinates {
  std::vector<double> phi;
  std::vector<double> psi;

  std::size_t size() const { return phi.size(); }
};

AngleCoordinates to_angles(const IntervalUnion& normalized);

bool contains(const IntervalUnion& u, double x, double tol = kContainsTolerance);
bool is_subset(const IntervalUnion& inner, const IntervalUnion& outer,
               double tol = kContainsTolerance);

/// True when the union is mirror-symmetric about the midpoint of its hull.
bool is_symmetric(const IntervalUnion& u, double tol = 1e-14);

// Text form "a b; c d" and JSON form [[a,b],[c,d]]. `parse_intervals` accepts
// either; both formatters print 17 significant digits so parsing round-trips.
IntervalUnion parse_intervals(std::string_view text);
IntervalUnion parse_intervals_text(std::string_view text);
IntervalUnion parse_intervals_json(std::string_view text);
std::string format_intervals_text(const IntervalUnion& u);
std::string format_intervals_json(const IntervalUnion& u);

}  // namespace chebcap
