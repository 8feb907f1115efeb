#include <doctest.h>

#include <cmath>
#include <random>

#include "chebcap/cli.hpp"
#include "chebcap/errors.hpp"
#include "chebcap/inverse_image.hpp"
#include "chebcap/remez.hpp"
#include "oracles.hpp"

using namespace chebcap;

namespace {
IntervalUnion U(std::vector<std::pair<double, double>> p) { return IntervalUnion::from_pairs(std::move(p)); }
const IntervalUnion kE05 = U({{-1.0, -0.5}, {0.5, 1.0}});
}  // namespace

TEST_SUITE("remez") {

TEST_CASE("minimal polynomial examples") {
  const auto r1 = minimal_polynomial(IntervalUnion::single(-1.0, 1.0), 3);
  CHECK(r1.deviation == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(coefficient_distance(r1.poly, Polynomial({0.0, -0.75, 0.0, 1.0})) <= 1e-12);
  CHECK(r1.poly.is_monic());

  const auto r2 = minimal_polynomial(kE05, 2);
  CHECK(r2.deviation == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(coefficient_distance(r2.poly, Polynomial({-0.625, 0.0, 1.0})) <= 1e-12);

  const auto r3 = minimal_polynomial(IntervalUnion::single(0.0, 1.0), 1);
  CHECK(r3.deviation == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(coefficient_distance(r3.poly, Polynomial({-0.5, 1.0})) <= 1e-12);
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(minimal_polynomial(kE05, 0), InvalidInput);
  CHECK_THROWS_AS(minimal_polynomial(kE05, 101), InvalidInput);
}

TEST_CASE("affine scaling of the single interval") {
  for (int n = 1; n <= 12; ++n) {
    const auto r = minimal_polynomial(IntervalUnion::single(2.0, 5.0), n);
    CHECK(r.deviation == doctest::Approx(2.0 * std::pow(0.75, n)).epsilon(1e-11));
  }
}

TEST_CASE("equioscillation at the reported points") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    const IntervalUnion set = random_union(rng, 4);
    const int n = 1 + t % 12;
    const auto r = minimal_polynomial(set, n);
    REQUIRE(r.alternation_points.size() == static_cast<std::size_t>(n + 1));
    for (int j = 0; j <= n; ++j) {
      const double x = r.alternation_points[j];
      CHECK(contains(set, x, 1e-12));
      const double expect = ((n - j) % 2 == 0 ? 1.0 : -1.0) * r.level;
      CHECK(std::abs(r(x) - expect) <= 1e-9 * r.deviation);
    }
    CHECK(r.residual <= 1e-9 * r.deviation);
    CHECK(oracle::grid_sup(set, [&](double x) { return r(x); }, 4000) <= r.deviation * (1 + 1e-12));
  }
}

TEST_CASE("symmetric sets give even or odd minimal polynomials") {
  for (double a : {0.2, 0.45, 0.8}) {
    const IntervalUnion set = U({{-1.0, -a}, {-0.5 * a, 0.5 * a}, {a, 1.0}});
    for (int n = 1; n <= 14; ++n) {
      const auto r = minimal_polynomial(set, n);
      for (int k = (n + 1) % 2; k <= n; k += 2) CHECK(std::abs(r.poly[k]) <= 1e-10);
    }
  }
}

TEST_CASE("monotone in the set") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 25; ++t) {
    const IntervalUnion outer = random_union(rng, 3);
    std::vector<std::pair<double, double>> p;
    for (const Interval& iv : outer.intervals())
      p.emplace_back(iv.lo + 0.2 * uniform01(rng) * iv.width(), iv.hi - 0.2 * uniform01(rng) * iv.width());
    const IntervalUnion inner = U(p);
    for (int n = 1; n <= 8; ++n)
      CHECK(minimal_polynomial(inner, n).deviation <= minimal_polynomial(outer, n).deviation * (1 + 1e-10));
  }
}

TEST_CASE("brute-force minimax oracle, n <= 3, up to two intervals") {
  const std::vector<IntervalUnion> sets = {IntervalUnion::single(-1, 1), IntervalUnion::single(0.0, 1.0),
                                           kE05, U({{-1.0, 0.0}, {0.5, 1.0}}),
                                           U({{-1.0, -0.9}, {-0.1, 1.0}})};
  for (const auto& s : sets)
    for (int n = 1; n <= 3; ++n) {
      const double want = oracle::brute_minimax(s, n);
      CHECK(std::abs(minimal_polynomial(s, n).deviation - want) <= 1e-6);
    }
}

TEST_CASE("blow-up set examples") {
  for (int n : {1, 4, 7}) {
    const auto r = minimal_polynomial(IntervalUnion::single(-1, 1), n);
    const auto b = blow_up_set(IntervalUnion::single(-1, 1), r);
    CHECK(b.ell_prime == 1);
    CHECK(b.c_prime[0].lo == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(b.c_prime[0].hi == doctest::Approx(1.0).epsilon(1e-9));
  }
  const auto b2 = blow_up_set(kE05, minimal_polynomial(kE05, 2));
  CHECK(b2.ell_prime == 2);
  CHECK(b2.c_prime[0].hi == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(b2.c_prime[1].lo == doctest::Approx(0.5).epsilon(1e-9));

  const auto b1 = blow_up_set(kE05, minimal_polynomial(kE05, 1));
  CHECK(b1.ell_prime == 1);
  CHECK(b1.c_prime[0].lo == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("blow-up invariants on random sets") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const IntervalUnion set = random_union(rng, 4);
    const int n = 1 + t % 10;
    const auto b = blow_up_set(set, minimal_polynomial(set, n));
    CHECK(is_subset(set, b.c_prime, 1e-9));
    CHECK(b.ell_prime >= 1);
    CHECK(b.ell_prime <= n);
  }
}

TEST_CASE("minimality witness examples") {
  const auto r1 = minimal_polynomial(IntervalUnion::single(-1, 1), 5);
  CHECK(minimality_witness(IntervalUnion::single(-1, 1), r1, 2000).pass);

  const auto r2 = minimal_polynomial(kE05, 2);
  const auto w2 = minimality_witness(kE05, r2, 2000, kE05);
  CHECK(w2.pass);
  CHECK(w2.sandwich_applicable);

  const IntervalUnion bigger = U({{-1.0, -0.5}, {-0.1, 0.1}, {0.5, 1.0}});
  const auto w3 = minimality_witness(kE05, r2, 2000, bigger);
  CHECK_FALSE(w3.sandwich_applicable);
  CHECK(w3.bounded);
  CHECK(w3.alternates);
}

TEST_CASE("sandwich between the set and its blow-up keeps the minimal polynomial") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 15; ++t) {
    const IntervalUnion set = random_union(rng, 3);
    const int n = 2 + t % 6;
    const auto r = minimal_polynomial(set, n);
    const auto b = blow_up_set(set, r);
    // C'' = each component of C' pulled halfway towards C
    std::vector<std::pair<double, double>> p;
    for (const Interval& cp : b.c_prime.intervals()) {
      double lo = cp.hi, hi = cp.lo;
      for (const Interval& iv : set.intervals())
        if (iv.lo >= cp.lo - 1e-9 && iv.hi <= cp.hi + 1e-9) lo = std::min(lo, iv.lo), hi = std::max(hi, iv.hi);
      if (lo > hi) continue;
      p.emplace_back(0.5 * (cp.lo + lo), 0.5 * (cp.hi + hi));
    }
    const IntervalUnion mid = U(p);
    const auto rm = minimal_polynomial(mid, n);
    CHECK(rm.deviation == doctest::Approx(r.deviation).epsilon(1e-8));
    CHECK(coefficient_distance(rm.poly, r.poly) <= 1e-7);
  }
}

TEST_CASE("sup_norm helper") {
  CHECK(sup_norm(IntervalUnion::single(-1, 1), 16, [](double x) { return std::sin(3 * x); }) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
