#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "chebcap/intervals.hpp"

namespace chebcap {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
  std::string command;           ///< minpoly | capacity | inverse-image | verify | ratio | arcs
  std::string intervals;         ///< text or JSON interval spec, kept verbatim
  int degree = 0;                ///< 0: command default
  int k_max = 0;
  std::vector<double> poly;      ///< ascending coefficients
  int samples = 0;               ///< length of an optional (x, P(x)) table
  int random = 0;                ///< verify: number of random unions
  std::uint64_t seed = 7;
  double tolerance = 1e-12;
  double acceptance = 1e-9;
  int max_iterations = 200;
  std::string format = "json";   ///< json | csv
  std::string out;               ///< empty: standard output

  bool operator==(const RunConfig&) const = default;
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

/// Throws InvalidInput on bad flags. argv[0] is the program name.
RunConfig parse_args(const std::vector<std::string>& argv);

struct RunOutput {
  int exit_code = 0;
  std::string text;   ///< report (JSON document or CSV table)
  std::string error;  ///< diagnostic for standard error
};

/// Exit codes: 0 ok, 1 verify found a violation, 2 invalid input,
/// 3 numerical failure (non-convergence or overflow).
RunOutput run(const RunConfig& config);

/// parse_args + run + writing to stdout / --out / stderr.
int cli_main(int argc, char** argv);

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& rng);

/// 1..max_intervals intervals inside [-1, 1], with every gap and length >= min_gap.
IntervalUnion random_union(std::mt19937_64& rng, int max_intervals, double min_gap = 0.02);

struct NamedSet {
  std::string name;
  IntervalUnion set;
};

/// Fixed sets used by `verify`: closed-form cases, inverse images and generic unions.
std::vector<NamedSet> fixture_battery();

}  // namespace chebcap
