#include "chebcap/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chebcap/arcs.hpp"
#include "chebcap/capacity.hpp"
#include "chebcap/errors.hpp"
#include "chebcap/format.hpp"
#include "chebcap/inverse_image.hpp"
#include "chebcap/json_out.hpp"
#include "chebcap/remez.hpp"

namespace chebcap {

using nlohmann::json;

void to_json(json& j, const RunConfig& c) {
  j = json{{"command", c.command},     {"intervals", c.intervals},
           {"degree", c.degree},       {"kmax", c.k_max},
           {"poly", c.poly},           {"samples", c.samples},
           {"random", c.random},       {"seed", c.seed},
           {"tolerance", c.tolerance}, {"acceptance", c.acceptance},
           {"max_iterations", c.max_iterations},
           {"format", c.format},       {"out", c.out}};
}

void from_json(const json& j, RunConfig& c) {
  RunConfig d;
  c.command = j.value("command", d.command);
  c.intervals = j.value("intervals", d.intervals);
  c.degree = j.value("degree", d.degree);
  c.k_max = j.value("kmax", d.k_max);
  c.poly = j.value("poly", d.poly);
  c.samples = j.value("samples", d.samples);
  c.random = j.value("random", d.random);
  c.seed = j.value("seed", d.seed);
  c.tolerance = j.value("tolerance", d.tolerance);
  c.acceptance = j.value("acceptance", d.acceptance);
  c.max_iterations = j.value("max_iterations", d.max_iterations);
  c.format = j.value("format", d.format);
  c.out = j.value("out", d.out);
}

namespace {

const std::vector<std::string> kCommands = {"minpoly", "capacity", "inverse-image",
                                            "verify",  "ratio",    "arcs"};

std::vector<double> parse_coeffs(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<double> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad coefficient '" + tok + "'");
    }
    if (used != tok.size() || !std::isfinite(v)) throw InvalidInput("bad coefficient '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("--poly needs at least one coefficient");
  return out;
}

struct AppState {
  RunConfig cfg;
  std::string poly_text;
};

std::unique_ptr<CLI::App> build_app(AppState& st) {
  auto app = std::make_unique<CLI::App>("Minimal polynomials and capacity bounds on unions of intervals",
                                        "chebcap");
  app->require_subcommand(1);
  for (const std::string& name : kCommands) {
    CLI::App* sub = app->add_subcommand(name);
    sub->add_option("--intervals", st.cfg.intervals, "\"a b; c d\" or [[a,b],[c,d]]");
    sub->add_option("--degree", st.cfg.degree);
    sub->add_option("--kmax", st.cfg.k_max);
    sub->add_option("--poly", st.poly_text, "ascending coefficients \"c0 c1 ... cn\"");
    sub->add_option("--samples", st.cfg.samples, "emit an (x, P(x)) table of this length");
    sub->add_option("--random", st.cfg.random);
    sub->add_option("--seed", st.cfg.seed);
    sub->add_option("--tolerance", st.cfg.tolerance);
    sub->add_option("--acceptance", st.cfg.acceptance);
    sub->add_option("--max-iterations", st.cfg.max_iterations);
    sub->add_option("--format", st.cfg.format)->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", st.cfg.out);
  }
  return app;
}

RemezOptions remez_options(const RunConfig& c) {
  RemezOptions o;
  o.tolerance = c.tolerance;
  o.acceptance = std::max(c.acceptance, c.tolerance);
  o.max_iterations = c.max_iterations;
  return o;
}

IntervalUnion require_intervals(const RunConfig& c) {
  if (c.intervals.empty()) throw InvalidInput(c.command + " needs --intervals");
  return parse_intervals(c.intervals);
}

int require_positive(int v, int fallback, const char* what) {
  if (v == 0) v = fallback;
  if (v < 1) throw InvalidInput(std::string(what) + " must be >= 1");
  return v;
}

// Flat CSV with columns quantity,index,value.
class QuantityTable {
 public:
  void add(const std::string& q, std::size_t i, double v) { rows_ << q << ',' << i << ',' << fmt17(v) << '\n'; }
  void add(const std::string& q, const std::vector<double>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) add(q, i, vs[i]);
  }
  std::string str() const { return "quantity,index,value\n" + rows_.str(); }

 private:
  std::ostringstream rows_;
};

struct SampleTable {
  std::vector<double> x, p;
};

template <typename F>
SampleTable sample(double lo, double hi, int count, const F& f) {
  SampleTable t;
  for (int i = 0; i < count; ++i) {
    const double x = count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (count - 1);
    t.x.push_back(x);
    t.p.push_back(f(x));
  }
  return t;
}

json intervals_json(const IntervalUnion& u) {
  json a = json::array();
  for (const Interval& iv : u.intervals()) a.push_back({iv.lo, iv.hi});
  return a;
}

struct Report {
  json results;
  std::string csv;
  bool violation = false;
};

Report cmd_minpoly(const RunConfig& c) {
  const IntervalUnion set = require_intervals(c);
  const int n = require_positive(c.degree, 0, "--degree");
  const MinimalPolyResult r = minimal_polynomial(set, n, remez_options(c));
  Report rep;
  rep.results = {{"degree", n},
                 {"coeffs", r.poly.coeffs()},
                 {"deviation", r.deviation},
                 {"level", r.level},
                 {"residual", r.residual},
                 {"iterations", r.iterations},
                 {"alternation_points", r.alternation_points}};
  QuantityTable t;
  t.add("coeff", r.poly.coeffs());
  t.add("deviation", 0, r.deviation);
  t.add("level", 0, r.level);
  t.add("residual", 0, r.residual);
  t.add("iterations", 0, r.iterations);
  t.add("alternation_point", r.alternation_points);
  if (c.samples > 0) {
    const SampleTable s = sample(set.lower(), set.upper(), c.samples, [&](double x) { return r(x); });
    rep.results["samples"] = {{"x", s.x}, {"p", s.p}};
    t.add("sample_x", s.x);
    t.add("sample_p", s.p);
  }
  rep.csv = t.str();
  return rep;
}

Report cmd_capacity(const RunConfig& c) {
  const IntervalUnion set = require_intervals(c);
  const int n = require_positive(c.degree, 8, "--degree");
  const CapacityBracket b = capacity_bracket(set, n, remez_options(c));
  Report rep;
  rep.results = {{"lower", b.lower},
                 {"midpoint_lower", b.midpoint_lower},
                 {"upper", b.upper},
                 {"degree", b.degree_used},
                 {"scale", b.scale},
                 {"gamma", b.lower_params.gamma},
                 {"delta", b.lower_params.delta}};
  QuantityTable t;
  t.add("lower", 0, b.lower);
  t.add("midpoint_lower", 0, b.midpoint_lower);
  t.add("upper", 0, b.upper);
  t.add("degree", 0, b.degree_used);
  t.add("scale", 0, b.scale);
  t.add("gamma", b.lower_params.gamma);
  t.add("delta", b.lower_params.delta);
  rep.csv = t.str();
  return rep;
}

Report cmd_inverse_image(const RunConfig& c) {
  if (c.poly.empty()) throw InvalidInput("inverse-image needs --poly");
  const Polynomial p(c.poly);
  const InverseImageResult img = inverse_image(p);
  Report rep;
  rep.results = {{"degree", p.degree()},
                 {"image", intervals_json(img.image)},
                 {"is_real", img.is_real},
                 {"boundary_points", img.boundary_points},
                 {"boundary_multiplicity", img.boundary_multiplicity}};
  QuantityTable t;
  for (std::size_t i = 0; i < img.image.size(); ++i) {
    t.add("image_lo", i, img.image[i].lo);
    t.add("image_hi", i, img.image[i].hi);
  }
  t.add("is_real", 0, img.is_real ? 1.0 : 0.0);
  t.add("boundary_point", img.boundary_points);
  if (img.is_real) {
    const double cap = capacity_of_inverse_image(p);
    rep.results["capacity"] = cap;
    rep.results["deviation"] = 2.0 * std::pow(cap, p.degree());
    t.add("capacity", 0, cap);
    t.add("deviation", 0, 2.0 * std::pow(cap, p.degree()));
  }
  if (c.samples > 0) {
    const SampleTable s = sample(img.image.lower(), img.image.upper(), c.samples, [&](double x) { return p(x); });
    rep.results["samples"] = {{"x", s.x}, {"p", s.p}};
    t.add("sample_x", s.x);
    t.add("sample_p", s.p);
  }
  rep.csv = t.str();
  return rep;
}

Report cmd_verify(const RunConfig& c) {
  const int n_max = require_positive(c.degree, 12, "--degree");
  if (c.random < 0) throw InvalidInput("--random must be >= 0");
  const RemezOptions opts = remez_options(c);

  std::vector<NamedSet> sets;
  if (!c.intervals.empty()) {
    sets.push_back({"input", parse_intervals(c.intervals)});
  } else {
    sets = fixture_battery();
  }
  std::mt19937_64 rng(c.seed);
  for (int i = 0; i < c.random; ++i) sets.push_back({"random" + std::to_string(i), random_union(rng, 4)});

  Report rep;
  json cases = json::array();
  std::ostringstream csv;
  csv << "set,degree,deviation,lower_bound,slack,pass\n";
  int passed = 0, failed = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const NamedSet& ns : sets) {
    const double lower = capacity_lower_bound(ns.set);
    for (int n = 1; n <= n_max; ++n) {
      const double dev = minimal_polynomial(ns.set, n, opts).deviation;
      const double bound = 2.0 * std::pow(lower, n);
      const double slack = (dev - bound) / dev;
      const bool ok = slack >= -1e-9;
      (ok ? passed : failed)++;
      worst = std::min(worst, slack);
      const std::string text = format_intervals_text(ns.set);
      cases.push_back({{"set", ns.name},
                       {"intervals", text},
                       {"degree", n},
                       {"deviation", dev},
                       {"lower_bound", bound},
                       {"slack", slack},
                       {"pass", ok}});
      csv << '"' << ns.name << ": " << text << "\"," << n << ',' << fmt17(dev) << ',' << fmt17(bound) << ','
          << fmt17(slack) << ',' << (ok ? "true" : "false") << '\n';
    }
  }
  rep.results = {{"cases", cases}, {"passed", passed}, {"failed", failed}, {"worst_slack", worst}};
  rep.csv = csv.str();
  rep.violation = failed > 0;
  return rep;
}

Report cmd_ratio(const RunConfig& c) {
  const IntervalUnion set = require_intervals(c);
  const int k_max = require_positive(c.k_max, 10, "--kmax");
  const RatioReport r = ratio_sequence(set, k_max, remez_options(c));
  Report rep;
  rep.results = {{"k", r.k},
                 {"deviations", r.deviations},
                 {"ratios", r.ratios},
                 {"upper_ratios", r.upper_ratios},
                 {"min_ratio", r.min_ratio},
                 {"max_ratio", r.max_ratio},
                 {"cap_lower", r.cap_est},
                 {"cap_upper", r.upper_est}};
  std::ostringstream csv;
  csv << "k,deviation,ratio_lower,ratio_upper\n";
  for (std::size_t i = 0; i < r.k.size(); ++i) {
    csv << r.k[i] << ',' << fmt17(r.deviations[i]) << ',' << fmt17(r.ratios[i]) << ','
        << fmt17(r.upper_ratios[i]) << '\n';
  }
  rep.csv = csv.str();
  return rep;
}

Report cmd_arcs(const RunConfig& c) {
  const ArcSet arcs(require_intervals(c));
  const int n = require_positive(c.degree, 4, "--degree");
  const RemezOptions opts = remez_options(c);
  const IntervalUnion& proj = arcs.projection();

  const double lower_c = capacity_lower_bound(proj);
  const double upper_c = std::min(0.5, capacity_upper_estimate(proj, 20, opts));
  const double gamma_lower = robinson_capacity(lower_c);
  const double gamma_upper = robinson_capacity(upper_c);

  std::vector<double> uppers, ratios;
  for (int k = 1; k <= n; ++k) {
    uppers.push_back(arc_deviation_upper(arcs, k, opts));
    ratios.push_back(uppers.back() / std::pow(gamma_upper, k));
  }
  const Polynomial lifted = arc_lifted_polynomial(arcs, n, opts);
  const double lifted_sup = arc_sup_norm(lifted, arcs);

  Report rep;
  rep.results = {{"degree", n},
                 {"cap_projection_lower", lower_c},
                 {"cap_projection_upper", upper_c},
                 {"cap_arcs_lower", gamma_lower},
                 {"cap_arcs_upper", gamma_upper},
                 {"deviation_upper", uppers},
                 {"upper_ratios", ratios},
                 {"max_upper_ratio", *std::max_element(ratios.begin(), ratios.end())},
                 {"lifted_coeffs", lifted.coeffs()},
                 {"lifted_sup_norm", lifted_sup}};
  QuantityTable t;
  t.add("cap_projection_lower", 0, lower_c);
  t.add("cap_projection_upper", 0, upper_c);
  t.add("cap_arcs_lower", 0, gamma_lower);
  t.add("cap_arcs_upper", 0, gamma_upper);
  for (int k = 1; k <= n; ++k) {
    t.add("deviation_upper", k, uppers[k - 1]);
    t.add("upper_ratio", k, ratios[k - 1]);
  }
  t.add("lifted_coeff", lifted.coeffs());
  t.add("lifted_sup_norm", 0, lifted_sup);

  if (!c.poly.empty()) {
    const Polynomial p(c.poly);
    const ArcBoundReport b = arc_lower_bound(p, arcs, gamma_lower);
    rep.results["bound"] = {{"n", b.n},         {"k_star", b.k_star},      {"b_kstar", b.b_kstar},
                            {"lower", b.lower}, {"sup_norm", b.sup_norm}, {"cap_gamma", b.cap_gamma},
                            {"holds", b.sup_norm >= b.lower - 1e-9}};
    t.add("bound_k_star", 0, b.k_star);
    t.add("bound_b_kstar", 0, b.b_kstar);
    t.add("bound_lower", 0, b.lower);
    t.add("bound_sup_norm", 0, b.sup_norm);
  }
  rep.csv = t.str();
  return rep;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  AppState st;
  auto app = build_app(st);
  std::vector<std::string> rev(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
  std::reverse(rev.begin(), rev.end());
  try {
    app->parse(rev);
  } catch (const CLI::ParseError& e) {
    throw InvalidInput(e.what());
  }
  st.cfg.command = app->get_subcommands().front()->get_name();
  if (!st.poly_text.empty()) st.cfg.poly = parse_coeffs(st.poly_text);
  return st.cfg;
}

RunOutput run(const RunConfig& config) {
  RunOutput out;
  try {
    if (config.format != "json" && config.format != "csv") throw InvalidInput("--format must be json or csv");
    Report rep;
    if (config.command == "minpoly") rep = cmd_minpoly(config);
    else if (config.command == "capacity") rep = cmd_capacity(config);
    else if (config.command == "inverse-image") rep = cmd_inverse_image(config);
    else if (config.command == "verify") rep = cmd_verify(config);
    else if (config.command == "ratio") rep = cmd_ratio(config);
    else if (config.command == "arcs") rep = cmd_arcs(config);
    else throw InvalidInput("unknown command '" + config.command + "'");

    if (config.format == "csv") {
      out.text = rep.csv;
    } else {
      json inputs = config;
      inputs.erase("out");
      out.text = dump_json({{"command", config.command},
                            {"inputs", inputs},
                            {"version", kVersion},
                            {"results", rep.results}}) +
                 "\n";
    }
    if (rep.violation) {
      out.exit_code = 1;
      out.error = "verify: the inequality L_n >= 2 lower^n failed for at least one case";
    }
  } catch (const InvalidInput& e) {
    out = {2, "", std::string("invalid input: ") + e.what()};
  } catch (const ConvergenceError& e) {
    out = {3, "", std::string("no convergence: ") + e.what() + " (gap " + fmt17(e.last_gap()) + ")"};
  } catch (const NumericOverflow& e) {
    out = {3, "", std::string("numeric overflow: ") + e.what()};
  }
  return out;
}

int cli_main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  {
    AppState st;
    auto app = build_app(st);
    std::vector<std::string> rev(args.begin() + (argc > 0 ? 1 : 0), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
      app->parse(rev);
    } catch (const CLI::CallForHelp& e) {
      return app->exit(e);
    } catch (const CLI::ParseError&) {
      // reported below through parse_args
    }
  }
  RunOutput out;
  RunConfig cfg;
  try {
    cfg = parse_args(args);
    out = run(cfg);
  } catch (const InvalidInput& e) {
    out = {2, "", std::string("invalid input: ") + e.what()};
  }
  if (!out.error.empty()) std::cerr << out.error << '\n';
  if (cfg.out.empty()) {
    std::cout << out.text;
  } else if (!out.text.empty()) {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << '\n';
      return 2;
    }
    f << out.text;
  }
  return out.exit_code;
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

IntervalUnion random_union(std::mt19937_64& rng, int max_intervals, double min_gap) {
  if (max_intervals < 1) throw InvalidInput("max_intervals must be >= 1");
  const int l = 1 + static_cast<int>(uniform01(rng) * max_intervals);
  for (;;) {
    std::vector<double> pts(2 * l);
    for (double& p : pts) p = -1.0 + 2.0 * uniform01(rng);
    std::sort(pts.begin(), pts.end());
    bool ok = true;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) ok = ok && pts[i + 1] - pts[i] >= min_gap;
    if (!ok) continue;
    std::vector<std::pair<double, double>> pairs;
    for (int j = 0; j < l; ++j) pairs.emplace_back(pts[2 * j], pts[2 * j + 1]);
    return IntervalUnion::from_pairs(std::move(pairs));
  }
}

std::vector<NamedSet> fixture_battery() {
  const Polynomial x = Polynomial::linear(0.0, 1.0);
  auto pair = [](double a) { return IntervalUnion::from_pairs({{-1.0, -a}, {a, 1.0}}); };
  return {
      {"interval", IntervalUnion::single(-1.0, 1.0)},
      {"unit", IntervalUnion::single(0.0, 1.0)},
      {"pair0.3", pair(0.3)},
      {"pair0.5", pair(0.5)},
      {"pair0.6", pair(0.6)},
      {"pair0.7", pair(0.7)},
      {"asym2", IntervalUnion::from_pairs({{-1.0, 0.0}, {0.5, 1.0}})},
      {"image_T3", inverse_image(1.4 * compose_T(3, x) + 0.1).image},
      {"image_T4", inverse_image(1.3 * compose_T(4, x) + 0.15).image},
      {"three", IntervalUnion::from_pairs({{-1.0, -0.2}, {0.1, 0.4}, {0.7, 1.0}})},
      {"four", IntervalUnion::from_pairs({{-1.0, -0.7}, {-0.3, 0.0}, {0.2, 0.5}, {0.8, 1.0}})},
  };
}

}  // namespace chebcap
