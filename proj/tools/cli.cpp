#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include "gsh/error.hpp"
#include "gsh/io.hpp"

namespace gsh::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const std::vector<std::string> kCommands = {"coeffs",     "membership",  "bounds-scan",         "thresholds",
                                            "growth",     "lemma-suite", "verify-implications", "plot-data"};

const std::map<std::string, std::string> kDescriptions = {
    {"coeffs", "Taylor coefficients of a member"},
    {"membership", "sufficient, kernel and geometric membership tests"},
    {"bounds-scan", "empirical maxima of coefficient and Hankel functionals"},
    {"thresholds", "alpha thresholds for the four differential operators"},
    {"growth", "growth and distortion bounds against sampled members"},
    {"lemma-suite", "randomized checks of the Caratheodory coefficient lemmas"},
    {"verify-implications", "search for counterexamples to the subordination implications"},
    {"plot-data", "boundary curves as CSV or JSON"},
};

std::string num(double v, int precision = 17) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string num(cplx z, int precision = 12) {
  if (z.imag() == 0.0) return num(z.real(), precision);
  return num(z.real(), precision) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag()), precision) + "i";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write(std::ostream& os, Format format) const {
    if (format == Format::Csv) {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
        os << '\n';
      };
      line(header);
      for (const auto& r : rows) line(r);
      return;
    }
    auto line = [&](const std::vector<std::string>& cells) {
      os << '|';
      for (const auto& c : cells) os << ' ' << c << " |";
      os << '\n';
    };
    line(header);
    os << '|';
    for (std::size_t i = 0; i < header.size(); ++i) os << " --- |";
    os << '\n';
    for (const auto& r : rows) line(r);
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Artifact produced by a command: either JSON or tabular text.
struct Artifact {
  json document;
  std::string text;
  int exit_code = kExitOk;
};

NormalizedFunction load_function(const RunConfig& c, bool default_f0) {
  if (!c.input.empty()) return function_from_json(read_json_file(c.input), c.order);
  std::string w = c.witness;
  if (w.empty()) {
    if (!default_f0) throw Error(ErrorCode::InvalidArgument, "this command needs --input or --witness");
    w = "identity";
  }
  if (w == "identity") return member_from_witness(SchwarzSample::monomial(1), c.order);
  if (w.rfind("power:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(w.substr(6));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad witness " + w);
    }
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "witness power must be >= 1");
    return member_from_witness(SchwarzSample::monomial(k), c.order);
  }
  throw Error(ErrorCode::Parse, "unknown witness '" + w + "' (identity | power:k)");
}

Artifact cmd_coeffs(const RunConfig& c) {
  const auto f = load_function(c, true);
  Artifact a;
  if (c.format == Format::Json) {
    a.document = f;
    return a;
  }
  Table t{{"n", "re", "im"}, {}};
  for (int n = 0; n <= f.order(); ++n) {
    const cplx v = f.coeff(n);
    t.rows.push_back({std::to_string(n), num(v.real()), num(v.imag())});
  }
  std::ostringstream os;
  t.write(os, c.format);
  a.text = os.str();
  return a;
}

Artifact cmd_membership(const RunConfig& c) {
  const auto f = load_function(c, false);
  MembershipOptions opts;
  opts.theta_samples = c.theta_samples;
  opts.grid.max_radius = c.max_radius;
  const auto r = membership_report(f, opts);
  Artifact a;
  if (c.format == Format::Json) {
    a.document = r;
    a.document["order"] = f.order();
    a.document["theta_samples"] = c.theta_samples;
    a.document["max_radius"] = c.max_radius;
    return a;
  }
  Table t{{"test", "passes", "statistic", "location"}, {}};
  t.rows.push_back({"sufficient", yes_no(r.sufficient.holds), num(r.sufficient.sup_statistic, 10),
                    "theta=" + num(r.sufficient.argmax_theta, 10)});
  t.rows.push_back({"kernel", yes_no(r.kernel.nonvanishing), num(r.kernel.min_modulus, 10),
                    "z=" + num(r.kernel.argmin_z, 10)});
  t.rows.push_back({"geometric", yes_no(r.geometric.member), num(r.geometric.max_excursion, 10),
                    "z=" + num(r.geometric.argmax_z, 10)});
  t.rows.push_back({"verdict", to_string(r.combined), "", ""});
  std::ostringstream os;
  t.write(os, c.format);
  a.text = os.str();
  return a;
}

std::vector<Functional> bound_functionals() {
  std::vector<Functional> out;
  for (int n = 2; n <= 6; ++n) out.push_back(Functional::coefficient(n));
  for (cplx l : {cplx(0.0), cplx(0.5), cplx(1.0), cplx(2.0), cplx(0.0, 1.0)})
    out.push_back(Functional::fekete_szego(l));
  out.push_back(Functional::t());
  out.push_back(Functional::h22());
  out.push_back(Functional::h31());
  return out;
}

Artifact cmd_bounds_scan(const RunConfig& c) {
  ScanConfig cfg;
  cfg.samples = c.samples.value_or(10000);
  cfg.seed = c.seed;
  cfg.tolerance = c.tolerance;
  if (c.scan_order) cfg.order = *c.scan_order;
  std::vector<BoundEstimate> results;
  for (const auto& fn : bound_functionals()) results.push_back(scan(fn, cfg));

  Artifact a;
  if (c.format == Format::Json) {
    a.document = {{"samples", cfg.samples}, {"seed", cfg.seed}, {"tolerance", cfg.tolerance}, {"results", results}};
    return a;
  }
  Table t{{"functional", "claimed", "empirical", "ratio", "violation", "witness"}, {}};
  for (const auto& b : results)
    t.rows.push_back({b.functional, num(b.claimed_bound, 10), num(b.empirical_max, 10), num(b.attained_ratio, 10),
                      yes_no(b.violation), family_name(b.witness)});
  std::ostringstream os;
  t.write(os, c.format);
  a.text = os.str();
  return a;
}

Artifact cmd_thresholds(const RunConfig& c) {
  std::vector<JanowskiParams> pairs;
  if (c.A || c.B) {
    pairs.push_back({c.A.value_or(1.0), c.B.value_or(0.0)});
  } else {
    pairs = {{1.0, 0.0}, {0.5, -0.5}, {0.8, 0.2}, {1.0, -1.0}};
  }
  for (const auto& p : pairs) p.validate();
  const OperatorKind kinds[] = {OperatorKind::P1, OperatorKind::P2, OperatorKind::P3, OperatorKind::P4};

  Artifact a;
  if (c.format == Format::Json) {
    a.document = json::array();
    for (const auto& p : pairs) {
      json row = {{"A", p.A}, {"B", p.B}, {"b_sign_flag", p.B < 0.0}};
      for (auto k : kinds) {
        const auto v = alpha_threshold(k, p);
        row[to_string(k)] = v ? json(*v) : json(nullptr);
      }
      a.document.push_back(row);
    }
    return a;
  }
  Table t{{"A", "B", "P1", "P2", "P3", "P4"}, {}};
  for (const auto& p : pairs) {
    std::vector<std::string> row{num(p.A, 10), num(p.B, 10)};
    for (auto k : kinds) {
      const auto v = alpha_threshold(k, p);
      row.push_back(v ? num(*v, c.format == Format::Csv ? 17 : 6) : "Undefined");
    }
    t.rows.push_back(row);
  }
  std::ostringstream os;
  t.write(os, c.format);
  a.text = os.str();
  return a;
}

Artifact cmd_growth(const RunConfig& c) {
  std::vector<GrowthRecord> records;
  for (int i = 1; i <= 19; ++i) records.push_back(growth_distortion(0.05 * i));
  Artifact a;
  if (c.format == Format::Json) {
    a.document = {{"records", records},
                  {"covering_radius_series", covering_radius_series()},
                  {"covering_radius_quadrature", covering_radius_quadrature()}};
    return a;
  }
  Table t{{"r", "lower", "upper", "deriv_bound"}, {}};
  const int p = c.format == Format::Csv ? 17 : 10;
  for (const auto& g : records) t.rows.push_back({num(g.r, p), num(g.lower, p), num(g.upper, p), num(g.deriv_bound, p)});
  std::ostringstream os;
  t.write(os, c.format);
  if (c.format == Format::Markdown) os << "\ncovering radius: " << num(covering_radius_series(), 12) << '\n';
  a.text = os.str();
  return a;
}

Artifact cmd_lemma_suite(const RunConfig& c) {
  const auto r = empirical_lemma_suite(c.samples.value_or(10000), c.seed);
  Artifact a;
  a.exit_code = r.total_violations() == 0 ? kExitOk : kExitCheckFailed;
  if (c.format == Format::Json) {
    a.document = r;
    a.document["seed"] = c.seed;
    return a;
  }
  Table t{{"check", "count"}, {}};
  auto row = [&](const char* k, std::size_t v) { t.rows.push_back({k, std::to_string(v)}); };
  row("samples", r.samples);
  row("cn_violations", r.cn_violations);
  row("fs_complex_violations", r.fs_complex_violations);
  row("fs_real_violations", r.fs_real_violations);
  row("lj_violations", r.lj_violations);
  row("la_violations", r.la_violations);
  row("la_condition_hits", r.la_condition_hits);
  row("lc_invalid", r.lc_invalid);
  row("lc_degenerate", r.lc_degenerate);
  std::ostringstream os;
  t.write(os, c.format);
  a.text = os.str();
  return a;
}

Artifact cmd_verify(const RunConfig& c) {
  HarnessConfig cfg;
  cfg.functions = c.samples.value_or(cfg.functions);
  cfg.seed = c.seed;
  cfg.order = c.order;
  cfg.grid.max_radius = c.max_radius;
  const auto r = run_implication_harness(cfg);
  Artifact a;
  a.exit_code = r.counterexamples() == 0 ? kExitOk : kExitCheckFailed;
  if (c.format == Format::Json) {
    a.document = r;
    a.document["seed"] = c.seed;
    a.document["functions"] = cfg.functions;
    return a;
  }
  Table t{{"kind", "A", "B", "threshold", "alpha", "cases", "non_vacuous", "counterexamples", "sqrt_counterexamples",
           "b_sign_flag"},
          {}};
  for (const auto& s : r.summaries)
    t.rows.push_back({to_string(s.kind), num(s.janowski.A, 10), num(s.janowski.B, 10),
                      s.threshold ? num(*s.threshold, 10) : "Undefined", num(s.alpha, 10), std::to_string(s.cases),
                      std::to_string(s.non_vacuous), std::to_string(s.counterexamples),
                      std::to_string(s.sqrt_counterexamples), yes_no(s.b_sign_flag)});
  std::ostringstream os;
  t.write(os, c.format);
  a.text = os.str();
  return a;
}

Artifact cmd_plot_data(const RunConfig& c) {
  if (c.resolution < 64) throw Error(ErrorCode::InvalidArgument, "--resolution must be >= 64");
  std::function<cplx(double)> curve;
  if (c.curve == "sinh") {
    curve = [](double t) { return std::sinh(std::polar(1.0, t)); };
  } else if (c.curve == "janowski") {
    const JanowskiParams p{c.A.value_or(1.0), c.B.value_or(0.0)};
    p.validate();
    curve = [p](double t) { return p(std::polar(1.0, t)); };
  } else if (c.curve == "ratio") {
    if (!(c.radius > 0.0 && c.radius < 1.0)) throw Error(ErrorCode::InvalidArgument, "--radius must lie in (0, 1)");
    const auto q = ratio_series(load_function(c, true));
    curve = [q, r = c.radius](double t) { return evaluate(q, std::polar(r, t)); };
  } else {
    throw Error(ErrorCode::Parse, "unknown curve '" + c.curve + "' (sinh | ratio | janowski)");
  }
  Artifact a;
  std::vector<double> ts;
  std::vector<cplx> zs;
  for (int i = 0; i <= c.resolution; ++i) {
    const double t = kTwoPi * i / c.resolution;
    ts.push_back(t);
    zs.push_back(curve(t));
  }
  if (c.format == Format::Json) {
    a.document = {{"curve", c.curve}, {"t", ts}, {"points", zs}};
    return a;
  }
  Table t{{"t", "re", "im"}, {}};
  for (std::size_t i = 0; i < ts.size(); ++i) t.rows.push_back({num(ts[i]), num(zs[i].real()), num(zs[i].imag())});
  std::ostringstream os;
  t.write(os, Format::Csv);
  a.text = os.str();
  return a;
}

Artifact dispatch(const RunConfig& c) {
  if (c.command == "coeffs") return cmd_coeffs(c);
  if (c.command == "membership") return cmd_membership(c);
  if (c.command == "bounds-scan") return cmd_bounds_scan(c);
  if (c.command == "thresholds") return cmd_thresholds(c);
  if (c.command == "growth") return cmd_growth(c);
  if (c.command == "lemma-suite") return cmd_lemma_suite(c);
  if (c.command == "verify-implications") return cmd_verify(c);
  return cmd_plot_data(c);
}

void emit(const Artifact& a, const RunConfig& c, std::ostream& out) {
  auto write = [&](std::ostream& os) {
    if (!a.text.empty())
      os << a.text;
    else
      os << a.document.dump(2) << '\n';
  };
  if (c.output.empty()) {
    write(out);
    return;
  }
  std::ofstream file(c.output, std::ios::binary);
  if (!file) throw Error(ErrorCode::Parse, "cannot write " + c.output);
  write(file);
  if (!file) throw Error(ErrorCode::Parse, "write failed for " + c.output);
}

}  // namespace

void RunConfig::validate() const {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw Error(ErrorCode::Parse, "unknown command '" + command + "'");
  if (order < 8 || order > 128) throw Error(ErrorCode::InvalidArgument, "--order must lie in [8, 128]");
  if (!(max_radius > 0.0 && max_radius < 1.0)) throw Error(ErrorCode::InvalidArgument, "--max-radius must lie in (0, 1)");
  if (theta_samples < 64) throw Error(ErrorCode::InvalidArgument, "--theta-samples must be >= 64");
  if (samples && *samples == 0) throw Error(ErrorCode::InvalidArgument, "--samples must be positive");
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "--tolerance must be positive");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    const Artifact a = dispatch(config);
    emit(a, config, out);
    return a.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::Parse ? kExitUsage : kExitInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for the class of analytic f with zf'/f - 1 subordinate to sinh z"};
  app.require_subcommand(1, 1);

  RunConfig c;
  std::string format = "json";
  bool format_set = false;
  std::optional<std::size_t> samples;
  std::optional<int> scan_order;
  std::optional<double> A, B;

  app.add_option("--input", c.input, "function or witness JSON file");
  app.add_option("--order", c.order, "truncation order (8..128)");
  app.add_option("--theta-samples", c.theta_samples, "kernel angle samples");
  app.add_option("--max-radius", c.max_radius, "outer radius of the sampling grid");
  app.add_option("--samples", samples, "random samples (scans, suites, harness)");
  app.add_option("--seed", c.seed, "base seed");
  app.add_option("--tolerance", c.tolerance, "violation tolerance");
  app.add_option_function<std::string>(
         "--format", [&](const std::string& s) { format = s, format_set = true; }, "json | csv | markdown")
      ->check(CLI::IsMember({"json", "csv", "markdown"}));
  app.add_option("--output", c.output, "output path (default stdout)");
  app.fallthrough();

  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    sub->fallthrough();
    if (name == "coeffs" || name == "membership" || name == "plot-data")
      sub->add_option("--witness", c.witness, "identity | power:k (omega = z^k)");
    if (name == "bounds-scan") sub->add_option("--scan-order", scan_order, "minimum series order used by scans");
    if (name == "thresholds" || name == "plot-data") {
      sub->add_option("--A", A, "Janowski A");
      sub->add_option("--B", B, "Janowski B");
    }
    if (name == "plot-data") {
      sub->add_option("--curve", c.curve, "sinh | ratio | janowski");
      sub->add_option("--resolution", c.resolution, "points per curve (>= 64)");
      sub->add_option("--radius", c.radius, "circle radius for the ratio image");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  c.command = app.get_subcommands().front()->get_name();
  c.samples = samples;
  c.scan_order = scan_order;
  c.A = A;
  c.B = B;
  if (format == "csv") c.format = Format::Csv;
  if (format == "markdown") c.format = Format::Markdown;
  if (c.command == "plot-data" && !format_set) c.format = Format::Csv;
  if (c.command == "coeffs" && !format_set) c.format = Format::Markdown;
  return run(c, std::cout, std::cerr);
}

}  // namespace gsh::cli
