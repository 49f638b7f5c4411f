#include "dicke/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicke/entanglement.hpp"
#include "dicke/kernels.hpp"
#include "dicke/scaling.hpp"
#include "dicke/sweep.hpp"
#include "dicke/validation.hpp"

namespace dicke::cli {

namespace {

using json = nlohmann::ordered_json;

// Bad configuration detected after CLI11 parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double to_double(std::string_view s, std::string_view what) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

long long to_int(std::string_view s, std::string_view what) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

// --- shared options ----------------------------------------------------------

struct PointOptions {
  double d_ratio = 10.0;
  std::string alpha;
  std::string n_list;
  std::string n_range;
  double tolerance = 1e-8;
  std::optional<double> q_max;
  std::optional<std::size_t> points;
  std::optional<double> omega, delta, coupling;
};

struct OutputOptions {
  std::string out;
  std::string summary;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--out,-o", o.out, "CSV output file (default: stdout)");
  cmd->add_option("--summary", o.summary, "write a JSON run summary to this file");
}

void add_workers_option(CLI::App* cmd, int& workers) {
  cmd->add_option("--workers,-j", workers, "worker threads (default: $DICKE_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
}

void add_physical_options(CLI::App* cmd, PointOptions& o) {
  auto* group = cmd->add_option_group("physical units", "give omega, delta and coupling instead of --alpha/--d");
  group->add_option("--omega", o.omega, "oscillator frequency");
  group->add_option("--delta", o.delta, "qubit splitting");
  group->add_option("--coupling", o.coupling, "coupling lambda");
}

void add_point_options(CLI::App* cmd, PointOptions& o, std::string alpha_default, std::string n_default,
                       bool with_grid) {
  o.alpha = std::move(alpha_default);
  o.n_list = std::move(n_default);
  cmd->add_option("--d", o.d_ratio, "D = 2 delta / omega")->capture_default_str();
  cmd->add_option("--alpha,-a", o.alpha, "start:stop:step (inclusive) or comma list")->capture_default_str();
  auto* n = cmd->add_option("--n,-n", o.n_list, "qubit counts, comma list (2^k allowed)")->capture_default_str();
  cmd->add_option("--n-range", o.n_range, "dyadic ladder lo:hi, i.e. N = 2^lo .. 2^hi")->excludes(n);
  cmd->add_option("--tol", o.tolerance, "energy refinement tolerance")->capture_default_str();
  if (with_grid) {
    cmd->add_option("--q-max", o.q_max, "fixed grid half-width (with --points)");
    cmd->add_option("--points", o.points, "fixed starting grid size, odd, >= 201 (with --q-max)");
  }
  add_physical_options(cmd, o);
}

struct Resolved {
  std::vector<double> alphas;
  std::vector<int> n_values;
  double d_ratio = 10.0;
  SweepConfig config;
};

// Applies physical-unit overrides and checks every point against the model's
// preconditions before anything is solved.
Resolved resolve(const PointOptions& o, const CLI::App* cmd) {
  Resolved r;
  r.n_values = o.n_range.empty() ? parse_n_list(o.n_list) : parse_n_range(o.n_range);
  const bool physical = o.omega || o.delta || o.coupling;
  if (physical) {
    if (!(o.omega && o.delta && o.coupling)) {
      throw UsageError("--omega, --delta and --coupling must be given together");
    }
    if (cmd->count("--alpha") || cmd->count("--d")) {
      throw UsageError("physical-unit flags cannot be combined with --alpha or --d");
    }
    const DimensionlessParams p = reduce(ModelParams{*o.omega, *o.delta, *o.coupling, r.n_values.front()});
    r.d_ratio = p.d_ratio;
    r.alphas = {p.alpha};
  } else {
    r.d_ratio = o.d_ratio;
    r.alphas = parse_alpha_spec(o.alpha);
  }
  if (!(o.tolerance > 0.0 && o.tolerance < 1.0)) throw UsageError("--tol must lie in (0, 1)");
  for (int n : r.n_values) {
    for (double a : r.alphas) (void)DimensionlessParams::from_alpha(a, r.d_ratio, n);
  }

  r.config.alphas = r.alphas;
  r.config.n_values = r.n_values;
  r.config.d_ratio = r.d_ratio;
  r.config.tolerance = o.tolerance;
  if (o.q_max || o.points) {
    if (!(o.q_max && o.points)) throw UsageError("--q-max and --points must be given together");
    GridSpec grid{*o.q_max, *o.points};
    grid.validate();
    r.config.grid = grid;
  }
  return r;
}

// --- output --------------------------------------------------------------------

class Output {
 public:
  Output(const OutputOptions& opts, std::ostream& fallback) : opts_(opts), stream_(&fallback) {
    if (!opts.out.empty()) {
      file_.open(opts.out, std::ios::binary | std::ios::trunc);
      if (!file_) throw UsageError("cannot open output file '" + opts.out + "'");
      stream_ = &file_;
    }
  }

  std::ostream& csv() { return *stream_; }

  void write_summary(const json& summary) const {
    if (opts_.summary.empty()) return;
    std::ofstream f(opts_.summary, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open summary file '" + opts_.summary + "'");
    f << summary.dump(2) << '\n';
  }

 private:
  const OutputOptions& opts_;
  std::ostream* stream_;
  std::ofstream file_;
};

void write_csv_row(std::ostream& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out << ',';
    out << c;
    first = false;
  }
  out << "\r\n";
}

json non_converged(std::span<const SweepRow> rows) {
  json list = json::array();
  for (const auto& r : rows) {
    if (!r.converged) list.push_back({{"alpha", r.alpha}, {"n_qubits", r.n_qubits}});
  }
  return list;
}

json config_json(const Resolved& r) {
  json j;
  j["d_ratio"] = r.d_ratio;
  j["alphas"] = r.alphas;
  j["n_qubits"] = r.n_values;
  j["tolerance"] = r.config.tolerance;
  if (r.config.grid) j["grid"] = {{"q_max", r.config.grid->q_max}, {"points", r.config.grid->num_points}};
  return j;
}

int finish_rows(const char* command, const Resolved& r, std::span<const SweepRow> rows, const Output& output,
                std::ostream& err) {
  const json failed = non_converged(rows);
  const int code = failed.empty() ? kExitOk : kExitNumerical;
  json summary;
  summary["command"] = command;
  summary["config"] = config_json(r);
  summary["rows"] = rows.size();
  summary["non_converged"] = failed;
  summary["exit_code"] = code;
  output.write_summary(summary);
  if (!failed.empty()) err << "dicke " << command << ": " << failed.size() << " point(s) did not converge\n";
  return code;
}

// --- subcommands -----------------------------------------------------------------

int cmd_sweep(const Resolved& r, const OutputOptions& o, std::ostream& out, std::ostream& err) {
  Output output(o, out);
  const auto rows = run_sweep(r.config);
  write_sweep_csv(output.csv(), rows);
  return finish_rows("sweep", r, rows, output, err);
}

int cmd_solve(const Resolved& r, const OutputOptions& o, const std::string& wavefunction_path, std::ostream& out,
              std::ostream& err) {
  if (r.alphas.size() != 1 || r.n_values.size() != 1) {
    throw UsageError("solve takes exactly one alpha and one N (use sweep for more)");
  }
  Output output(o, out);
  const SweepRow row = solve_point(r.alphas[0], r.n_values[0], r.config);
  const std::vector<SweepRow> rows{row};
  write_sweep_csv(output.csv(), rows);
  if (!wavefunction_path.empty()) {
    // Re-solve without the purity refinement so the exported level matches
    // the energy's fine grid.
    const auto p = DimensionlessParams::from_alpha(r.alphas[0], r.d_ratio, r.n_values[0]);
    SolverOptions options;
    options.tolerance = r.config.tolerance;
    const GroundState gs = r.config.grid ? solve_ground(full_profile(p), *r.config.grid, options)
                                         : solve_ground(full_profile(p), options);
    std::ofstream f(wavefunction_path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open wavefunction file '" + wavefunction_path + "'");
    f << "q,phi\r\n";
    const WaveFunction& wf = gs.wavefunction();
    for (std::size_t i = 0; i < wf.values.size(); ++i) {
      f << format_double(wf.grid.node(i)) << ',' << format_double(wf.values[i]) << "\r\n";
    }
  }
  return finish_rows("solve", r, rows, output, err);
}

int cmd_entanglement(const Resolved& r, const OutputOptions& o, std::ostream& out, std::ostream& err) {
  Output output(o, out);
  const auto rows = run_sweep(r.config);
  auto& csv = output.csv();
  write_csv_row(csv, {"alpha", "n_qubits", "d_ratio", "tau1", "tau_n", "purity", "eta", "quadrature_error",
                      "tau_infinity", "converged"});
  for (const auto& row : rows) {
    const TangleResult& t = row.tangle;
    write_csv_row(csv, {format_double(row.alpha), std::to_string(row.n_qubits), format_double(row.d_ratio),
                        format_double(t.tau1), format_double(t.tau_n), format_double(t.purity), format_double(t.eta),
                        format_double(t.quadrature_error), format_double(tau_infinity(row.alpha, row.d_ratio)),
                        row.converged ? "1" : "0"});
  }
  return finish_rows("entanglement", r, rows, output, err);
}

int cmd_limit(const Resolved& r, const OutputOptions& o, std::ostream& out) {
  Output output(o, out);
  auto& csv = output.csv();
  write_csv_row(csv, {"alpha", "d_ratio", "phase", "sx_per_n", "sx2_per_n2", "sy2_per_n2", "sz2_per_n2",
                      "order_param", "e0_per_n", "tau_infinity"});
  for (double a : r.alphas) {
    const ThermoObservables t = thermo_limit(a, r.d_ratio);
    write_csv_row(csv, {format_double(a), format_double(r.d_ratio), a <= 1.0 ? "normal" : "superradiant",
                        format_double(t.sx_per_n), format_double(t.sx2_per_n2), format_double(t.sy2_per_n2),
                        format_double(t.sz2_per_n2), format_double(t.order_param), format_double(t.e0_per_n),
                        format_double(t.tau_infinity)});
  }
  json summary;
  summary["command"] = "limit";
  summary["d_ratio"] = r.d_ratio;
  summary["alphas"] = r.alphas;
  summary["exit_code"] = kExitOk;
  output.write_summary(summary);
  return kExitOk;
}

int cmd_quartic(double tolerance, const OutputOptions& o, std::ostream& out) {
  if (!(tolerance > 0.0 && tolerance < 1.0)) throw UsageError("--tol must lie in (0, 1)");
  Output output(o, out);
  const QuarticConstants c = quartic_constants(tolerance);
  write_csv_row(output.csv(), {"beta0", "beta0_error", "beta1", "beta1_error", "k_const", "k_error", "beta1_slope"});
  write_csv_row(output.csv(), {format_double(c.beta0), format_double(c.beta0_error), format_double(c.beta1),
                               format_double(c.beta1_error), format_double(c.k_const), format_double(c.k_error),
                               format_double(c.beta1_slope)});
  json summary;
  summary["command"] = "quartic";
  summary["tolerance"] = tolerance;
  summary["beta0"] = {{"value", c.beta0}, {"error", c.beta0_error}};
  summary["beta1"] = {{"value", c.beta1}, {"error", c.beta1_error}, {"slope", c.beta1_slope}};
  summary["k_const"] = {{"value", c.k_const}, {"error", c.k_error}};
  summary["exit_code"] = kExitOk;
  output.write_summary(summary);
  return kExitOk;
}

struct FitSpec {
  std::string column;
  FitTransform transform;
};

FitSpec parse_fit(std::string_view text) {
  const std::size_t eq = text.find('=');
  FitSpec f;
  f.column = std::string(trim(text.substr(0, eq)));
  f.transform = eq == std::string_view::npos ? FitTransform::value() : FitTransform::parse(trim(text.substr(eq + 1)));
  SweepRow probe;
  (void)column_value(probe, f.column);  // rejects unknown names
  return f;
}

int cmd_scaling_fit(Resolved r, const std::vector<std::string>& fit_texts, const std::string& points_path,
                    const OutputOptions& o, std::ostream& out, std::ostream& err) {
  std::vector<FitSpec> fits;
  for (const auto& t : fit_texts) fits.push_back(parse_fit(t));
  if (fits.empty()) {
    fits = {{"sx_per_n", FitTransform::deviation_from(-1.0)}, {"e0_per_nd", FitTransform::value()}};
  }
  r.config.with_entanglement = std::any_of(fits.begin(), fits.end(), [](const FitSpec& f) {
    return f.column == "tau_n" || f.column == "purity";
  });

  Output output(o, out);
  const auto rows = run_sweep(r.config);
  if (!points_path.empty()) {
    std::ofstream f(points_path, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open points file '" + points_path + "'");
    write_sweep_csv(f, rows);
  }

  auto& csv = output.csv();
  write_csv_row(csv, {"observable", "transform", "alpha", "d_ratio", "exponent", "prefactor", "r_squared", "n_min",
                      "n_max", "points"});
  json fit_list = json::array();
  for (const auto& fit : fits) {
    for (double a : r.alphas) {
      std::vector<SweepRow> subset;
      std::copy_if(rows.begin(), rows.end(), std::back_inserter(subset),
                   [a](const SweepRow& row) { return row.alpha == a; });
      const auto pts = scaling_points(subset, fit.column);
      const FitResult res = fit_exponent(pts, fit.transform);
      write_csv_row(csv, {fit.column, fit.transform.label(), format_double(a), format_double(r.d_ratio),
                          format_double(res.exponent), format_double(res.prefactor), format_double(res.r_squared),
                          std::to_string(res.n_min), std::to_string(res.n_max), std::to_string(res.points)});
      fit_list.push_back({{"observable", fit.column},
                          {"transform", fit.transform.label()},
                          {"alpha", a},
                          {"exponent", res.exponent},
                          {"prefactor", res.prefactor},
                          {"r_squared", res.r_squared}});
    }
  }
  const json failed = non_converged(rows);
  const int code = failed.empty() ? kExitOk : kExitNumerical;
  json summary;
  summary["command"] = "scaling-fit";
  summary["config"] = config_json(r);
  summary["fits"] = fit_list;
  summary["non_converged"] = failed;
  summary["exit_code"] = code;
  output.write_summary(summary);
  if (!failed.empty()) err << "dicke scaling-fit: " << failed.size() << " point(s) did not converge\n";
  return code;
}

int cmd_validate(const OutputOptions& o, std::ostream& out) {
  Output output(o, out);
  auto& stream = output.csv();
  const auto results = run_validation([&](const CheckResult& c) {
    stream << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n' << std::flush;
  });
  const auto passed = std::count_if(results.begin(), results.end(), [](const CheckResult& c) { return c.passed; });
  stream << passed << '/' << results.size() << " checks passed\n";
  json summary;
  summary["command"] = "validate";
  json checks = json::array();
  for (const auto& c : results) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  summary["checks"] = checks;
  const int code = passed == static_cast<long>(results.size()) ? kExitOk : kExitNumerical;
  summary["exit_code"] = code;
  output.write_summary(summary);
  return code;
}

void apply_workers(int workers) {
  if (workers == 0) {
    if (const char* env = std::getenv("DICKE_WORKERS"); env && *env) {
      const long long v = to_int(trim(env), "DICKE_WORKERS");
      if (v < 1 || v > 4096) throw UsageError("DICKE_WORKERS must be a positive thread count");
      workers = static_cast<int>(v);
    }
  }
  if (workers > 0) kernels::set_worker_count(workers);
}

}  // namespace

std::vector<double> parse_alpha_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw std::invalid_argument("alpha range must be start:stop:step");
    const double start = to_double(parts[0], "alpha start");
    const double stop = to_double(parts[1], "alpha stop");
    const double step = to_double(parts[2], "alpha step");
    if (!(step > 0.0)) throw std::invalid_argument("alpha step must be positive");
    if (stop < start) throw std::invalid_argument("alpha stop must not be below start");
    const double span = (stop - start) / step;
    double count = std::floor(span);
    if (std::abs(span - std::round(span)) <= 1e-9 * std::max(1.0, span)) count = std::round(span);
    if (count > 1e6) throw std::invalid_argument("alpha range has more than a million points");
    std::vector<double> values;
    for (long long i = 0; i <= static_cast<long long>(count); ++i) {
      // Snap to 1e-12 so that 0:2:0.05 gives 0.15 rather than 0.15000000000000002.
      values.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return values;
  }
  std::vector<double> values;
  for (auto part : split(spec, ',')) values.push_back(to_double(part, "alpha"));
  return values;
}

std::vector<int> parse_n_list(std::string_view spec) {
  std::vector<int> ns;
  for (auto part : split(trim(spec), ',')) {
    long long v = 0;
    if (part.starts_with("2^")) {
      const long long k = to_int(part.substr(2), "N exponent");
      if (k < 0 || k > 30) throw std::invalid_argument("N exponent must lie in 0..30");
      v = 1LL << k;
    } else {
      v = to_int(part, "N");
    }
    if (v < 1) throw std::invalid_argument("N must be >= 1, got " + std::to_string(v));
    if (v > (1LL << 30)) throw std::invalid_argument("N must be <= 2^30");
    ns.push_back(static_cast<int>(v));
  }
  return ns;
}

std::vector<int> parse_n_range(std::string_view spec) {
  const auto parts = split(trim(spec), ':');
  if (parts.size() != 2) throw std::invalid_argument("N range must be lo:hi");
  const long long lo = to_int(parts[0], "N range start");
  const long long hi = to_int(parts[1], "N range end");
  if (lo < 0 || hi > 30 || lo > hi) throw std::invalid_argument("N range needs 0 <= lo <= hi <= 30");
  return dyadic_ladder(static_cast<int>(lo), static_cast<int>(hi));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ground state, observables and entanglement of the adiabatic Dicke model", "dicke"};
  app.require_subcommand(1);
  app.fallthrough(false);

  int workers = 0;
  OutputOptions out_opts;

  PointOptions solve_opts, sweep_opts, ent_opts, fit_opts, limit_opts;
  std::string wavefunction_path, points_path;
  std::vector<std::string> fit_texts;
  double quartic_tol = 1e-8;

  auto* solve = app.add_subcommand("solve", "one (alpha, N) point, all observables as one CSV row");
  add_point_options(solve, solve_opts, "1", "64", true);
  solve->add_option("--wavefunction", wavefunction_path, "write q,phi of the finest grid to this file");

  auto* sweep = app.add_subcommand("sweep", "observables over an (alpha, N) grid");
  add_point_options(sweep, sweep_opts, "0:2:0.05", "4,16,64,256", true);

  auto* quartic = app.add_subcommand("quartic", "constants beta0, beta1, K of -d^2/dq^2 + q^4");
  quartic->add_option("--tol", quartic_tol, "energy refinement tolerance")->capture_default_str();

  auto* fit = app.add_subcommand("scaling-fit", "power-law exponents along an N ladder");
  add_point_options(fit, fit_opts, "1", "", true);
  fit_opts.n_range = "6:16";
  fit->get_option("--n-range")->default_str("6:16");
  fit->add_option("--fit", fit_texts,
                  "column[=value|deviation:<a>], repeatable (default: sx_per_n=deviation:-1, e0_per_nd=value)");
  fit->add_option("--points-out", points_path, "also write the underlying sweep CSV");

  auto* ent = app.add_subcommand("entanglement", "tau1, tau_N and purity over an (alpha, N) grid");
  add_point_options(ent, ent_opts, "0:2:0.05", "4,16,64,256", true);

  auto* limit = app.add_subcommand("limit", "N -> infinity closed forms");
  limit_opts.alpha = "0:2:0.05";
  limit_opts.n_list = "1";
  limit->add_option("--d", limit_opts.d_ratio, "D = 2 delta / omega")->capture_default_str();
  limit->add_option("--alpha,-a", limit_opts.alpha, "start:stop:step (inclusive) or comma list")
      ->capture_default_str();
  add_physical_options(limit, limit_opts);

  auto* validate = app.add_subcommand("validate", "run the invariant suite; nonzero exit on any failure");

  for (auto* cmd : {solve, sweep, quartic, fit, ent, limit, validate}) {
    add_output_options(cmd, out_opts);
    add_workers_option(cmd, workers);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "dicke: " << e.what() << "\n";
    const auto sub = app.get_subcommands();
    err << (sub.empty() ? app.help() : sub.front()->help());
    return kExitUsage;
  }

  // Sub-command help flags are handled inside parse via CallForHelp as well.
  try {
    apply_workers(workers);
    if (*solve) {
      // A user-supplied --n-range on solve makes a ladder; solve rejects it below.
      return cmd_solve(resolve(solve_opts, solve), out_opts, wavefunction_path, out, err);
    }
    if (*sweep) return cmd_sweep(resolve(sweep_opts, sweep), out_opts, out, err);
    if (*ent) return cmd_entanglement(resolve(ent_opts, ent), out_opts, out, err);
    if (*fit) {
      if (fit->count("--n")) fit_opts.n_range.clear();
      return cmd_scaling_fit(resolve(fit_opts, fit), fit_texts, points_path, out_opts, out, err);
    }
    if (*limit) return cmd_limit(resolve(limit_opts, limit), out_opts, out);
    if (*quartic) return cmd_quartic(quartic_tol, out_opts, out);
    if (*validate) return cmd_validate(out_opts, out);
  } catch (const std::invalid_argument& e) {
    err << "dicke: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "dicke: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace dicke::cli
