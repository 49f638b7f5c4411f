#include "dicke/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <utility>

namespace dicke {

namespace {

using Task = std::pair<int, double>;  // (n_qubits, alpha)

std::vector<Task> ordered_tasks(const SweepConfig& config) {
  std::vector<int> ns = config.n_values;
  std::vector<double> alphas = config.alphas;
  std::sort(ns.begin(), ns.end());
  std::sort(alphas.begin(), alphas.end());
  std::vector<Task> tasks;
  tasks.reserve(ns.size() * alphas.size());
  for (int n : ns) {
    for (double a : alphas) tasks.emplace_back(n, a);
  }
  return tasks;
}

// A fixed user grid can clip the wavefunction; the refinement loop cannot
// notice that because every level shares the same box.
bool fits_domain(const WaveFunction& wf) {
  double peak = 0.0;
  for (double v : wf.values) peak = std::max(peak, std::abs(v));
  const std::size_t n = wf.values.size();
  const double edge = std::max(std::abs(wf.values[1]), std::abs(wf.values[n - 2]));
  return edge <= kBoundaryAmplitudeTolerance * peak;
}

}  // namespace

SweepRow solve_point(double alpha, int n_qubits, const SweepConfig& config) {
  const DimensionlessParams p = DimensionlessParams::from_alpha(alpha, config.d_ratio, n_qubits);
  const PotentialProfile profile = full_profile(p);
  SolverOptions options;
  options.tolerance = config.tolerance;

  GroundState state = config.grid ? solve_ground(profile, *config.grid, options) : solve_ground(profile, options);

  SweepRow row;
  row.alpha = alpha;
  row.n_qubits = n_qubits;
  row.d_ratio = config.d_ratio;
  bool quadrature_ok = true;
  if (config.with_entanglement) {
    for (int attempt = 0;; ++attempt) {
      row.tangle = tangles(state, p, n_qubits);
      quadrature_ok = row.tangle.quadrature_error <= kPurityQuadratureTolerance;
      if (quadrature_ok || attempt == 3) break;
      state = solve_ground(profile, state.coarse.wavefunction.grid.refined(), options);
    }
  }
  row.obs = assemble_observables(state, p, n_qubits);
  if (!config.with_entanglement) {
    row.tangle.tau1 = tau_one(row.obs.sx_per_n);
    row.tangle.eta = tangle_normalization(n_qubits);
    row.tangle.purity = std::nan("");
    row.tangle.tau_n = std::nan("");
  }
  const bool bookkeeping_ok =
      row.obs.bookkeeping_residual <= 10.0 * config.tolerance * std::max(1.0, std::abs(row.obs.e0_reduced));
  row.converged = state.converged && quadrature_ok && bookkeeping_ok && fits_domain(state.wavefunction());
  return row;
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  const std::vector<Task> tasks = ordered_tasks(config);
  std::vector<SweepRow> rows(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      rows[i] = solve_point(tasks[i].second, tasks[i].first, config);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepConfig& config) {
  std::vector<SweepRow> rows;
  for (const auto& [n, alpha] : ordered_tasks(config)) rows.push_back(solve_point(alpha, n, config));
  return rows;
}

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> columns = {
      "alpha", "n_qubits", "d_ratio", "e0_reduced", "e0_per_nd", "sx_per_n",
      "sx2_per_n2", "sy2_per_n2", "sz2_per_n2", "q2", "p2", "order_param",
      "tau1", "tau_n", "phi_m1", "phi_mhalf", "phi_phalf"};
  return columns;
}

double column_value(const SweepRow& row, std::string_view column) {
  const ObservableSet& o = row.obs;
  if (column == "alpha") return row.alpha;
  if (column == "n_qubits") return row.n_qubits;
  if (column == "d_ratio") return row.d_ratio;
  if (column == "e0_reduced") return o.e0_reduced;
  // (E0 + ND) / ND
  if (column == "e0_per_nd") return o.e0_shifted / (row.d_ratio * row.n_qubits);
  if (column == "e0_shifted") return o.e0_shifted;
  if (column == "sx_per_n") return o.sx_per_n;
  if (column == "sx2_per_n2") return o.sx2_per_n2;
  if (column == "sy2_per_n2") return o.sy2_per_n2;
  if (column == "sz2_per_n2") return o.sz2_per_n2;
  if (column == "q2") return o.q2;
  if (column == "q4") return o.q4;
  if (column == "p2") return o.p2;
  if (column == "order_param") return o.order_param;
  if (column == "order_param_over_D") return o.order_param / row.d_ratio;
  if (column == "tau1") return row.tangle.tau1;
  if (column == "tau_n") return row.tangle.tau_n;
  if (column == "purity") return row.tangle.purity;
  if (column == "phi_m1") return o.phi.minus_one;
  if (column == "phi_mhalf") return o.phi.minus_half;
  if (column == "phi_phalf") return o.phi.plus_half;
  throw std::invalid_argument("unknown column '" + std::string(column) + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  const auto& columns = sweep_columns();
  for (const auto& c : columns) out << c << ',';
  out << "converged\r\n";
  for (const auto& row : rows) {
    for (const auto& c : columns) {
      if (c == "n_qubits") {
        out << row.n_qubits << ',';
      } else {
        out << format_double(column_value(row, c)) << ',';
      }
    }
    out << (row.converged ? 1 : 0) << "\r\n";
  }
}

std::vector<ScalingPoint> scaling_points(std::span<const SweepRow> rows, std::string_view column) {
  std::vector<ScalingPoint> points;
  points.reserve(rows.size());
  for (const auto& row : rows) {
    points.push_back({row.n_qubits, row.d_ratio, row.alpha, std::string(column), column_value(row, column)});
  }
  return points;
}

std::vector<int> dyadic_ladder(int lo_exponent, int hi_exponent) {
  if (lo_exponent < 0 || hi_exponent > 30 || lo_exponent > hi_exponent) {
    throw std::invalid_argument("dyadic ladder exponents must satisfy 0 <= lo <= hi <= 30");
  }
  std::vector<int> ns;
  for (int k = lo_exponent; k <= hi_exponent; ++k) ns.push_back(1 << k);
  return ns;
}

}  // namespace dicke
