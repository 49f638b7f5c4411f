#include "dicke/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dicke {

namespace {

template <class Integrand>
double quadrature(const WaveFunction& wf, Integrand&& integrand) {
  double s = 0.0;
  for (std::size_t i = 0; i < wf.values.size(); ++i) {
    const double v = wf.values[i];
    s += wf.weight(i) * v * v * integrand(wf.grid.node(i));
  }
  return s;
}

void fill_spin(ObservableSet& obs, int n_qubits) {
  const double inv_n = 1.0 / static_cast<double>(n_qubits);
  obs.sx_per_n = -obs.phi.minus_half;
  obs.sx2_per_n2 = inv_n + (1.0 - inv_n) * obs.phi.minus_one;
  obs.sz2_per_n2 = (1.0 + inv_n) - obs.sx2_per_n2;
  obs.sy2_per_n2 = inv_n;
}

}  // namespace

PotentialProfile profile_for(const DimensionlessParams& p, PotentialKind kind) {
  return kind == PotentialKind::kFull ? full_profile(p) : quartic_profile(p);
}

double phi_nu(const WaveFunction& wf, double nu, const DimensionlessParams& p) {
  if (nu == 0.0 || p.alpha == 0.0) return quadrature(wf, [](double) { return 1.0; });
  const double c = 2.0 * p.alpha / p.nd;
  return quadrature(wf, [c, nu](double q) { return std::pow(1.0 + c * q * q, nu); });
}

double phi_half_excess(const WaveFunction& wf, const DimensionlessParams& p) {
  const double c = 2.0 * p.alpha / p.nd;
  return quadrature(wf, [c](double q) {
    const double x = c * q * q;
    return x / (1.0 + std::sqrt(1.0 + x));
  });
}

double moment(const WaveFunction& wf, int k) {
  if (k < 0) throw std::invalid_argument("moment order must be non-negative");
  if (k % 2 != 0) return 0.0;
  return quadrature(wf, [k](double q) { return std::pow(q, k); });
}

double momentum_variance(const WaveFunction& wf) {
  const double h = wf.grid.spacing();
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < wf.values.size(); ++i) {
    const double d = wf.values[i + 1] - wf.values[i];
    s += d * d;
  }
  return s / h;
}

ObservableSet spin_observables(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits) {
  ObservableSet obs;
  obs.alpha = p.alpha;
  obs.n_qubits = n_qubits;
  obs.d_ratio = p.d_ratio;
  obs.phi.minus_one = phi_nu(wf, -1.0, p);
  obs.phi.minus_half = phi_nu(wf, -0.5, p);
  obs.phi.plus_half = 1.0 + phi_half_excess(wf, p);
  fill_spin(obs, n_qubits);
  return obs;
}

ObservableSet assemble_observables(const GroundState& state, const DimensionlessParams& p, int n_qubits,
                                   PotentialKind kind) {
  ObservableSet obs;
  obs.alpha = p.alpha;
  obs.n_qubits = n_qubits;
  obs.d_ratio = p.d_ratio;
  obs.converged = state.converged;
  obs.refinement_error = state.refinement_error;

  obs.phi.minus_one = extrapolate(state, [&](const WaveFunction& wf) { return phi_nu(wf, -1.0, p); });
  obs.phi.minus_half = extrapolate(state, [&](const WaveFunction& wf) { return phi_nu(wf, -0.5, p); });
  const double excess = extrapolate(state, [&](const WaveFunction& wf) { return phi_half_excess(wf, p); });
  obs.phi.plus_half = 1.0 + excess;
  fill_spin(obs, n_qubits);

  obs.q2 = extrapolate(state, [](const WaveFunction& wf) { return moment(wf, 2); });
  obs.q4 = extrapolate(state, [](const WaveFunction& wf) { return moment(wf, 4); });
  obs.p2 = extrapolate(state, [](const WaveFunction& wf) { return momentum_variance(wf); });
  obs.order_param = (obs.p2 + obs.q2) / static_cast<double>(n_qubits);

  obs.e0_shifted = state.energy;
  obs.e0_reduced = state.energy - p.nd;
  if (kind == PotentialKind::kFull) {
    obs.bookkeeping_residual = std::abs(obs.e0_shifted - (obs.p2 + obs.q2 - p.nd * excess));
  }
  return obs;
}

ObservableSet full_observables(const DimensionlessParams& p, int n_qubits, double tolerance,
                               PotentialKind kind) {
  SolverOptions options;
  options.tolerance = tolerance;
  const GroundState state = solve_ground(profile_for(p, kind), options);
  ObservableSet obs = assemble_observables(state, p, n_qubits, kind);
  if (obs.bookkeeping_residual > 10.0 * tolerance * std::max(1.0, std::abs(obs.e0_reduced))) {
    throw std::runtime_error("energy bookkeeping identity violated: residual " +
                             std::to_string(obs.bookkeeping_residual));
  }
  return obs;
}

FeynmanHellmannReport feynman_hellmann_check(const DimensionlessParams& p, double step, double tolerance) {
  SolverOptions options;
  options.tolerance = tolerance;
  const GroundState center = solve_ground(quartic_profile(p), options);
  const double q2 = extrapolate(center, [](const WaveFunction& wf) { return moment(wf, 2); });
  const double q4 = extrapolate(center, [](const WaveFunction& wf) { return moment(wf, 4); });

  // e0 = E0 + ND on the grids of the centre solve.
  const auto energy = [&](double alpha, double nd) {
    DimensionlessParams shifted = p;
    shifted.alpha = alpha;
    shifted.nd = nd;
    return solve_like(quartic_profile(shifted), center).energy;
  };
  const double e_center = center.energy;

  FeynmanHellmannReport r;
  const auto d_alpha = [&](double h) {
    if (p.alpha - h < 0.0) {
      return (-3.0 * e_center + 4.0 * energy(p.alpha + h, p.nd) - energy(p.alpha + 2.0 * h, p.nd)) /
             (2.0 * h);
    }
    return (energy(p.alpha + h, p.nd) - energy(p.alpha - h, p.nd)) / (2.0 * h);
  };
  const auto d_nd = [&](double h) {
    return (energy(p.alpha, p.nd + h) - energy(p.alpha, p.nd - h)) / (2.0 * h);
  };
  // Near alpha = 1 the energy varies on the scale (2 ND)^{-2/3} in alpha.
  const double width = std::max(std::abs(1.0 - p.alpha), std::pow(2.0 * p.nd, -2.0 / 3.0));
  const double h_alpha = step * std::min(1.0, width);
  r.de_dalpha_fd = (4.0 * d_alpha(0.5 * h_alpha) - d_alpha(h_alpha)) / 3.0;
  const double h_nd = step * p.nd;
  r.de_dnd_fd = (4.0 * d_nd(0.5 * h_nd) - d_nd(h_nd)) / 3.0 - 1.0;

  r.de_dalpha_expect = -q2 + p.alpha / p.nd * q4;
  r.de_dnd_expect = -1.0 - p.alpha * p.alpha / (2.0 * p.nd * p.nd) * q4;
  r.residual_alpha = std::abs(r.de_dalpha_fd - r.de_dalpha_expect) / std::max(1.0, std::abs(r.de_dalpha_expect));
  r.residual_nd = std::abs(r.de_dnd_fd - r.de_dnd_expect) / std::max(1.0, std::abs(r.de_dnd_expect));
  return r;
}

std::vector<double> moment_recursion_residuals(const GroundState& critical, double nd, double beta0,
                                               int k_max) {
  const double x = 2.0 * nd;
  const double x13 = std::cbrt(x);
  const double x23 = x13 * x13;
  const auto mom = [&](int k) {
    if (k < 0) return 0.0;
    return extrapolate(critical, [k](const WaveFunction& wf) { return moment(wf, k); });
  };
  std::vector<double> residuals;
  for (int k = 0; k <= k_max; k += 2) {
    const double kd = k;
    const double lhs = mom(k + 4) / x23;
    const double rhs = (kd + 1.0) / (kd + 3.0) * beta0 * mom(k) +
                       kd * (kd * kd - 1.0) / (4.0 * (kd + 3.0)) * x13 * mom(k - 2);
    residuals.push_back(std::abs(lhs - rhs) / std::abs(lhs));
  }
  return residuals;
}

std::vector<double> moments_from_recursion(double q2, double nd, double beta0, int k_max) {
  const double x = 2.0 * nd;
  const double x13 = std::cbrt(x);
  const double x23 = x13 * x13;
  std::vector<double> m(static_cast<std::size_t>(k_max / 2 + 1), 0.0);
  m[0] = 1.0;
  if (m.size() > 1) m[1] = q2;
  for (std::size_t idx = 2; idx < m.size(); ++idx) {
    // <Q^{k+4}> with k = 2 (idx - 2)
    const double kd = 2.0 * static_cast<double>(idx - 2);
    const double lower = idx >= 3 ? m[idx - 3] : 0.0;
    m[idx] = x23 * ((kd + 1.0) / (kd + 3.0) * beta0 * m[idx - 2] +
                    kd * (kd * kd - 1.0) / (4.0 * (kd + 3.0)) * x13 * lower);
  }
  return m;
}

}  // namespace dicke
