#include "dicke/entanglement.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "dicke/kernels.hpp"
#include "dicke/observables.hpp"

namespace dicke {

namespace {

struct PurityInput {
  std::vector<double> weights;
  std::vector<double> angles;
};

// stride 2 keeps every other node (spacing 2h) for the quadrature check.
PurityInput purity_input(const WaveFunction& wf, const DimensionlessParams& p, std::size_t stride) {
  PurityInput in;
  const double h = wf.grid.spacing() * static_cast<double>(stride);
  const std::size_t c = wf.grid.center();
  // Keep the node set symmetric about q = 0.
  const std::size_t first = c % stride;
  for (std::size_t i = first; i < wf.values.size(); i += stride) {
    const double v = wf.values[i];
    const double w = v * v * h;
    if (w < 1e-300) continue;
    in.weights.push_back(w);
    in.angles.push_back(mixing_angle(wf.grid.node(i), p));
  }
  return in;
}

double purity_with_stride(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits,
                          std::size_t stride) {
  const PurityInput in = purity_input(wf, p, stride);
  return kernels::purity_sum_parallel(in.weights, in.angles, static_cast<double>(n_qubits));
}

}  // namespace

double tau_one(double sx_per_n) { return 1.0 - sx_per_n * sx_per_n; }

double qubit_overlap(double q, double q_prime, const DimensionlessParams& p) {
  return std::exp(kernels::log_overlap(mixing_angle(q, p) - mixing_angle(q_prime, p)));
}

double purity_qubits(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits) {
  return purity_with_stride(wf, p, n_qubits, 1);
}

double purity_qubits_reference(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits) {
  const PurityInput in = purity_input(wf, p, 1);
  return kernels::purity_sum_serial(in.weights, in.angles, static_cast<double>(n_qubits));
}

double tangle_normalization(int n_qubits) {
  return 1.0 / (1.0 - std::ldexp(1.0, -n_qubits));
}

double QubitState::purity() const {
  return plus_plus * plus_plus + minus_minus * minus_minus + 2.0 * plus_minus * plus_minus;
}

QubitState single_qubit_state(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits) {
  // |chi> = (A_- |+> - A_+ |->) / sqrt(2)
  QubitState s{0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < wf.values.size(); ++i) {
    const double w = wf.weight(i) * wf.values[i] * wf.values[i];
    if (w == 0.0) continue;
    const Amplitudes a = adiabatic_amplitudes(wf.grid.node(i), p, n_qubits);
    s.plus_plus += 0.5 * w * a.minus * a.minus;
    s.minus_minus += 0.5 * w * a.plus * a.plus;
    s.plus_minus -= 0.5 * w * a.minus * a.plus;
  }
  return s;
}

TangleResult tau_n(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits) {
  TangleResult r;
  r.eta = tangle_normalization(n_qubits);
  r.purity = purity_qubits(wf, p, n_qubits);
  r.quadrature_error = std::abs(r.purity - purity_with_stride(wf, p, n_qubits, 2));
  r.tau_n = r.eta * (1.0 - r.purity);
  r.tau1 = tau_one(-phi_nu(wf, -0.5, p));
  return r;
}

TangleResult tangles(const GroundState& state, const DimensionlessParams& p, int n_qubits) {
  TangleResult r;
  r.eta = tangle_normalization(n_qubits);
  const double fine = purity_qubits(state.fine.wavefunction, p, n_qubits);
  const double coarse = purity_qubits(state.coarse.wavefunction, p, n_qubits);
  r.purity = (4.0 * fine - coarse) / 3.0;
  r.quadrature_error = std::abs(fine - purity_with_stride(state.fine.wavefunction, p, n_qubits, 2));
  r.tau_n = r.eta * (1.0 - r.purity);
  const double sx = -extrapolate(state, [&](const WaveFunction& wf) { return phi_nu(wf, -0.5, p); });
  r.tau1 = tau_one(sx);
  return r;
}

double tau_infinity(double alpha, double d_ratio) {
  return thermo_limit(alpha, d_ratio).tau_infinity;
}

double tau_n_critical_prediction(int n_qubits, double d_ratio, double k_const) {
  return 1.0 - std::sqrt(std::numbers::pi) * k_const /
                   (std::cbrt(2.0 * d_ratio) * std::pow(static_cast<double>(n_qubits), 1.0 / 6.0));
}

double critical_purity_asymptote(int n_qubits, double d_ratio, double k_const) {
  return std::sqrt(std::numbers::pi) * k_const * std::cbrt(2.0 * d_ratio) /
         std::pow(static_cast<double>(n_qubits), 1.0 / 6.0);
}

}  // namespace dicke
