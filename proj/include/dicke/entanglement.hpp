#pragma once

#include "dicke/eigensolver.hpp"
#include "dicke/model.hpp"

namespace dicke {

struct TangleResult {
  double tau1 = 0.0;    ///< single qubit vs rest
  double tau_n = 0.0;   ///< oscillator vs all qubits
  double purity = 1.0;  ///< Tr rho_N^2
  double eta = 1.0;     ///< 2^N / (2^N - 1)
  /// |purity on the full grid - purity on every other node|, fine level.
  double quadrature_error = 0.0;
};

/// tau_1 = 1 - (<S_x> / N)^2.
double tau_one(double sx_per_n);

/// Per-qubit overlap |<chi(q)|chi(q')>|^2 = (1/2)[1 + (D^2 + L^2 q q' / N) / (Theta Theta')].
double qubit_overlap(double q, double q_prime, const DimensionlessParams& p);

/// Tr rho_N^2 = double integral of phi^2(q) phi^2(q') overlap(q, q')^N,
/// tensor-product trapezoid rule with overlap^N taken as exp(N log overlap).
/// Nodes whose phi^2 h is below 1e-300 are skipped.
double purity_qubits(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits);

/// Same quadrature through the serial reference kernel (testing only).
double purity_qubits_reference(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits);

/// 2^N / (2^N - 1); exactly 1 once 2^-N underflows.
double tangle_normalization(int n_qubits);

/// Reduced state of one qubit in the sigma_z basis (real symmetric 2x2),
/// integrated from the adiabatic amplitudes.
struct QubitState {
  double plus_plus = 0.5;
  double minus_minus = 0.5;
  double plus_minus = 0.0;

  double purity() const;
};

QubitState single_qubit_state(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits);

/// tau_N from one wavefunction.
TangleResult tau_n(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits);

/// tau_N and tau_1 from a solved ground state, Richardson-extrapolated like
/// the energy.
TangleResult tangles(const GroundState& state, const DimensionlessParams& p, int n_qubits);

/// Thermodynamic-limit tangle; cusp value 1 at alpha = 1.
double tau_infinity(double alpha, double d_ratio);

/// 1 - sqrt(pi) K / ((2D)^{1/3} N^{1/6}).
double tau_n_critical_prediction(int n_qubits, double d_ratio, double k_const);

/// Leading large-N purity at alpha = 1 from the kernel expansion
/// overlap^N ~ exp(-(q - q')^2 / (2D)) with phi^2 much wider than sqrt(D):
///   Tr rho_N^2 ~ sqrt(2 pi D) * integral phi^4 = sqrt(pi) K (2D)^{1/3} / N^{1/6}.
double critical_purity_asymptote(int n_qubits, double d_ratio, double k_const);

}  // namespace dicke
