#pragma once

#include <functional>
#include <vector>

namespace dicke {

/// Physical parameters of the Hamiltonian
///   H = omega a^+ a + delta S_x + coupling (a^+ + a) S_z / sqrt(N).
struct ModelParams {
  double omega = 1.0;
  double delta = 1.0;
  double coupling = 0.0;
  int n_qubits = 1;

  /// Throws std::invalid_argument when omega, delta or N are non-positive
  /// or the coupling is negative.
  void validate() const;
};

/// Reduced parameters: D = 2 delta / omega, L = 2 sqrt(2) coupling / omega,
/// alpha = L^2 / (2 D), nd = N D.
struct DimensionlessParams {
  double d_ratio = 1.0;
  double l_coupling = 0.0;
  double alpha = 0.0;
  double nd = 1.0;

  /// Build from (alpha, D, N); L is derived as sqrt(2 alpha D).
  static DimensionlessParams from_alpha(double alpha, double d_ratio, int n_qubits);

  int n_qubits() const;
};

DimensionlessParams reduce(const ModelParams& params);

/// Theta(q) = sqrt(D^2 + L^2 q^2 / N).
double theta(double q, const DimensionlessParams& p, int n_qubits);

struct Amplitudes {
  double plus = 1.0;
  double minus = 1.0;
};

/// A_pm(q) = sqrt(1 +- L q / (sqrt(N) Theta(q))).
Amplitudes adiabatic_amplitudes(double q, const DimensionlessParams& p, int n_qubits);

/// Per-qubit mixing angle: cos = D / Theta, sin = L q / (sqrt(N) Theta).
/// Depends on (alpha, nd) only.
double mixing_angle(double q, const DimensionlessParams& p);

/// U0(q) / (omega / 2) = q^2 - N Theta(q).
double effective_potential(double q, const DimensionlessParams& p, int n_qubits);

/// effective_potential + ND, evaluated without the N Theta - ND cancellation:
///   q^2 - 2 alpha ND q^2 / (ND + sqrt(ND^2 + 2 alpha ND q^2)).
double shifted_potential(double q, const DimensionlessParams& p);

/// Quartic expansion of shifted_potential: (1 - alpha) q^2 + alpha^2 q^4 / (2 ND).
double quartic_potential(double q, const DimensionlessParams& p);

using PotentialProfile = std::function<double(double)>;

PotentialProfile full_profile(const DimensionlessParams& p);
PotentialProfile quartic_profile(const DimensionlessParams& p);

/// {0} for alpha <= 1, otherwise {-Q0, +Q0} with Q0 = sqrt(N) D sqrt(alpha^2 - 1) / L.
std::vector<double> well_minima(const DimensionlessParams& p, int n_qubits);

/// N -> infinity values; energies in the reduced unit E = 2 eps / omega.
struct ThermoObservables {
  double sx_per_n = -1.0;
  double sx2_per_n2 = 1.0;
  double sz2_per_n2 = 0.0;
  double sy2_per_n2 = 0.0;
  double order_param = 0.0;
  double e0_per_n = 0.0;
  double tau_infinity = 0.0;
};

enum class Phase { kNormal, kSuperradiant };

/// Piecewise closed forms; alpha == 1 belongs to the normal branch.
ThermoObservables thermo_limit(double alpha, double d_ratio);

/// One branch of thermo_limit evaluated regardless of alpha.
ThermoObservables thermo_branch(double alpha, double d_ratio, Phase phase);

}  // namespace dicke
