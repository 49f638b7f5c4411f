#pragma once

#include <vector>

#include "dicke/eigensolver.hpp"
#include "dicke/model.hpp"

namespace dicke {

/// Phi_nu for the three exponents the spin and energy expressions need.
struct PhiTable {
  double minus_one = 1.0;
  double minus_half = 1.0;
  double plus_half = 1.0;
};

/// Which reduced oscillator problem the ground state is taken from.
enum class PotentialKind {
  kFull,     ///< q^2 - N Theta(q) (+ ND)
  kQuartic,  ///< (1 - alpha) q^2 + alpha^2 q^4 / (2 ND)
};

PotentialProfile profile_for(const DimensionlessParams& p, PotentialKind kind);

/// Ground-state expectation values at one (alpha, N, D) point.
///
/// Energies are in E = 2 eps / omega; `e0_shifted` is E0 + ND, kept
/// separately because it is tiny compared with ND near the critical point.
struct ObservableSet {
  double alpha = 0.0;
  int n_qubits = 1;
  double d_ratio = 1.0;

  double sx_per_n = -1.0;
  double sx2_per_n2 = 1.0;
  double sy2_per_n2 = 0.0;
  double sz2_per_n2 = 0.0;
  double q2 = 0.0;
  double q4 = 0.0;
  double p2 = 0.0;
  double order_param = 0.0;
  double e0_reduced = 0.0;
  double e0_shifted = 0.0;
  PhiTable phi;

  bool converged = false;
  double refinement_error = 0.0;
  /// |e0 - (<P^2> + <Q^2> - ND Phi_{1/2})| for the full potential, 0 otherwise.
  double bookkeeping_residual = 0.0;
};

/// Trapezoid quadrature of phi^2 (1 + 2 alpha q^2 / ND)^nu.
double phi_nu(const WaveFunction& wf, double nu, const DimensionlessParams& p);

/// Phi_{1/2} - 1 without cancellation.
double phi_half_excess(const WaveFunction& wf, const DimensionlessParams& p);

/// <q^k>; odd k returns exactly 0.
double moment(const WaveFunction& wf, int k);

/// <P^2> = integral of (dphi/dq)^2 with the derivative taken at cell
/// midpoints, which is the quadratic form of the finite-difference kinetic
/// operator.
double momentum_variance(const WaveFunction& wf);

/// Spin moments from one wavefunction; fills the spin fields and phi only.
ObservableSet spin_observables(const WaveFunction& wf, const DimensionlessParams& p, int n_qubits);

/// Assembles every field from an already solved ground state, extrapolating
/// each functional with the energy's Richardson weights.
ObservableSet assemble_observables(const GroundState& state, const DimensionlessParams& p, int n_qubits,
                                   PotentialKind kind = PotentialKind::kFull);

/// Solves and assembles. Throws std::runtime_error if the energy
/// bookkeeping identity fails by more than 10 * tolerance (relative).
ObservableSet full_observables(const DimensionlessParams& p, int n_qubits, double tolerance = 1e-8,
                               PotentialKind kind = PotentialKind::kFull);

/// Feynman-Hellmann residuals on the quartic-reduced problem: centered
/// finite differences of E0 in alpha and in ND (one-sided at alpha = 0)
/// against -<Q^2> + (alpha / ND) <Q^4> and -1 - alpha^2 <Q^4> / (2 ND^2).
/// The alpha step is `step` times min(1, max(|1 - alpha|, (2 ND)^{-2/3})),
/// the ND step is `step` * ND.
struct FeynmanHellmannReport {
  double de_dalpha_fd = 0.0;
  double de_dalpha_expect = 0.0;
  double de_dnd_fd = 0.0;
  double de_dnd_expect = 0.0;
  double residual_alpha = 0.0;  ///< relative to max(1, |expectation|)
  double residual_nd = 0.0;
};

FeynmanHellmannReport feynman_hellmann_check(const DimensionlessParams& p, double step = 1e-3,
                                             double tolerance = 1e-8);

/// Checks  <Q^{k+4}> / (2ND)^{2/3} = (k+1)/(k+3) beta0 <Q^k>
///                                  + k (k^2 - 1) / (4 (k+3)) (2ND)^{1/3} <Q^{k-2}>
/// for even k = 0..k_max on a critical-point wavefunction of the
/// quartic-reduced problem. Returns the relative residual per k.
std::vector<double> moment_recursion_residuals(const GroundState& critical, double nd, double beta0,
                                               int k_max);

/// Moments <Q^0>, <Q^2>, ..., <Q^{k_max}> generated by the recursion from
/// <Q^0> = 1 and a given <Q^2>.
std::vector<double> moments_from_recursion(double q2, double nd, double beta0, int k_max);

}  // namespace dicke
