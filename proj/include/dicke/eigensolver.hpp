#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

/// Uniform symmetric grid on [-q_max, q_max] with an odd number of nodes,
/// so q = 0 is always a node. The end nodes carry the Dirichlet condition.
struct GridSpec {
  double q_max = 1.0;
  std::size_t num_points = 201;

  static constexpr std::size_t kMinPoints = 201;

  void validate() const;
  double spacing() const { return 2.0 * q_max / static_cast<double>(num_points - 1); }
  double node(std::size_t i) const;
  std::size_t center() const { return (num_points - 1) / 2; }
  /// Same domain, spacing halved.
  GridSpec refined() const { return {q_max, 2 * num_points - 1}; }
};

/// Real amplitudes on the grid nodes, normalized so that the trapezoid rule
/// gives sum(values^2) h = 1.
struct WaveFunction {
  GridSpec grid;
  std::vector<double> values;

  /// Trapezoid weight of node i.
  double weight(std::size_t i) const;
  double norm() const;
};

/// One discretization level: the lowest eigenvalue of the finite-difference
/// operator and its eigenvector.
struct GridLevel {
  double eigenvalue = 0.0;
  WaveFunction wavefunction;
};

/// Ground state of -d^2/dq^2 + V(q) in reduced units.
///
/// `energy` is the Richardson extrapolation (4 E_fine - E_coarse) / 3 of the
/// two finest levels; observables derived from the wavefunction should be
/// extrapolated the same way (see `extrapolate`).
struct GroundState {
  double energy = 0.0;
  GridLevel fine;
  GridLevel coarse;
  bool converged = false;
  double refinement_error = 0.0;
  int refinements = 0;

  const WaveFunction& wavefunction() const { return fine.wavefunction; }
};

/// Applies the energy's Richardson combination to any functional of the
/// wavefunction.
template <class Functional>
double extrapolate(const GroundState& state, Functional&& f) {
  const double fine = f(state.fine.wavefunction);
  const double coarse = f(state.coarse.wavefunction);
  return (4.0 * fine - coarse) / 3.0;
}

struct SolverOptions {
  double tolerance = 1e-8;
  int max_refinements = 8;  ///< at least 2, so that two Richardson values exist
};

/// Lowest eigenpair of a symmetric tridiagonal matrix.
struct Eigenpair {
  double value = 0.0;
  std::vector<double> vector;
};

/// Sturm-sequence bisection for the eigenvalue, inverse iteration for the
/// vector. `off` has size diag.size() - 1.
Eigenpair tridiagonal_lowest(std::span<const double> diag, std::span<const double> off);

/// Number of eigenvalues strictly below x (Sturm count).
std::size_t sturm_count(std::span<const double> diag, std::span<const double> off, double x);

/// Minimum location, depth and a ground-state length scale of an even
/// confining profile, plus a box estimate of the ground energy that sits
/// above the true value.
struct WellInfo {
  double q_min = 0.0;
  double v_min = 0.0;
  double length_scale = 1.0;
  double energy_estimate = 0.0;
};

/// Throws std::domain_error when the profile does not rise at large |q|.
WellInfo analyze_well(const PotentialProfile& potential);

/// Chooses a domain wide enough that the WKB tail beyond the turning point of
/// `reference_energy` is below 1e-9 and the boundary potential exceeds it by
/// at least 40; the initial spacing resolves the well's length scale.
GridSpec auto_grid(const PotentialProfile& potential, double reference_energy, double tolerance);

/// Solves one level on a fixed grid.
GridLevel solve_on_grid(const PotentialProfile& potential, const GridSpec& grid);

/// Refinement loop starting from `grid`: halve the spacing until successive
/// Richardson-extrapolated eigenvalues agree within tol * max(1, |E|) or the
/// refinement budget is spent (converged = false then).
GroundState solve_ground(const PotentialProfile& potential, const GridSpec& grid,
                         const SolverOptions& options = {});

/// As above with the grid from auto_grid and its own energy estimate.
GroundState solve_ground(const PotentialProfile& potential, const SolverOptions& options = {});

/// Solves `potential` on exactly the two grids used by `reference`. Energies
/// on a shared discretization can be finite-differenced without grid noise.
GroundState solve_like(const PotentialProfile& potential, const GroundState& reference);

/// Ground state of -d^2/dq^2 + zeta q^2 + q^4.
GroundState solve_scaled_quartic(double zeta, const SolverOptions& options = {});

/// Constants of the pure quartic oscillator -d^2/dq^2 + q^4.
struct QuarticConstants {
  double beta0 = 0.0;    ///< e0(0)
  double beta1 = 0.0;    ///< <q^2> = e0'(0)
  double k_const = 0.0;  ///< integral of phi^4
  double beta0_error = 0.0;
  double beta1_error = 0.0;
  double k_error = 0.0;
  double beta1_slope = 0.0;  ///< e0'(0) from finite differences of e0(zeta)
};

/// Throws std::runtime_error when <q^2> and the finite-difference slope of
/// e0(zeta) disagree by more than 10 * tolerance.
QuarticConstants quartic_constants(double tolerance = 1e-8);

}  // namespace dicke
