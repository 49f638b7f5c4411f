#include "dicke/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dicke {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

// Kinetic energy of the ground state of a box of half-width 1: pi^2 / 4.
constexpr double kBoxKinetic = std::numbers::pi * std::numbers::pi / 4.0;

// WKB decay exponent required beyond the turning point (e^-25 ~ 1.4e-11).
constexpr double kTailAction = 25.0;
constexpr double kBoundaryMargin = 40.0;

double pivot_floor(std::span<const double> off) {
  double m = 1.0;
  for (double b : off) m = std::max(m, b * b);
  return kTiny * m;
}

// One step of the LDL^T / Sturm recurrence with the usual tiny-pivot guard.
inline double next_pivot(double a, double shift, double b2, double prev, double pivmin) {
  double d = a - shift - b2 / prev;
  if (std::abs(d) < pivmin) d = -pivmin;
  return d;
}

double first_pivot(double a, double shift, double pivmin) {
  double d = a - shift;
  if (std::abs(d) < pivmin) d = -pivmin;
  return d;
}

std::vector<double> inverse_iteration(std::span<const double> diag, std::span<const double> off,
                                      double shift, double pivmin) {
  const std::size_t n = diag.size();
  std::vector<double> d(n), l(n > 0 ? n - 1 : 0), x(n, 1.0), y(n);
  d[0] = first_pivot(diag[0], shift, pivmin);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    l[i] = off[i] / d[i];
    d[i + 1] = next_pivot(diag[i + 1], shift, off[i] * off[i], d[i], pivmin);
  }
  for (int iter = 0; iter < 3; ++iter) {
    y[0] = x[0];
    for (std::size_t i = 0; i + 1 < n; ++i) y[i + 1] = x[i + 1] - l[i] * y[i];
    x[n - 1] = y[n - 1] / d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = y[i] / d[i] - l[i] * x[i + 1];
    double scale = 0.0;
    for (double v : x) scale = std::max(scale, std::abs(v));
    for (double& v : x) v /= scale;
  }
  return x;
}

double trapezoid(const WaveFunction& wf, auto&& integrand) {
  double s = 0.0;
  for (std::size_t i = 0; i < wf.values.size(); ++i) {
    s += wf.weight(i) * integrand(wf.grid.node(i), wf.values[i]);
  }
  return s;
}

}  // namespace

void GridSpec::validate() const {
  if (!(q_max > 0.0) || !std::isfinite(q_max)) {
    throw std::invalid_argument("grid half-width must be positive, got " + std::to_string(q_max));
  }
  if (num_points < kMinPoints || num_points % 2 == 0) {
    throw std::invalid_argument("grid needs an odd number of points >= 201, got " +
                                std::to_string(num_points));
  }
}

double GridSpec::node(std::size_t i) const {
  return (static_cast<double>(i) - static_cast<double>(center())) * spacing();
}

double WaveFunction::weight(std::size_t i) const {
  const double h = grid.spacing();
  return (i == 0 || i + 1 == values.size()) ? 0.5 * h : h;
}

double WaveFunction::norm() const {
  return trapezoid(*this, [](double, double v) { return v * v; });
}

std::size_t sturm_count(std::span<const double> diag, std::span<const double> off, double x) {
  const double pivmin = pivot_floor(off);
  double d = first_pivot(diag[0], x, pivmin);
  std::size_t count = d < 0.0 ? 1 : 0;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    d = next_pivot(diag[i], x, off[i - 1] * off[i - 1], d, pivmin);
    if (d < 0.0) ++count;
  }
  return count;
}

Eigenpair tridiagonal_lowest(std::span<const double> diag, std::span<const double> off) {
  const std::size_t n = diag.size();
  if (n == 0 || off.size() + 1 != n) {
    throw std::invalid_argument("tridiagonal_lowest: inconsistent matrix dimensions");
  }
  if (n == 1) return {diag[0], {1.0}};

  double lo = std::numeric_limits<double>::max();
  double upper = std::numeric_limits<double>::lowest();
  double min_diag = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - radius);
    upper = std::max(upper, diag[i] + radius);
    min_diag = std::min(min_diag, diag[i]);
  }
  const double pivmin = pivot_floor(off);
  const double scale = std::max(std::abs(lo), std::abs(upper));
  lo -= 2.0 * kEps * scale + pivmin;
  // The lowest eigenvalue never exceeds the smallest diagonal entry.
  double hi = min_diag + 2.0 * kEps * scale + pivmin;
  if (sturm_count(diag, off, hi) == 0) hi = upper + 2.0 * kEps * scale + pivmin;

  for (int iter = 0; iter < 256; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + pivmin) break;
    if (sturm_count(diag, off, mid) == 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // No eigenvalue lies below `lo`, so every LDL^T pivot of T - lo is positive.
  return {0.5 * (lo + hi), inverse_iteration(diag, off, lo, pivmin)};
}

GridLevel solve_on_grid(const PotentialProfile& potential, const GridSpec& grid) {
  grid.validate();
  const std::size_t half = grid.center();
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);

  // Even sector on nodes 0..half-1 (node `half` is the Dirichlet boundary).
  // The mirror condition phi(-h) = phi(h) is symmetrized by phi_0 = sqrt(2) psi_0.
  std::vector<double> diag(half), off(half - 1, -inv_h2), pot(half);
  for (std::size_t j = 0; j < half; ++j) {
    const double v = potential(static_cast<double>(j) * h);
    if (!std::isfinite(v)) {
      throw std::invalid_argument("potential is not finite at q = " +
                                  std::to_string(static_cast<double>(j) * h));
    }
    pot[j] = v;
    diag[j] = 2.0 * inv_h2 + v;
  }
  off[0] = -std::numbers::sqrt2 * inv_h2;

  Eigenpair pair = tridiagonal_lowest(diag, off);
  pair.vector[0] *= std::numbers::sqrt2;

  GridLevel level;
  level.eigenvalue = pair.value;
  level.wavefunction.grid = grid;
  auto& values = level.wavefunction.values;
  values.assign(grid.num_points, 0.0);
  for (std::size_t j = 0; j < half; ++j) {
    values[half + j] = pair.vector[j];
    values[half - j] = pair.vector[j];
  }
  const double sign = values[half] < 0.0 ? -1.0 : 1.0;
  const double scale = sign / std::sqrt(level.wavefunction.norm());
  for (double& v : values) v *= scale;

  // Bisection only pins the eigenvalue to about eps * 4 / h^2. The Rayleigh
  // quotient written as a sum of squared differences plus potential terms
  // has no such cancellation and its error is second order in the vector's.
  double kinetic = 0.0;
  for (std::size_t j = 0; j < half; ++j) {
    const double d = values[half + j + 1] - values[half + j];
    kinetic += d * d;
  }
  double potential_part = 0.5 * pot[0] * values[half] * values[half];
  for (std::size_t j = 1; j < half; ++j) potential_part += pot[j] * values[half + j] * values[half + j];
  level.eigenvalue = 2.0 * (kinetic / h + potential_part * h);
  return level;
}

WellInfo analyze_well(const PotentialProfile& potential) {
  const double v0 = potential(0.0);
  if (!std::isfinite(v0)) throw std::domain_error("potential is not finite at q = 0");

  double q_hi = 0.0;
  double prev = v0;
  for (int k = 0; k <= 90; ++k) {
    const double q = 1e-3 * std::ldexp(1.0, k);
    const double v = potential(q);
    if (!std::isfinite(v)) break;
    if (v > v0 + 1.0 && v > prev) {
      q_hi = q;
      break;
    }
    prev = v;
  }
  if (q_hi == 0.0) {
    throw std::domain_error("potential is not confining: it does not rise at large |q|");
  }

  constexpr int kSamples = 4096;
  int best = 0;
  double best_v = v0;
  for (int i = 1; i <= kSamples; ++i) {
    const double v = potential(q_hi * i / kSamples);
    if (v < best_v) {
      best_v = v;
      best = i;
    }
  }
  double q_min = 0.0;
  double v_min = v0;
  if (best > 0) {
    // Golden-section refinement inside the bracketing samples.
    double a = q_hi * (best - 1) / kSamples;
    double b = q_hi * std::min(best + 1, kSamples) / kSamples;
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = potential(c);
    double fd = potential(d);
    for (int iter = 0; iter < 200 && b - a > 4.0 * kEps * b; ++iter) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - g * (b - a);
        fc = potential(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + g * (b - a);
        fd = potential(d);
      }
    }
    q_min = 0.5 * (a + b);
    v_min = potential(q_min);
    if (best_v < v_min) {
      q_min = q_hi * best / kSamples;
      v_min = best_v;
    }
  }

  // Box trial state of half-width l centred on the minimum: an upper estimate
  // of the ground energy, minimized over l.
  WellInfo info;
  info.q_min = q_min;
  info.v_min = v_min;
  double best_f = std::numeric_limits<double>::max();
  const double l_lo = 1e-8 * (q_hi + 1.0);
  const double l_hi = 2.0 * q_hi + 1.0;
  for (double l = l_lo; l <= l_hi; l *= 1.02) {
    double vmax = v_min;
    for (int s = 0; s <= 32; ++s) {
      vmax = std::max(vmax, potential(q_min - l + 2.0 * l * s / 32.0));
    }
    const double f = kBoxKinetic / (l * l) + vmax - v_min;
    if (f < best_f) {
      best_f = f;
      info.length_scale = l;
    }
  }
  info.energy_estimate = v_min + best_f;
  return info;
}

GridSpec auto_grid(const PotentialProfile& potential, double reference_energy, double tolerance) {
  const WellInfo info = analyze_well(potential);
  const double l = info.length_scale;
  const double step = l / 64.0;
  double q = info.q_min;
  double action = 0.0;
  const std::size_t max_steps = 1u << 26;
  for (std::size_t s = 0;; ++s) {
    if (s == max_steps) throw std::domain_error("potential is not confining: no classical turning point");
    q += step;
    const double excess = potential(q) - reference_energy;
    if (!std::isfinite(excess)) throw std::domain_error("potential is not finite inside the domain");
    if (excess > 0.0) action += std::sqrt(excess) * step;
    if (action >= kTailAction && excess >= kBoundaryMargin && q >= info.q_min + l) break;
  }
  const double factor = std::min(0.125, 0.5 * std::pow(std::max(tolerance, 1e-16), 0.125));
  const auto half = static_cast<std::size_t>(std::ceil(q / (factor * l)));
  return {q, std::max(2 * half + 1, GridSpec::kMinPoints)};
}

GroundState solve_ground(const PotentialProfile& potential, const GridSpec& grid,
                         const SolverOptions& options) {
  if (!(options.tolerance > 0.0) || options.max_refinements < 2) {
    throw std::invalid_argument("solver needs tolerance > 0 and at least 2 refinements");
  }
  GroundState state;
  GridLevel previous = solve_on_grid(potential, grid);
  double previous_extrapolated = std::numeric_limits<double>::quiet_NaN();
  GridSpec g = grid;
  for (int k = 1; k <= options.max_refinements; ++k) {
    g = g.refined();
    GridLevel current = solve_on_grid(potential, g);
    const double extrapolated = (4.0 * current.eigenvalue - previous.eigenvalue) / 3.0;
    state.refinement_error = k >= 2 ? std::abs(extrapolated - previous_extrapolated)
                                    : std::abs(current.eigenvalue - previous.eigenvalue) / 3.0;
    state.energy = extrapolated;
    state.refinements = k;
    state.coarse = std::move(previous);
    previous = std::move(current);
    previous_extrapolated = extrapolated;
    if (k >= 2 && state.refinement_error <= options.tolerance * std::max(1.0, std::abs(extrapolated))) {
      state.converged = true;
      break;
    }
  }
  state.fine = std::move(previous);
  return state;
}

GroundState solve_ground(const PotentialProfile& potential, const SolverOptions& options) {
  const WellInfo info = analyze_well(potential);
  double reference = info.energy_estimate;
  GroundState state = solve_ground(potential, auto_grid(potential, reference, options.tolerance), options);
  if (state.energy > reference) {
    // The estimate was too low to place the turning point; widen and redo.
    reference = state.energy + (state.energy - info.v_min);
    state = solve_ground(potential, auto_grid(potential, reference, options.tolerance), options);
  }
  return state;
}

GroundState solve_like(const PotentialProfile& potential, const GroundState& reference) {
  GroundState state;
  state.coarse = solve_on_grid(potential, reference.coarse.wavefunction.grid);
  state.fine = solve_on_grid(potential, reference.fine.wavefunction.grid);
  state.energy = (4.0 * state.fine.eigenvalue - state.coarse.eigenvalue) / 3.0;
  state.converged = reference.converged;
  state.refinement_error = reference.refinement_error;
  state.refinements = reference.refinements;
  return state;
}

GroundState solve_scaled_quartic(double zeta, const SolverOptions& options) {
  if (!std::isfinite(zeta)) throw std::invalid_argument("zeta must be finite");
  return solve_ground([zeta](double q) { return q * q * (zeta + q * q); }, options);
}

QuarticConstants quartic_constants(double tolerance) {
  SolverOptions options;
  options.tolerance = tolerance;
  const GroundState ground = solve_scaled_quartic(0.0, options);
  if (!ground.converged) throw std::runtime_error("quartic oscillator ground state did not converge");

  const auto second_moment = [](const WaveFunction& wf) {
    return trapezoid(wf, [](double q, double v) { return q * q * v * v; });
  };
  const auto fourth_power = [](const WaveFunction& wf) {
    return trapezoid(wf, [](double, double v) { return v * v * v * v; });
  };

  QuarticConstants c;
  c.beta0 = ground.energy;
  c.beta0_error = ground.refinement_error;
  c.beta1 = extrapolate(ground, second_moment);
  c.beta1_error = std::abs(c.beta1 - second_moment(ground.wavefunction()));
  c.k_const = extrapolate(ground, fourth_power);
  c.k_error = std::abs(c.k_const - fourth_power(ground.wavefunction()));

  // Feynman-Hellmann along the scaled family, on the same discretization.
  const auto energy_at = [&](double zeta) {
    return solve_like([zeta](double q) { return q * q * (zeta + q * q); }, ground).energy;
  };
  const double step = 1e-3;
  const double wide = (energy_at(step) - energy_at(-step)) / (2.0 * step);
  const double narrow = (energy_at(0.5 * step) - energy_at(-0.5 * step)) / step;
  c.beta1_slope = (4.0 * narrow - wide) / 3.0;
  if (std::abs(c.beta1_slope - c.beta1) > 10.0 * tolerance * std::max(1.0, c.beta1)) {
    throw std::runtime_error("quartic constants: <q^2> = " + std::to_string(c.beta1) +
                             " disagrees with de0/dzeta = " + std::to_string(c.beta1_slope));
  }
  return c;
}

}  // namespace dicke
