#include "dicke/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace dicke {

void ModelParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw std::invalid_argument("omega must be positive, got " + std::to_string(omega));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be positive, got " + std::to_string(delta));
  }
  if (!(coupling >= 0.0) || !std::isfinite(coupling)) {
    throw std::invalid_argument("coupling must be non-negative, got " + std::to_string(coupling));
  }
  if (n_qubits < 1) {
    throw std::invalid_argument("n_qubits must be >= 1, got " + std::to_string(n_qubits));
  }
}

DimensionlessParams DimensionlessParams::from_alpha(double alpha, double d_ratio, int n_qubits) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be non-negative, got " + std::to_string(alpha));
  }
  if (!(d_ratio > 0.0) || !std::isfinite(d_ratio)) {
    throw std::invalid_argument("D must be positive, got " + std::to_string(d_ratio));
  }
  if (n_qubits < 1) {
    throw std::invalid_argument("n_qubits must be >= 1, got " + std::to_string(n_qubits));
  }
  DimensionlessParams p;
  p.d_ratio = d_ratio;
  p.alpha = alpha;
  p.l_coupling = std::sqrt(2.0 * alpha * d_ratio);
  p.nd = static_cast<double>(n_qubits) * d_ratio;
  return p;
}

int DimensionlessParams::n_qubits() const {
  return static_cast<int>(std::lround(nd / d_ratio));
}

DimensionlessParams reduce(const ModelParams& params) {
  params.validate();
  DimensionlessParams p;
  p.d_ratio = 2.0 * params.delta / params.omega;
  p.l_coupling = 2.0 * std::numbers::sqrt2 * params.coupling / params.omega;
  p.alpha = p.l_coupling * p.l_coupling / (2.0 * p.d_ratio);
  p.nd = static_cast<double>(params.n_qubits) * p.d_ratio;
  return p;
}

double theta(double q, const DimensionlessParams& p, int n_qubits) {
  const double lq = p.l_coupling * q;
  return std::sqrt(p.d_ratio * p.d_ratio + lq * lq / static_cast<double>(n_qubits));
}

Amplitudes adiabatic_amplitudes(double q, const DimensionlessParams& p, int n_qubits) {
  const double u = p.l_coupling * q / (std::sqrt(static_cast<double>(n_qubits)) * theta(q, p, n_qubits));
  return {std::sqrt(1.0 + u), std::sqrt(1.0 - u)};
}

double mixing_angle(double q, const DimensionlessParams& p) {
  return std::atan2(std::sqrt(2.0 * p.alpha * p.nd) * q, p.nd);
}

double effective_potential(double q, const DimensionlessParams& p, int n_qubits) {
  return q * q - static_cast<double>(n_qubits) * theta(q, p, n_qubits);
}

double shifted_potential(double q, const DimensionlessParams& p) {
  const double q2 = q * q;
  const double b = 2.0 * p.alpha * p.nd;
  return q2 - b * q2 / (p.nd + std::sqrt(p.nd * p.nd + b * q2));
}

double quartic_potential(double q, const DimensionlessParams& p) {
  const double q2 = q * q;
  return (1.0 - p.alpha) * q2 + p.alpha * p.alpha * q2 * q2 / (2.0 * p.nd);
}

PotentialProfile full_profile(const DimensionlessParams& p) {
  return [p](double q) { return shifted_potential(q, p); };
}

PotentialProfile quartic_profile(const DimensionlessParams& p) {
  return [p](double q) { return quartic_potential(q, p); };
}

std::vector<double> well_minima(const DimensionlessParams& p, int n_qubits) {
  if (p.alpha <= 1.0) {
    return {0.0};
  }
  const double q0 = std::sqrt(static_cast<double>(n_qubits)) * p.d_ratio *
                    std::sqrt(p.alpha * p.alpha - 1.0) / p.l_coupling;
  return {-q0, q0};
}

ThermoObservables thermo_branch(double alpha, double d_ratio, Phase phase) {
  ThermoObservables t;
  if (phase == Phase::kNormal) {
    t.sx_per_n = -1.0;
    t.sx2_per_n2 = 1.0;
    t.order_param = 0.0;
    t.e0_per_n = -d_ratio;
    // alpha == 1 gives x = +inf and tau = 1 through IEEE arithmetic.
    const double x = alpha / (d_ratio * std::sqrt(1.0 - alpha));
    t.tau_infinity = 1.0 - 1.0 / std::sqrt(1.0 + x);
  } else {
    t.sx_per_n = -1.0 / alpha;
    t.sx2_per_n2 = 1.0 / (alpha * alpha);
    // (D^2 / L^2)(alpha^2 - 1) with L^2 = 2 alpha D
    t.order_param = d_ratio * (alpha * alpha - 1.0) / (2.0 * alpha);
    t.e0_per_n = -0.5 * d_ratio * (alpha + 1.0 / alpha);
    const double x = 1.0 / (d_ratio * alpha * alpha * std::sqrt(alpha * alpha - 1.0));
    t.tau_infinity = 1.0 - 0.5 / std::sqrt(1.0 + x);
  }
  t.sz2_per_n2 = 1.0 - t.sx2_per_n2;
  t.sy2_per_n2 = 0.0;
  return t;
}

ThermoObservables thermo_limit(double alpha, double d_ratio) {
  if (!(alpha >= 0.0) || !(d_ratio > 0.0)) {
    throw std::invalid_argument("thermo_limit requires alpha >= 0 and D > 0");
  }
  return thermo_branch(alpha, d_ratio, alpha <= 1.0 ? Phase::kNormal : Phase::kSuperradiant);
}

}  // namespace dicke
