#pragma once

#include <span>
#include <string>
#include <string_view>

#include "dicke/eigensolver.hpp"

namespace dicke {

/// Symanzik change of variables for the quartic-reduced problem:
///   q = Q * q_scale,  q_scale = (alpha^2 / 2ND)^{1/6},
///   zeta = (2ND / alpha^2)^{2/3} (1 - alpha),
/// so that e0(alpha, ND) = q_scale^2 * e0_scaled(zeta).
struct SymanzikMap {
  double zeta = 0.0;
  double q_scale = 1.0;

  double energy_from_scaled(double scaled_energy) const { return q_scale * q_scale * scaled_energy; }
};

/// Throws std::invalid_argument for alpha <= 0 or nd <= 0.
SymanzikMap symanzik_map(double alpha, double nd);

/// Observables with a closed-form finite-size expansion at alpha = 1.
enum class ScalingObservable {
  kPhiNu,
  kSxPerN,
  kSx2PerN2,
  kOrderParamOverD,
  kQ2,
  kQ4,
  kE0Correction,  ///< e0 = E0 + ND
  kTau1,
  kTauN,
  kPurity,  ///< Tr rho_N^2 from critical_purity_asymptote
};

struct ObservableKey {
  ScalingObservable kind = ScalingObservable::kSxPerN;
  double nu = 0.0;  ///< only for kPhiNu
};

/// Names: "phi_nu(<nu>)", "sx_per_n", "sx2_per_n2", "order_param_over_D",
/// "q2", "q4", "e0_correction", "tau1", "tau_n", "purity".
/// Throws std::invalid_argument for anything else.
ObservableKey parse_scaling_observable(std::string_view name);
std::string to_string(const ObservableKey& key);

/// Truncated large-N expansion at the critical point.
double finite_size_prediction(const ObservableKey& key, int n_qubits, double d_ratio,
                              const QuarticConstants& constants);

/// The first N-dependent term of the same expansion.
double leading_correction(const ObservableKey& key, int n_qubits, double d_ratio,
                          const QuarticConstants& constants);

struct ScalingPoint {
  int n_qubits = 1;
  double d_ratio = 1.0;
  double alpha = 1.0;
  std::string observable_name;
  double value = 0.0;
};

/// What is fitted on the log scale: the value itself, or |value - asymptote|.
struct FitTransform {
  enum class Kind { kValue, kDeviation };
  Kind kind = Kind::kValue;
  double asymptote = 0.0;

  static FitTransform value() { return {}; }
  static FitTransform deviation_from(double asymptote) { return {Kind::kDeviation, asymptote}; }
  /// "value" or "deviation:<asymptote>".
  static FitTransform parse(std::string_view label);

  double apply(double v) const;
  std::string label() const;
};

struct FitResult {
  double exponent = 0.0;
  double prefactor = 0.0;
  double r_squared = 0.0;
  int n_min = 0;
  int n_max = 0;
  std::size_t points = 0;
};

/// Least squares of ln(transform(value)) against ln N. Requires at least 4
/// points spanning 1.5 decades in N and strictly positive transformed
/// values; throws std::invalid_argument otherwise.
FitResult fit_exponent(std::span<const ScalingPoint> points, const FitTransform& transform);

/// Prefactor A of A N^exponent with the exponent held fixed (geometric mean).
double fixed_exponent_prefactor(std::span<const ScalingPoint> points, const FitTransform& transform,
                                double exponent);

}  // namespace dicke
