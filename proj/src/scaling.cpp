#include "dicke/scaling.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "dicke/entanglement.hpp"

namespace dicke {

namespace {

double parse_number(std::string_view text, std::string_view what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return v;
}

// Powers of x = 2 N D that appear in the critical expansions.
struct CriticalScale {
  double x13;  // x^{1/3}
  double x23;  // x^{2/3}
  double x43;  // x^{4/3}
};

CriticalScale critical_scale(int n_qubits, double d_ratio) {
  if (n_qubits < 1 || !(d_ratio > 0.0)) {
    throw std::invalid_argument("finite-size prediction needs N >= 1 and D > 0");
  }
  const double x13 = std::cbrt(2.0 * static_cast<double>(n_qubits) * d_ratio);
  return {x13, x13 * x13, x13 * x13 * x13 * x13};
}

}  // namespace

SymanzikMap symanzik_map(double alpha, double nd) {
  if (!(alpha > 0.0)) throw std::invalid_argument("Symanzik scaling needs alpha > 0");
  if (!(nd > 0.0)) throw std::invalid_argument("Symanzik scaling needs ND > 0");
  const double ratio = 2.0 * nd / (alpha * alpha);
  SymanzikMap m;
  m.zeta = std::pow(ratio, 2.0 / 3.0) * (1.0 - alpha);
  m.q_scale = std::pow(ratio, -1.0 / 6.0);
  return m;
}

ObservableKey parse_scaling_observable(std::string_view name) {
  using K = ScalingObservable;
  if (name.starts_with("phi_nu(") && name.ends_with(")")) {
    return {K::kPhiNu, parse_number(name.substr(7, name.size() - 8), "nu")};
  }
  if (name == "sx_per_n") return {K::kSxPerN};
  if (name == "sx2_per_n2") return {K::kSx2PerN2};
  if (name == "order_param_over_D") return {K::kOrderParamOverD};
  if (name == "q2") return {K::kQ2};
  if (name == "q4") return {K::kQ4};
  if (name == "e0_correction") return {K::kE0Correction};
  if (name == "tau1") return {K::kTau1};
  if (name == "tau_n") return {K::kTauN};
  if (name == "purity") return {K::kPurity};
  throw std::invalid_argument("unknown scaling observable '" + std::string(name) + "'");
}

std::string to_string(const ObservableKey& key) {
  switch (key.kind) {
    case ScalingObservable::kPhiNu: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "phi_nu(%g)", key.nu);
      return buf;
    }
    case ScalingObservable::kSxPerN: return "sx_per_n";
    case ScalingObservable::kSx2PerN2: return "sx2_per_n2";
    case ScalingObservable::kOrderParamOverD: return "order_param_over_D";
    case ScalingObservable::kQ2: return "q2";
    case ScalingObservable::kQ4: return "q4";
    case ScalingObservable::kE0Correction: return "e0_correction";
    case ScalingObservable::kTau1: return "tau1";
    case ScalingObservable::kTauN: return "tau_n";
    case ScalingObservable::kPurity: return "purity";
  }
  return "unknown";
}

double finite_size_prediction(const ObservableKey& key, int n_qubits, double d_ratio,
                              const QuarticConstants& c) {
  const CriticalScale s = critical_scale(n_qubits, d_ratio);
  const double b0 = c.beta0;
  const double b1 = c.beta1;
  const double nu = key.nu;
  switch (key.kind) {
    case ScalingObservable::kPhiNu:
      return 1.0 + 4.0 * nu * b1 / s.x23 + 8.0 / 3.0 * (nu - 1.0) * nu * b0 / s.x43;
    case ScalingObservable::kSxPerN:
      return -1.0 + 2.0 * b1 / s.x23 - 2.0 * b0 / s.x43;
    case ScalingObservable::kSx2PerN2: {
      const double n = static_cast<double>(n_qubits);
      return 1.0 - (n - 1.0) / n * (4.0 * b1 / s.x23 - 16.0 / 3.0 * b0 / s.x43);
    }
    case ScalingObservable::kOrderParamOverD:
      return 2.0 * b1 / s.x23 + 4.0 / 3.0 * b0 / s.x43;
    case ScalingObservable::kQ2:
      return b1 * s.x13;
    case ScalingObservable::kQ4:
      return b0 / 3.0 * s.x23;
    case ScalingObservable::kE0Correction:
      return b0 / s.x13;
    case ScalingObservable::kTau1: {
      // 1 - (sx_per_n)^2 truncated at x^{-4/3}
      const double c1 = 2.0 * b1 / s.x23;
      return 2.0 * c1 - c1 * c1 - 4.0 * b0 / s.x43;
    }
    case ScalingObservable::kTauN:
      return 1.0 - critical_purity_asymptote(n_qubits, d_ratio, c.k_const);
    case ScalingObservable::kPurity:
      return critical_purity_asymptote(n_qubits, d_ratio, c.k_const);
  }
  throw std::invalid_argument("unknown scaling observable");
}

double leading_correction(const ObservableKey& key, int n_qubits, double d_ratio, const QuarticConstants& c) {
  const CriticalScale s = critical_scale(n_qubits, d_ratio);
  switch (key.kind) {
    case ScalingObservable::kPhiNu: return 4.0 * key.nu * c.beta1 / s.x23;
    case ScalingObservable::kSxPerN: return 2.0 * c.beta1 / s.x23;
    case ScalingObservable::kSx2PerN2: {
      const double n = static_cast<double>(n_qubits);
      return -(n - 1.0) / n * 4.0 * c.beta1 / s.x23;
    }
    case ScalingObservable::kOrderParamOverD: return 2.0 * c.beta1 / s.x23;
    case ScalingObservable::kTau1: return 4.0 * c.beta1 / s.x23;
    case ScalingObservable::kTauN: return -critical_purity_asymptote(n_qubits, d_ratio, c.k_const);
    case ScalingObservable::kQ2:
    case ScalingObservable::kQ4:
    case ScalingObservable::kE0Correction:
    case ScalingObservable::kPurity:
      return finite_size_prediction(key, n_qubits, d_ratio, c);
  }
  throw std::invalid_argument("unknown scaling observable");
}

FitTransform FitTransform::parse(std::string_view label) {
  if (label == "value") return value();
  if (label.starts_with("deviation:")) {
    return deviation_from(parse_number(label.substr(10), "asymptote"));
  }
  throw std::invalid_argument("unknown fit transform '" + std::string(label) +
                              "' (expected 'value' or 'deviation:<asymptote>')");
}

double FitTransform::apply(double v) const {
  return kind == Kind::kValue ? v : std::abs(v - asymptote);
}

std::string FitTransform::label() const {
  if (kind == Kind::kValue) return "value";
  char buf[64];
  std::snprintf(buf, sizeof buf, "deviation:%g", asymptote);
  return buf;
}

FitResult fit_exponent(std::span<const ScalingPoint> points, const FitTransform& transform) {
  if (points.size() < 4) {
    throw std::invalid_argument("fit_exponent needs at least 4 points, got " + std::to_string(points.size()));
  }
  FitResult r;
  r.points = points.size();
  r.n_min = points.front().n_qubits;
  r.n_max = points.front().n_qubits;
  std::vector<double> xs, ys;
  for (const auto& p : points) {
    const double t = transform.apply(p.value);
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw std::invalid_argument("fit_exponent: transformed value " + std::to_string(t) + " at N = " +
                                  std::to_string(p.n_qubits) + " is not positive");
    }
    r.n_min = std::min(r.n_min, p.n_qubits);
    r.n_max = std::max(r.n_max, p.n_qubits);
    xs.push_back(std::log(static_cast<double>(p.n_qubits)));
    ys.push_back(std::log(t));
  }
  if (std::log10(static_cast<double>(r.n_max) / r.n_min) < 1.5) {
    throw std::invalid_argument("fit_exponent: N range must span at least 1.5 decades");
  }

  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  r.exponent = sxy / sxx;
  const double intercept = my - r.exponent * mx;
  r.prefactor = std::exp(intercept);
  double ss_res = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (intercept + r.exponent * xs[i]);
    ss_res += e * e;
  }
  r.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return r;
}

double fixed_exponent_prefactor(std::span<const ScalingPoint> points, const FitTransform& transform,
                                double exponent) {
  if (points.empty()) throw std::invalid_argument("fixed_exponent_prefactor: no points");
  double s = 0.0;
  for (const auto& p : points) {
    const double t = transform.apply(p.value);
    if (!(t > 0.0)) throw std::invalid_argument("fixed_exponent_prefactor: non-positive transformed value");
    s += std::log(t) - exponent * std::log(static_cast<double>(p.n_qubits));
  }
  return std::exp(s / static_cast<double>(points.size()));
}

}  // namespace dicke
