#include "dicke/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dicke::kernels {

namespace {

// exp() of anything below this is zero in double precision.
constexpr double kUnderflowExponent = -745.2;

double pairwise_range(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_range(data, half) + pairwise_range(data + half, n - half);
}

void check_sizes(std::span<const double> weights, std::span<const double> angles) {
  if (weights.size() != angles.size()) {
    throw std::invalid_argument("purity kernel: weights and angles differ in length");
  }
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise_range(values.data(), values.size());
}

double log_overlap(double angle_difference) {
  const double s = std::sin(0.5 * angle_difference);
  return std::log1p(-s * s);
}

double purity_sum_serial(std::span<const double> weights, std::span<const double> angles,
                         double power) {
  check_sizes(weights, angles);
  double total = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = 0; j < weights.size(); ++j) {
      total += weights[i] * weights[j] * std::exp(power * log_overlap(angles[i] - angles[j]));
    }
  }
  return total;
}

double purity_sum_parallel(std::span<const double> weights, std::span<const double> angles,
                           double power) {
  check_sizes(weights, angles);
  const auto n = static_cast<std::ptrdiff_t>(weights.size());
  std::vector<double> rows(weights.size(), 0.0);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double wi = weights[i];
    if (wi == 0.0) continue;
    double row = 0.0;
    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
      const double exponent = power * log_overlap(angles[j] - angles[i]);
      if (exponent < kUnderflowExponent) break;
      row += weights[j] * std::exp(exponent);
    }
    rows[i] = wi * (wi + 2.0 * row);
  }
  return pairwise_sum(rows);
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_count(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

}  // namespace dicke::kernels
