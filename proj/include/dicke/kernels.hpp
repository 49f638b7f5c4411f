#pragma once

#include <span>

namespace dicke::kernels {

/// Pairwise (cascade) summation; the reduction order depends only on the
/// length of the input.
double pairwise_sum(std::span<const double> values);

/// Double sum  sum_ij w_i w_j cos^2((angle_i - angle_j) / 2)^power.
///
/// This is the tensor-product trapezoid quadrature of the qubit purity: the
/// weights carry phi^2 times the quadrature weight, the angles are the
/// per-qubit mixing angles and power is the number of qubits.
///
/// The serial version is the plain double loop kept as reference. The
/// parallel version splits rows across OpenMP threads, uses the i <-> j
/// symmetry, stops a row once the kernel underflows (angles must be sorted
/// ascending) and reduces row sums in a fixed order, so the result does not
/// depend on the thread count.
double purity_sum_serial(std::span<const double> weights, std::span<const double> angles,
                         double power);
double purity_sum_parallel(std::span<const double> weights, std::span<const double> angles,
                           double power);

/// log(cos^2(x / 2)) computed as log1p(-sin^2(x / 2)).
double log_overlap(double angle_difference);

/// Number of OpenMP worker threads in effect (1 without OpenMP).
int worker_count();
void set_worker_count(int workers);

}  // namespace dicke::kernels
