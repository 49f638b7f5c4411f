#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dicke/entanglement.hpp"
#include "dicke/observables.hpp"
#include "dicke/scaling.hpp"

namespace dicke {

/// One (alpha, N) point of a sweep at fixed D.
struct SweepRow {
  double alpha = 0.0;
  int n_qubits = 1;
  double d_ratio = 1.0;
  ObservableSet obs;
  TangleResult tangle;
  bool converged = false;
};

struct SweepConfig {
  std::vector<double> alphas;
  std::vector<int> n_values;
  double d_ratio = 10.0;
  double tolerance = 1e-8;
  /// Fixed starting grid instead of auto_grid.
  std::optional<GridSpec> grid;
  bool with_entanglement = true;
};

/// Purity quadrature target; the grid is refined until the stride-2 check
/// is below this.
inline constexpr double kPurityQuadratureTolerance = 1e-6;

/// Rows whose wavefunction next to the box edge exceeds this fraction of its
/// peak are flagged as not converged.
inline constexpr double kBoundaryAmplitudeTolerance = 1e-6;

/// Solves one point. Never throws on non-convergence: the row is flagged.
SweepRow solve_point(double alpha, int n_qubits, const SweepConfig& config);

/// Rows ordered by (n_qubits, alpha) regardless of scheduling. Points are
/// distributed over OpenMP threads.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Same rows computed one after another (reference for the parallel path).
std::vector<SweepRow> run_sweep_serial(const SweepConfig& config);

/// CSV column names, in output order.
const std::vector<std::string>& sweep_columns();

/// Value of a named numeric column (see sweep_columns); throws
/// std::invalid_argument for unknown names.
double column_value(const SweepRow& row, std::string_view column);

/// Header plus one line per row; the last column is the convergence flag.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// Scientific notation with 17 significant digits.
std::string format_double(double v);

/// Scaling points of one column from a set of rows.
std::vector<ScalingPoint> scaling_points(std::span<const SweepRow> rows, std::string_view column);

/// {2^lo, ..., 2^hi}
std::vector<int> dyadic_ladder(int lo_exponent, int hi_exponent);

}  // namespace dicke
