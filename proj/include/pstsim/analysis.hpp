#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pstsim/errors.hpp"

namespace pst {

/// Fidelity samples of one depth-N sweep plus the derived hitting point.
struct TransferRecord {
  int n_steps = 0;
  std::vector<double> t_grid;
  std::vector<double> fidelity;
  double hitting_time = 0.0;
  double peak_fidelity = 0.0;
};

struct SweepResult {
  std::vector<TransferRecord> records;  // strictly increasing n_steps
  std::string label;
};

/// Argmax over the grid; ties break toward the earliest grid time.
/// Returns (t*, F*).
std::pair<double, double> hitting_time(const std::vector<double>& t_grid,
                                       const std::vector<double>& fidelity);

TransferRecord make_record(int n_steps, std::vector<double> t_grid,
                           std::vector<double> fidelity);

/// (1/N) sum_N |F*_a(N) - F*_b(N)| over peak fidelities.
double delta_fidelity(const SweepResult& a, const SweepResult& b);

/// (1/N) |sum_N (T_a(N) - T_b(N))| - the absolute value wraps the sum.
double delta_hitting(const SweepResult& a, const SweepResult& b);

/// Unnormalized L1 distance sum_t |a(t) - b(t)| on a shared grid.
double dynamics_error(const std::vector<double>& a,
                      const std::vector<double>& b);

/// Linear interpolation of (grid, values) at x; empty outside the grid range.
std::optional<double> interp_linear(const std::vector<double>& grid,
                                    const std::vector<double>& values,
                                    double x);

}  // namespace pst
