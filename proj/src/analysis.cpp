#include "pstsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pst {

std::pair<double, double> hitting_time(const std::vector<double>& t_grid,
                                       const std::vector<double>& fidelity) {
  if (t_grid.empty() || t_grid.size() != fidelity.size())
    throw InputError("hitting_time: empty or mismatched series");
  std::size_t best = 0;
  for (std::size_t i = 1; i < fidelity.size(); ++i)
    if (fidelity[i] > fidelity[best]) best = i;
  return {t_grid[best], fidelity[best]};
}

TransferRecord make_record(int n_steps, std::vector<double> t_grid,
                           std::vector<double> fidelity) {
  TransferRecord record;
  record.n_steps = n_steps;
  auto [t_star, f_star] = hitting_time(t_grid, fidelity);
  record.t_grid = std::move(t_grid);
  record.fidelity = std::move(fidelity);
  record.hitting_time = t_star;
  record.peak_fidelity = f_star;
  return record;
}

namespace {

void require_matching_sweeps(const SweepResult& a, const SweepResult& b,
                             const char* who) {
  if (a.records.empty() || a.records.size() != b.records.size())
    throw InputError(std::string(who) + ": sweeps cover different N ranges");
  for (std::size_t i = 0; i < a.records.size(); ++i)
    if (a.records[i].n_steps != b.records[i].n_steps)
      throw InputError(std::string(who) + ": sweeps cover different N ranges");
}

}  // namespace

double delta_fidelity(const SweepResult& a, const SweepResult& b) {
  require_matching_sweeps(a, b, "delta_fidelity");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.records.size(); ++i)
    sum += std::abs(a.records[i].peak_fidelity - b.records[i].peak_fidelity);
  return sum / static_cast<double>(a.records.size());
}

double delta_hitting(const SweepResult& a, const SweepResult& b) {
  require_matching_sweeps(a, b, "delta_hitting");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.records.size(); ++i)
    sum += a.records[i].hitting_time - b.records[i].hitting_time;
  return std::abs(sum) / static_cast<double>(a.records.size());
}

double dynamics_error(const std::vector<double>& a,
                      const std::vector<double>& b) {
  if (a.size() != b.size())
    throw InputError("dynamics_error: series on different grids");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return sum;
}

std::optional<double> interp_linear(const std::vector<double>& grid,
                                    const std::vector<double>& values,
                                    double x) {
  if (grid.size() != values.size() || grid.empty())
    throw InputError("interp_linear: empty or mismatched series");
  if (x < grid.front() || x > grid.back()) return std::nullopt;
  auto it = std::lower_bound(grid.begin(), grid.end(), x);
  if (it == grid.begin()) return values.front();
  const std::size_t hi = static_cast<std::size_t>(it - grid.begin());
  const std::size_t lo = hi - 1;
  const double span = grid[hi] - grid[lo];
  if (span <= 0.0) return values[lo];
  const double w = (x - grid[lo]) / span;
  return (1.0 - w) * values[lo] + w * values[hi];
}

}  // namespace pst
