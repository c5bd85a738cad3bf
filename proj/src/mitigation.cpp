#include "pstsim/mitigation.hpp"

#include <cmath>
#include <string>

namespace pst {

double estimate_alpha(const std::vector<double>& series) {
  if (series.empty()) throw InputError("estimate_alpha: empty series");
  double sum = 0.0;
  for (double v : series) sum += v;
  return sum / static_cast<double>(series.size());
}

C1Fit fit_c1(const std::vector<std::pair<int, double>>& peaks, double alpha,
             int fit_n_min) {
  if (!(alpha >= 0.0 && alpha < 1.0))
    throw FitError("fit_c1: alpha outside [0, 1)");
  const double floor = alpha + 1e-4;
  std::vector<std::pair<int, double>> usable;
  for (const auto& [n, f] : peaks)
    if (n >= fit_n_min && f > floor) usable.emplace_back(n, f);
  if (usable.size() < 3)
    throw FitError("fit_c1: fewer than 3 usable points above alpha in the fit "
                   "window");

  // Ordinary least squares on y = log(F - alpha) vs N; the model intercept
  // is log(1 - alpha) but fitting it keeps c1 unbiased when the sampled peak
  // sits slightly below 1 (grid quantization).
  double sn = 0.0, sy = 0.0, snn = 0.0, sny = 0.0;
  for (const auto& [n, f] : usable) {
    const double y = std::log(f - alpha);
    sn += n;
    sy += y;
    snn += static_cast<double>(n) * n;
    sny += n * y;
  }
  const double count = static_cast<double>(usable.size());
  const double det = count * snn - sn * sn;
  if (det == 0.0) throw FitError("fit_c1: degenerate depth values");
  const double slope = (count * sny - sn * sy) / det;
  const double intercept = (sy - slope * sn) / count;
  double c1 = std::exp(slope);
  if (c1 > 1.0 + 1e-9) c1 = 1.0 + 1e-9;

  double rss = 0.0;
  for (const auto& [n, f] : usable) {
    const double predicted = alpha + std::exp(intercept) * std::pow(c1, n);
    rss += (predicted - f) * (predicted - f);
  }
  return C1Fit{c1, std::sqrt(rss / usable.size()),
               static_cast<int>(usable.size())};
}

std::vector<double> rescale(const std::vector<double>& series, double c1,
                            double alpha, int n_steps, int* clamp_events) {
  if (!(c1 > 0.0)) throw FitError("rescale: c1 must be positive");
  const double scale = std::pow(c1, n_steps);
  if (scale < 1e-6)
    throw FitError("rescale: c1^N below 1e-6 at N = " +
                   std::to_string(n_steps) + ", depth is unmitigatable");
  const double offset = alpha * (1.0 - scale);
  std::vector<double> out(series.size());
  int clamps = 0;
  for (std::size_t i = 0; i < series.size(); ++i) {
    double v = (series[i] - offset) / scale;
    if (v < 0.0 || v > 1.0) {
      v = std::min(1.0, std::max(0.0, v));
      ++clamps;
    }
    out[i] = v;
  }
  if (clamp_events) *clamp_events += clamps;
  return out;
}

C2Fit fit_c2(const std::vector<std::pair<int, double>>& hitting_times,
             int fit_n_min) {
  std::vector<std::pair<int, double>> usable;
  for (const auto& [n, t] : hitting_times)
    if (n >= fit_n_min) usable.emplace_back(n, t);
  if (usable.size() < 3)
    throw FitError("fit_c2: fewer than 3 points in the fit window");

  double sn = 0.0, st = 0.0, snn = 0.0, snt = 0.0;
  for (const auto& [n, t] : usable) {
    sn += n;
    st += t;
    snn += static_cast<double>(n) * n;
    snt += n * t;
  }
  const double count = static_cast<double>(usable.size());
  const double det = count * snn - sn * sn;
  if (det == 0.0) throw FitError("fit_c2: degenerate depth values");
  const double slope = (count * snt - sn * st) / det;
  const double intercept = (st - slope * sn) / count;

  double rss = 0.0;
  for (const auto& [n, t] : usable) {
    const double predicted = intercept + slope * n;
    rss += (predicted - t) * (predicted - t);
  }
  return C2Fit{slope, intercept, std::sqrt(rss / usable.size()),
               static_cast<int>(usable.size())};
}

std::vector<double> shift_time(const std::vector<double>& t_grid, double c2,
                               int n_steps) {
  std::vector<double> out(t_grid.size());
  const double shift = c2 * n_steps;
  for (std::size_t i = 0; i < t_grid.size(); ++i) out[i] = t_grid[i] - shift;
  return out;
}

MitigationOutcome mitigate(const SweepResult& sweep, int fit_n_min) {
  if (sweep.records.empty()) throw InputError("mitigate: empty sweep");

  const double alpha = estimate_alpha(sweep.records.back().fidelity);

  std::vector<std::pair<int, double>> peaks, hits;
  peaks.reserve(sweep.records.size());
  hits.reserve(sweep.records.size());
  for (const TransferRecord& r : sweep.records) {
    peaks.emplace_back(r.n_steps, r.peak_fidelity);
    hits.emplace_back(r.n_steps, r.hitting_time);
  }

  const C1Fit c1 = fit_c1(peaks, alpha, fit_n_min);
  const C2Fit c2 = fit_c2(hits, fit_n_min);

  MitigationOutcome outcome;
  outcome.corrected.label = sweep.label.empty() ? "mitigated"
                                                : sweep.label + "+mitigated";
  outcome.corrected.records.reserve(sweep.records.size());
  for (const TransferRecord& r : sweep.records) {
    std::vector<double> values =
        rescale(r.fidelity, c1.c1, alpha, r.n_steps, &outcome.clamp_events);
    std::vector<double> grid = shift_time(r.t_grid, c2.c2, r.n_steps);
    outcome.corrected.records.push_back(
        make_record(r.n_steps, std::move(grid), std::move(values)));
  }

  outcome.fit.alpha = alpha;
  outcome.fit.c1 = c1.c1;
  outcome.fit.c2 = c2.c2;
  outcome.fit.fit_n_min = fit_n_min;
  outcome.fit.fit_n_max = sweep.records.back().n_steps;
  outcome.fit.c1_residual_rms = c1.residual_rms;
  outcome.fit.c2_residual_rms = c2.residual_rms;
  outcome.fit.t_ideal_hitting = c2.intercept;
  return outcome;
}

}  // namespace pst
