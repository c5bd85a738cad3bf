#pragma once

#include <vector>

#include "pstsim/analysis.hpp"

namespace pst {

// Post-processing works from observed fidelity series alone; this header has
// no view of noise parameters or the simulator by design.

/// Fitted mitigation model F(N, t) = alpha (1 - c1^N) + c1^N f(t - c2 N).
struct FitResult {
  double alpha = 0.0;   // stationary fidelity value
  double c1 = 1.0;      // per-step retention factor
  double c2 = 0.0;      // hitting-time drift per Trotter step
  int fit_n_min = 0;
  int fit_n_max = 0;
  double c1_residual_rms = 0.0;
  double c2_residual_rms = 0.0;
  double t_ideal_hitting = 0.0;  // intercept of the c2 fit
};

/// Arithmetic mean of a fidelity series; feed it the largest-depth sweep.
double estimate_alpha(const std::vector<double>& series);

struct C1Fit {
  double c1 = 1.0;
  double residual_rms = 0.0;
  int points_used = 0;
};

/// Least squares for c1 on the linearized model
/// log(F(N) - alpha) = N log c1 + log(1 - alpha), window N >= fit_n_min,
/// points within 1e-4 of alpha excluded.
C1Fit fit_c1(const std::vector<std::pair<int, double>>& peaks, double alpha,
             int fit_n_min = 6);

/// Affine inverse (x - alpha (1 - c1^N)) / c1^N, clamped to [0, 1] with clamp
/// events counted. Refuses when c1^N underflows below 1e-6.
std::vector<double> rescale(const std::vector<double>& series, double c1,
                            double alpha, int n_steps,
                            int* clamp_events = nullptr);

struct C2Fit {
  double c2 = 0.0;
  double intercept = 0.0;  // T_ideal estimate
  double residual_rms = 0.0;
  int points_used = 0;
};

/// Ordinary least-squares line through (N, T_hitting(N)), window N >= fit_n_min.
C2Fit fit_c2(const std::vector<std::pair<int, double>>& hitting_times,
             int fit_n_min = 6);

/// Relabel the grid t -> t - c2 N.
std::vector<double> shift_time(const std::vector<double>& t_grid, double c2,
                               int n_steps);

struct MitigationOutcome {
  SweepResult corrected;
  FitResult fit;
  int clamp_events = 0;
};

/// estimate_alpha -> fit_c1 -> rescale per N -> fit_c2 -> shift_time per N.
MitigationOutcome mitigate(const SweepResult& sweep, int fit_n_min = 6);

}  // namespace pst
