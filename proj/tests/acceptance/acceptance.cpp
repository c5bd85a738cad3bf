// Acceptance suite: runs every headline requirement end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "../oracles.hpp"
#include "pstsim/experiment.hpp"
#include "pstsim/mitigation.hpp"
#include "pstsim/pst_simulator.hpp"

using namespace pst;
namespace tt = pst::testing;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.141592653589793;

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail) {
  std::printf("%s  criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

fs::path config_dir() { return fs::path(PSTSIM_CONFIG_DIR); }

fs::path scratch_dir(const char* tag) {
  const fs::path dir =
      fs::temp_directory_path() / (std::string("pstsim_acceptance_") + tag);
  fs::remove_all(dir);
  return dir;
}

// ---------------------------------------------------------------- 1
void criterion_channels() {
  double worst_completeness = 0.0;
  double worst_trace = 0.0;
  double worst_herm = 0.0;

  auto exercise = [&](const NoiseChannel& ch) {
    worst_completeness = std::max(worst_completeness, completeness_defect(ch));
    const int n = ch.arity == 2 ? 3 : 2;
    const DensityMatrix rho = tt::random_density(n);
    std::vector<int> targets = {0};
    if (ch.arity == 2) targets = {0, 1};
    const DensityMatrix out = apply_channel(rho, ch, targets);
    worst_trace = std::max(worst_trace,
                           std::abs(out.m.trace() - Complex(1.0, 0.0)));
    worst_herm = std::max(worst_herm, max_abs_diff(out.m, out.m.adjoint()));
  };

  for (int trial = 0; trial < 60; ++trial) {
    exercise(depolarizing_1q(tt::uniform(0.0, 1.0)));
    exercise(pauli_1q(tt::uniform(0.0, 0.33), tt::uniform(0.0, 0.33),
                      tt::uniform(0.0, 0.33)));
    exercise(lift_2q(depolarizing_1q(tt::uniform(0.0, 1.0))));
    exercise(thermal_t1(1.0, tt::uniform(0.0, 4.0)));
    exercise(dephasing_t2(1.0, tt::uniform(0.0, 4.0)));
    exercise(NoiseChannel{
        2, {crosstalk_zz(tt::uniform(-3.0, 3.0), tt::uniform(0.0, 2.0)).m}});
  }

  report(1, worst_completeness < 1e-12 && worst_trace < 1e-10 &&
                worst_herm < 1e-10,
         "channel completeness / trace / Hermiticity",
         "completeness " + fmt(worst_completeness) + ", trace " +
             fmt(worst_trace) + ", herm " + fmt(worst_herm));
}

// ---------------------------------------------------------------- 2
void criterion_pauli_equivalence() {
  double worst_map = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const double p = tt::uniform(1e-5, 0.1);
    const NoiseChannel depol = depolarizing_1q(4.0 * p / 3.0);
    const NoiseChannel pauli = pauli_1q(p / 3.0, p / 3.0, p / 3.0);
    const DensityMatrix rho = tt::random_density(1);
    worst_map = std::max(worst_map,
                         max_abs_diff(apply_channel(rho, depol, {0}).m,
                                      apply_channel(rho, pauli, {0}).m));
  }
  const bool map_ok = worst_map < 1e-14;

  const auto singles = run_experiment(load_config(config_dir() / "pauli_types.json"),
                                     scratch_dir("pauli_types"), 2);
  double delta_id = 0.0;
  double worst_single = 0.0;
  for (const auto& cmp : singles.comparisons) {
    if (cmp.run == "noiseless")
      delta_id = cmp.delta_fidelity;
    else
      worst_single = std::max(worst_single, cmp.delta_fidelity);
  }

  const auto biased = run_experiment(load_config(config_dir() / "pauli_biased.json"),
                                     scratch_dir("pauli_biased"), 2);
  double worst_biased = 0.0;
  for (const auto& cmp : biased.comparisons)
    worst_biased = std::max(worst_biased, cmp.delta_fidelity);

  const bool ok = map_ok && std::abs(delta_id - 0.271) <= 0.05 &&
                  worst_single <= 0.02 && worst_biased <= 0.02;
  report(2, ok, "depolarizing-Pauli equivalence at matched intensity",
         "map " + fmt(worst_map) + ", delta_id " + fmt(delta_id) +
             ", max single-Pauli delta " + fmt(worst_single) +
             ", max biased delta " + fmt(worst_biased));
}

// ---------------------------------------------------------------- 3
void criterion_xy_oracle() {
  double worst = 0.0;
  const GateTimes times;
  for (int trial = 0; trial < 20; ++trial) {
    const double theta = tt::uniform(-kPi, kPi);
    const Matrix block = tt::compose_gates(xy_block(theta, 0, 1, times), 2);
    worst = std::max(
        worst, tt::deviation_up_to_phase(tt::xy_pair_exponential(theta), block));
  }
  report(3, worst < 1e-10, "XY block matches the exponential oracle",
         "worst deviation " + fmt(worst) + " over 20 random angles");
}

// ---------------------------------------------------------------- 4
void criterion_noiseless(const ExperimentResult& suite) {
  const ChainSpec chain = ChainSpec::uniform(3, 2.0);
  const auto fine = linspace(0.0, kPi, 1001);
  const TransferRecord record =
      fidelity_series(chain, NoiseModel{}, fine, 30);

  const double c1 = suite.find("noiseless")->mitigation->fit.c1;
  const bool ok = record.peak_fidelity >= 0.999 && std::abs(c1 - 1.0) <= 0.005;
  report(4, ok, "noiseless transfer peak and fitted c1",
         "peak " + fmt(record.peak_fidelity) + " at t " +
             fmt(record.hitting_time) + ", c1 " + fmt(c1));
}

// ---------------------------------------------------------------- 5
void criterion_fit_constants(const ExperimentResult& suite) {
  const double c1_depol = suite.find("depolarizing")->mitigation->fit.c1;
  const double c1_pos =
      suite.find("depolarizing_positive_crosstalk")->mitigation->fit.c1;
  const double c1_neg =
      suite.find("depolarizing_negative_crosstalk")->mitigation->fit.c1;

  const double c2_nf = suite.find("noiseless")->mitigation->fit.c2;
  const double c2_depol = suite.find("depolarizing")->mitigation->fit.c2;
  const double c2_pos =
      suite.find("depolarizing_positive_crosstalk")->mitigation->fit.c2;
  const double c2_neg =
      suite.find("depolarizing_negative_crosstalk")->mitigation->fit.c2;

  const bool c1_ok = std::abs(c1_depol - 0.954) <= 0.02 &&
                     std::abs(c1_pos - 0.951) <= 0.02 &&
                     std::abs(c1_neg - 0.953) <= 0.02;

  auto in_band = [](double c2) { return c2 >= 0.002 && c2 <= 0.02; };
  // Fitted-slope structure: every slope positive in band, the depolarizing
  // slope above the noise-free one, and the two crosstalk signs straddling
  // the depolarizing baseline with one clear maximum.
  const bool c2_ok =
      in_band(c2_nf) && in_band(c2_depol) && in_band(c2_pos) &&
      in_band(c2_neg) && c2_depol > c2_nf &&
      (c2_pos - c2_depol) * (c2_neg - c2_depol) < 0.0 &&
      std::max(c2_pos, c2_neg) > 1.2 * c2_depol;

  const double peak30 = suite.find("depolarizing")->sweep.records.back()
                            .peak_fidelity;
  const bool peak_ok = peak30 >= 0.15 && peak30 <= 0.45;

  report(5, c1_ok && c2_ok && peak_ok, "retention and drift constants of the noise suite",
         "c1 " + fmt(c1_depol) + "/" + fmt(c1_pos) + "/" + fmt(c1_neg) +
             ", c2 " + fmt(c2_nf) + "/" + fmt(c2_depol) + "/" + fmt(c2_pos) +
             "/" + fmt(c2_neg) + ", peak(N=30) " + fmt(peak30));
}

// ---------------------------------------------------------------- 6
void criterion_mitigation_efficacy(const ExperimentResult& suite) {
  const auto it =
      suite.dynamics_errors.find("depolarizing_positive_crosstalk");
  bool ok = it != suite.dynamics_errors.end();
  std::string detail = "rows missing";
  if (ok) {
    int checked = 0;
    for (const ErrorRow& row : it->second) {
      if (row.n_steps < 10) continue;
      ++checked;
      if (!(row.rescaled_shifted < row.rescaled && row.rescaled < row.raw))
        ok = false;
    }
    const ErrorRow& last = it->second.back();
    detail = "N >= 10 rows " + std::to_string(checked) + ", at N=30 raw " +
             fmt(last.raw) + " > rescaled " + fmt(last.rescaled) +
             " > shifted " + fmt(last.rescaled_shifted);
    ok = ok && checked >= 21;
  }
  report(6, ok, "mitigation strictly improves the positive-crosstalk run",
         detail);
}

// ---------------------------------------------------------------- 7
void criterion_synthetic_roundtrip() {
  const std::vector<double> grid = linspace(0.0, kPi, 101);
  const double step = grid[1] - grid[0];
  const double center = 25.0 * step;
  auto bump = [center](double t) {
    const double d = t - center;
    return std::exp(-d * d / 0.18);
  };

  const double c1_true = 0.93;
  const double c2_true = 2.0 * step;
  const int n_max = 30;

  double mean = 0.0;
  for (double t : grid) mean += bump(t - c2_true * n_max);
  const double alpha_true = mean / grid.size();

  SweepResult sweep;
  for (int n = 1; n <= n_max; ++n) {
    const double scale = std::pow(c1_true, n);
    std::vector<double> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      values[i] = alpha_true * (1.0 - scale) +
                  scale * bump(grid[i] - c2_true * n);
    sweep.records.push_back(make_record(n, grid, std::move(values)));
  }

  const MitigationOutcome outcome = mitigate(sweep, 6);
  const double da = std::abs(outcome.fit.alpha - alpha_true);
  const double dc1 = std::abs(outcome.fit.c1 - c1_true);
  const double dc2 = std::abs(outcome.fit.c2 - c2_true);
  report(7, da < 1e-6 && dc1 < 1e-6 && dc2 < 1e-6,
         "synthetic model round-trip recovers (alpha, c1, c2)",
         "|d alpha| " + fmt(da) + ", |d c1| " + fmt(dc1) + ", |d c2| " +
             fmt(dc2));
}

// ---------------------------------------------------------------- 8
void criterion_trotter_convergence() {
  const ChainSpec chain = ChainSpec::uniform(3, 2.0);
  std::vector<double> effective;
  for (double j : chain.couplings)
    effective.push_back(0.5 * TrotterOptions{}.angle_scale * j);
  const double t = 0.4;
  const double exact = tt::single_excitation_fidelity(effective, t);

  std::string detail = "errors";
  bool ok = true;
  double previous = 1.0;
  for (int n : {5, 10, 20, 40}) {
    const double err = std::abs(
        fidelity_series(chain, NoiseModel{}, {t}, n).fidelity[0] - exact);
    ok = ok && err < previous;
    previous = err;
    detail += " " + fmt(err);
  }
  report(8, ok, "noiseless fidelity converges to the tridiagonal oracle",
         detail);
}

// ---------------------------------------------------------------- 9
void criterion_performance(double serial_seconds) {
  const auto config = load_config(config_dir() / "noise_suite.json");
  const auto start = std::chrono::steady_clock::now();
  run_experiment(config, scratch_dir("threaded"), 2);
  const double threaded_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  const bool ok = serial_seconds < 120.0 &&
                  threaded_seconds < 0.9 * serial_seconds;
  report(9, ok, "full reproduction under 2 minutes, threads speed it up",
         "single-thread " + fmt(serial_seconds) + " s, 2 threads " +
             fmt(threaded_seconds) + " s");
}

void pin_bundled_configs() {
  // The per-experiment configs must stay in sync with the combined suite.
  const auto combined = nlohmann::json::parse(
      serialize_config(load_config(config_dir() / "noise_suite.json")));
  const char* files[] = {"exp1_noiseless.json", "exp2_depolarizing.json",
                         "exp3_depol_positive_crosstalk.json",
                         "exp4_depol_negative_crosstalk.json"};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto exp_cfg = nlohmann::json::parse(
        serialize_config(load_config(config_dir() / files[i])));
    if (exp_cfg["runs"][0] != combined["runs"][i]) {
      std::printf("note: %s diverges from noise_suite.json run %zu\n", files[i], i);
      ++g_failures;
    }
  }
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");

  criterion_channels();
  criterion_xy_oracle();
  criterion_synthetic_roundtrip();
  criterion_trotter_convergence();

  const auto suite_config = load_config(config_dir() / "noise_suite.json");
  const auto start = std::chrono::steady_clock::now();
  const ExperimentResult suite =
      run_experiment(suite_config, scratch_dir("noise_suite"), 1);
  const double serial_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  criterion_noiseless(suite);
  criterion_fit_constants(suite);
  criterion_mitigation_efficacy(suite);
  criterion_pauli_equivalence();
  criterion_performance(serial_seconds);
  pin_bundled_configs();

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
