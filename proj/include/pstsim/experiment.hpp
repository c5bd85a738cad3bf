#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pstsim/mitigation.hpp"
#include "pstsim/pst_simulator.hpp"

namespace pst {

struct ChainCfg {
  int n_qubits = 3;
  std::optional<double> coupling_j;  // uniform couplings
  std::optional<double> coupling_c;  // perfect-transfer profile
  ChainSpec build() const;
};

struct TimeWindowCfg {
  double t_min = 0.0;
  double t_max = 3.141592653589793;
  int grid_points = 101;
};

struct DepthSweepCfg {
  int n_min = 1;
  int n_max = 30;
};

struct MitigationCfg {
  bool enabled = true;
  int fit_n_min = 6;
};

struct RunSpec {
  std::string name;
  NoiseModel noise;
};

struct ExperimentConfig {
  ChainCfg chain;
  TimeWindowCfg time_window;
  DepthSweepCfg depth_sweep;
  MitigationCfg mitigation;
  std::string baseline;  // run name used for comparisons; may be empty
  std::vector<RunSpec> runs;

  void validate() const;
};

ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& file);
std::string serialize_config(const ExperimentConfig& config);

struct RunOutput {
  std::string name;
  SweepResult sweep;
  std::optional<MitigationOutcome> mitigation;
};

/// Per-depth L1 dynamics errors against the baseline, evaluated on the grid
/// points where the shifted series is defined so the three columns compare
/// like with like.
struct ErrorRow {
  int n_steps = 0;
  int points_used = 0;
  double raw = 0.0;
  double rescaled = 0.0;
  double rescaled_shifted = 0.0;
};

struct ComparisonRow {
  std::string run;
  std::string baseline;
  double delta_fidelity = 0.0;
  double delta_hitting = 0.0;
};

struct ExperimentResult {
  std::vector<double> t_grid;
  std::vector<RunOutput> runs;
  std::vector<ComparisonRow> comparisons;
  std::map<std::string, std::vector<ErrorRow>> dynamics_errors;

  const RunOutput* find(const std::string& name) const;
};

/// Runs every configured noise scenario, writes deterministic CSV/JSON
/// artifacts under out_dir, and returns the in-memory results.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir,
                                int threads = 1);

std::vector<ErrorRow> dynamics_error_rows(const SweepResult& baseline,
                                          const SweepResult& noisy,
                                          const MitigationOutcome& mitigation);

SweepResult load_sweep(const std::filesystem::path& run_dir);
void write_sweep(const std::filesystem::path& run_dir,
                 const SweepResult& sweep);
void write_mitigation(const std::filesystem::path& run_dir,
                      const MitigationOutcome& outcome);

/// metric is one of delta_fidelity / delta_hitting.
double compare_metric(const SweepResult& a, const SweepResult& b,
                      const std::string& metric);

/// Per-depth raw dynamics error between two runs on identical grids.
std::vector<std::pair<int, double>> compare_dynamics(const SweepResult& a,
                                                     const SweepResult& b);

std::string format_double(double v);

}  // namespace pst
