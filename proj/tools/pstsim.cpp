#include <cstdio>
#include <sstream>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pstsim/experiment.hpp"

namespace fs = std::filesystem;

namespace {

void print_error(const char* kind, const std::string& message,
                 const std::string& field = "") {
  nlohmann::json err = {{"error", kind}, {"message", message}};
  if (!field.empty()) err["field"] = field;
  std::cerr << err.dump() << std::endl;
}

int run_command(const std::string& config_file, const std::string& out_dir,
                int grid_points, int threads) {
  pst::ExperimentConfig config = pst::load_config(config_file);
  if (grid_points > 0) config.time_window.grid_points = grid_points;

  const auto result = pst::run_experiment(config, out_dir, threads);

  for (const auto& run : result.runs) {
    std::cout << run.name << ": peak(N=" << run.sweep.records.back().n_steps
              << ") = "
              << pst::format_double(run.sweep.records.back().peak_fidelity);
    if (run.mitigation) {
      const auto& fit = run.mitigation->fit;
      std::cout << "  alpha = " << pst::format_double(fit.alpha)
                << "  c1 = " << pst::format_double(fit.c1)
                << "  c2 = " << pst::format_double(fit.c2);
    }
    std::cout << '\n';
  }
  for (const auto& cmp : result.comparisons)
    std::cout << cmp.run << " vs " << cmp.baseline << ": delta_fidelity = "
              << pst::format_double(cmp.delta_fidelity)
              << "  delta_hitting = " << pst::format_double(cmp.delta_hitting)
              << '\n';
  std::cout << "artifacts written to " << out_dir << '\n';
  return 0;
}

int compare_command(const std::string& dir_a, const std::string& dir_b,
                    const std::string& metric, const std::string& out_file) {
  const pst::SweepResult a = pst::load_sweep(dir_a);
  const pst::SweepResult b = pst::load_sweep(dir_b);

  std::string report;
  if (metric == "dynamics_error") {
    std::ostringstream csv;
    csv << "n_steps,dynamics_error\n";
    for (const auto& [n, err] : pst::compare_dynamics(a, b))
      csv << n << ',' << pst::format_double(err) << '\n';
    report = csv.str();
  } else {
    nlohmann::json j = {{"metric", metric},
                        {"run_a", dir_a},
                        {"run_b", dir_b},
                        {"value", pst::compare_metric(a, b, metric)}};
    report = j.dump(2) + "\n";
  }
  std::cout << report;
  if (!out_file.empty()) {
    std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
    if (!out) {
      print_error("io", "cannot open " + out_file);
      return 1;
    }
    out << report;
  }
  return 0;
}

int mitigate_command(const std::string& run_dir, const std::string& out_dir,
                     int fit_n_min) {
  const pst::SweepResult sweep = pst::load_sweep(run_dir);
  const pst::MitigationOutcome outcome = pst::mitigate(sweep, fit_n_min);
  const fs::path target = out_dir.empty() ? fs::path(run_dir) : fs::path(out_dir);
  pst::write_mitigation(target, outcome);
  std::cout << "alpha = " << pst::format_double(outcome.fit.alpha)
            << "  c1 = " << pst::format_double(outcome.fit.c1)
            << "  c2 = " << pst::format_double(outcome.fit.c2)
            << "  clamp_events = " << outcome.clamp_events << '\n'
            << "mitigated series written to " << target.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trotterized perfect-state-transfer noise simulator"};
  app.require_subcommand(1);

  std::string config_file, out_dir = "out";
  int grid_points = 0;
  int threads = 1;
  auto* run = app.add_subcommand("run", "run a configured experiment sweep");
  run->add_option("config", config_file, "experiment config (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out-dir", out_dir, "output directory");
  run->add_option("--grid-points", grid_points,
                  "override the config's time grid size");
  run->add_option("--threads", threads, "worker threads for the depth sweep");

  std::string dir_a, dir_b, metric, compare_out;
  auto* compare = app.add_subcommand("compare", "compare two finished runs");
  compare->add_option("run_a", dir_a, "first run directory")->required();
  compare->add_option("run_b", dir_b, "second run directory")->required();
  compare->add_option("--metric", metric, "metric to evaluate")
      ->required()
      ->check(CLI::IsMember({"delta_fidelity", "delta_hitting",
                             "dynamics_error"}));
  compare->add_option("--out", compare_out, "also write the report here");

  std::string mit_dir, mit_out;
  int fit_n_min = 6;
  auto* mit = app.add_subcommand("mitigate", "post-process a finished run");
  mit->add_option("run_dir", mit_dir, "run directory")->required();
  mit->add_option("--out-dir", mit_out, "output directory (default: in place)");
  mit->add_option("--fit-n-min", fit_n_min, "first depth used by the fits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed())
      return run_command(config_file, out_dir, grid_points, threads);
    if (compare->parsed())
      return compare_command(dir_a, dir_b, metric, compare_out);
    if (mit->parsed()) return mitigate_command(mit_dir, mit_out, fit_n_min);
  } catch (const pst::ConfigError& e) {
    print_error("config", e.what(), e.field);
    return 2;
  } catch (const pst::InputError& e) {
    print_error("input", e.what());
    return 1;
  } catch (const pst::FitError& e) {
    print_error("fit", e.what());
    return 1;
  } catch (const std::exception& e) {
    print_error("internal", e.what());
    return 1;
  }
  return 0;
}
