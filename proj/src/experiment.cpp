#include "pstsim/experiment.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pst {

namespace fs = std::filesystem;
using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ChainSpec ChainCfg::build() const {
  if (coupling_j.has_value() == coupling_c.has_value())
    throw ConfigError("chain", "exactly one of coupling_j / coupling_c");
  if (coupling_j) return ChainSpec::uniform(n_qubits, *coupling_j);
  return ChainSpec::pst_profile(n_qubits, *coupling_c);
}

void ExperimentConfig::validate() const {
  if (chain.n_qubits < 2)
    throw ConfigError("chain.n_qubits", "need at least 2 qubits");
  if (chain.n_qubits > 12)
    throw ConfigError("chain.n_qubits", "dense simulation capped at 12 qubits");
  if (chain.coupling_j.has_value() == chain.coupling_c.has_value())
    throw ConfigError("chain", "exactly one of coupling_j / coupling_c");
  if (chain.coupling_j && !(*chain.coupling_j > 0.0))
    throw ConfigError("chain.coupling_j", "must be positive");
  if (chain.coupling_c && !(*chain.coupling_c > 0.0))
    throw ConfigError("chain.coupling_c", "must be positive");
  if (!(time_window.t_max > time_window.t_min))
    throw ConfigError("time_window.t_max", "must exceed t_min");
  if (time_window.grid_points < 2)
    throw ConfigError("time_window.grid_points", "need at least 2 points");
  if (depth_sweep.n_min < 1)
    throw ConfigError("depth_sweep.n_min", "must be at least 1");
  if (depth_sweep.n_max < depth_sweep.n_min)
    throw ConfigError("depth_sweep.n_max", "must be at least n_min");
  if (mitigation.fit_n_min < 1)
    throw ConfigError("mitigation.fit_n_min", "must be at least 1");
  if (runs.empty()) throw ConfigError("runs", "need at least one run");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::string field = "runs[" + std::to_string(i) + "]";
    if (runs[i].name.empty()) throw ConfigError(field + ".name", "empty name");
    for (char c : runs[i].name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-')
        throw ConfigError(field + ".name",
                          "only [A-Za-z0-9_-] allowed in run names");
    for (std::size_t j = 0; j < i; ++j)
      if (runs[j].name == runs[i].name)
        throw ConfigError(field + ".name", "duplicate run name");
    try {
      runs[i].noise.validate();
    } catch (const InputError& e) {
      throw ConfigError(field + ".noise", e.what());
    }
  }
  if (!baseline.empty()) {
    bool found = false;
    for (const RunSpec& r : runs) found = found || r.name == baseline;
    if (!found)
      throw ConfigError("baseline", "no run named '" + baseline + "'");
  }
}

namespace {

const json& member(const json& j, const std::string& path, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw ConfigError(path + "." + key, "missing required field");
  return *it;
}

double as_double(const json& j, const std::string& field) {
  if (!j.is_number())
    throw ConfigError(field, "expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& field) {
  if (!j.is_number_integer())
    throw ConfigError(field, "expected an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "expected a string");
  return j.get<std::string>();
}

GateError1q parse_gate_error_1q(const json& j, const std::string& path) {
  GateError1q ge;
  const std::string type = as_string(member(j, path, "type"), path + ".type");
  if (type == "depolarizing") {
    ge.kind = GateError1q::Kind::Depolarizing;
    ge.q = as_double(member(j, path, "q"), path + ".q");
  } else if (type == "pauli") {
    ge.kind = GateError1q::Kind::Pauli;
    ge.px = as_double(member(j, path, "p_x"), path + ".p_x");
    ge.py = as_double(member(j, path, "p_y"), path + ".p_y");
    ge.pz = as_double(member(j, path, "p_z"), path + ".p_z");
  } else {
    throw ConfigError(path + ".type", "expected depolarizing or pauli");
  }
  return ge;
}

GateError2q parse_gate_error_2q(const json& j, const std::string& path) {
  GateError2q ge;
  const std::string type = as_string(member(j, path, "type"), path + ".type");
  if (type == "depolarizing") {
    const bool each = j.contains("q_each");
    const bool total = j.contains("pair_error_total");
    if (each == total)
      throw ConfigError(path,
                        "exactly one of q_each / pair_error_total required");
    if (each) {
      ge.kind = GateError2q::Kind::DepolarizingEach;
      ge.q = as_double(j.at("q_each"), path + ".q_each");
    } else {
      ge.kind = GateError2q::Kind::DepolarizingPairTotal;
      ge.q = as_double(j.at("pair_error_total"), path + ".pair_error_total");
    }
  } else if (type == "pauli") {
    ge.kind = GateError2q::Kind::Pauli;
    ge.px = as_double(member(j, path, "p_x"), path + ".p_x");
    ge.py = as_double(member(j, path, "p_y"), path + ".p_y");
    ge.pz = as_double(member(j, path, "p_z"), path + ".p_z");
  } else {
    throw ConfigError(path + ".type", "expected depolarizing or pauli");
  }
  return ge;
}

NoiseModel parse_noise(const json& j, const std::string& path) {
  NoiseModel noise;
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "gate_error_1q") {
      noise.gate_error_1q = parse_gate_error_1q(value, path + ".gate_error_1q");
    } else if (key == "gate_error_2q") {
      noise.gate_error_2q = parse_gate_error_2q(value, path + ".gate_error_2q");
    } else if (key == "decoherence") {
      DecoherenceSpec d;
      d.t1_us = as_double(member(value, path + ".decoherence", "t1_us"),
                          path + ".decoherence.t1_us");
      d.t2_us = as_double(member(value, path + ".decoherence", "t2_us"),
                          path + ".decoherence.t2_us");
      noise.decoherence = d;
    } else if (key == "crosstalk") {
      CrosstalkSpec c;
      const bool step = value.contains("zeta_per_step_rad");
      const bool model = value.contains("zeta_model_freq");
      const bool phys = value.contains("zeta_rad_per_s");
      if (int(step) + int(model) + int(phys) != 1)
        throw ConfigError(path + ".crosstalk",
                          "exactly one of zeta_per_step_rad / zeta_model_freq "
                          "/ zeta_rad_per_s required");
      if (step) {
        c.mode = CrosstalkMode::PerStepRad;
        c.zeta = as_double(value.at("zeta_per_step_rad"),
                           path + ".crosstalk.zeta_per_step_rad");
      } else if (model) {
        c.mode = CrosstalkMode::ModelFrequency;
        c.zeta = as_double(value.at("zeta_model_freq"),
                           path + ".crosstalk.zeta_model_freq");
      } else {
        c.mode = CrosstalkMode::RadPerSecond;
        c.zeta = as_double(value.at("zeta_rad_per_s"),
                           path + ".crosstalk.zeta_rad_per_s");
      }
      noise.crosstalk = c;
    } else if (key == "durations") {
      noise.durations.l1q_ns = as_double(
          member(value, path + ".durations", "l1q_ns"), path + ".durations.l1q_ns");
      noise.durations.l2q_ns = as_double(
          member(value, path + ".durations", "l2q_ns"), path + ".durations.l2q_ns");
    } else if (key == "placement_1q") {
      const std::string v = as_string(value, path + ".placement_1q");
      if (v == "per_gate") noise.placement_1q = Placement1q::PerGate;
      else if (v == "per_block") noise.placement_1q = Placement1q::PerBlock;
      else throw ConfigError(path + ".placement_1q",
                             "expected per_gate or per_block");
    } else if (key == "placement_2q") {
      const std::string v = as_string(value, path + ".placement_2q");
      if (v == "per_cnot") noise.placement_2q = Placement2q::PerCnot;
      else if (v == "per_block") noise.placement_2q = Placement2q::PerBlock;
      else throw ConfigError(path + ".placement_2q",
                             "expected per_cnot or per_block");
    } else if (key == "decoherence_qubits") {
      const std::string v = as_string(value, path + ".decoherence_qubits");
      if (v == "gated") noise.decoherence_qubits = DecoherenceQubits::Gated;
      else if (v == "all") noise.decoherence_qubits = DecoherenceQubits::All;
      else throw ConfigError(path + ".decoherence_qubits",
                             "expected gated or all");
    } else {
      throw ConfigError(path + "." + key, "unknown field");
    }
  }
  return noise;
}

json noise_to_json(const NoiseModel& noise) {
  json j = json::object();
  if (noise.gate_error_1q) {
    const auto& ge = *noise.gate_error_1q;
    if (ge.kind == GateError1q::Kind::Depolarizing)
      j["gate_error_1q"] = {{"type", "depolarizing"}, {"q", ge.q}};
    else
      j["gate_error_1q"] = {{"type", "pauli"}, {"p_x", ge.px},
                            {"p_y", ge.py}, {"p_z", ge.pz}};
  }
  if (noise.gate_error_2q) {
    const auto& ge = *noise.gate_error_2q;
    switch (ge.kind) {
      case GateError2q::Kind::DepolarizingEach:
        j["gate_error_2q"] = {{"type", "depolarizing"}, {"q_each", ge.q}};
        break;
      case GateError2q::Kind::DepolarizingPairTotal:
        j["gate_error_2q"] = {{"type", "depolarizing"},
                              {"pair_error_total", ge.q}};
        break;
      case GateError2q::Kind::Pauli:
        j["gate_error_2q"] = {{"type", "pauli"}, {"p_x", ge.px},
                              {"p_y", ge.py}, {"p_z", ge.pz}};
        break;
    }
  }
  if (noise.decoherence) {
    j["decoherence"] = {{"t1_us", noise.decoherence->t1_us},
                        {"t2_us", noise.decoherence->t2_us}};
    j["decoherence_qubits"] =
        noise.decoherence_qubits == DecoherenceQubits::Gated ? "gated" : "all";
  }
  if (noise.crosstalk) {
    json c = json::object();
    switch (noise.crosstalk->mode) {
      case CrosstalkMode::PerStepRad:
        c["zeta_per_step_rad"] = noise.crosstalk->zeta;
        break;
      case CrosstalkMode::ModelFrequency:
        c["zeta_model_freq"] = noise.crosstalk->zeta;
        break;
      case CrosstalkMode::RadPerSecond:
        c["zeta_rad_per_s"] = noise.crosstalk->zeta;
        break;
    }
    j["crosstalk"] = c;
  }
  if (!j.empty()) {
    j["durations"] = {{"l1q_ns", noise.durations.l1q_ns},
                      {"l2q_ns", noise.durations.l2q_ns}};
    j["placement_1q"] =
        noise.placement_1q == Placement1q::PerGate ? "per_gate" : "per_block";
    j["placement_2q"] =
        noise.placement_2q == Placement2q::PerCnot ? "per_cnot" : "per_block";
  }
  return j;
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  ExperimentConfig cfg;

  const json& chain = member(j, "", "chain");
  cfg.chain.n_qubits = as_int(member(chain, "chain", "n_qubits"),
                              "chain.n_qubits");
  if (chain.contains("coupling_j"))
    cfg.chain.coupling_j = as_double(chain.at("coupling_j"), "chain.coupling_j");
  if (chain.contains("coupling_c"))
    cfg.chain.coupling_c = as_double(chain.at("coupling_c"), "chain.coupling_c");

  const json& window = member(j, "", "time_window");
  cfg.time_window.t_min =
      as_double(member(window, "time_window", "t_min"), "time_window.t_min");
  cfg.time_window.t_max =
      as_double(member(window, "time_window", "t_max"), "time_window.t_max");
  cfg.time_window.grid_points = as_int(
      member(window, "time_window", "grid_points"), "time_window.grid_points");

  const json& sweep = member(j, "", "depth_sweep");
  cfg.depth_sweep.n_min =
      as_int(member(sweep, "depth_sweep", "n_min"), "depth_sweep.n_min");
  cfg.depth_sweep.n_max =
      as_int(member(sweep, "depth_sweep", "n_max"), "depth_sweep.n_max");

  if (j.contains("mitigation")) {
    const json& m = j.at("mitigation");
    if (!member(m, "mitigation", "enabled").is_boolean())
      throw ConfigError("mitigation.enabled", "expected a boolean");
    cfg.mitigation.enabled = m.at("enabled").get<bool>();
    cfg.mitigation.fit_n_min =
        as_int(member(m, "mitigation", "fit_n_min"), "mitigation.fit_n_min");
  }

  if (j.contains("baseline"))
    cfg.baseline = as_string(j.at("baseline"), "baseline");

  const json& runs = member(j, "", "runs");
  if (!runs.is_array()) throw ConfigError("runs", "expected an array");
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const std::string path = "runs[" + std::to_string(i) + "]";
    RunSpec run;
    run.name = as_string(member(runs[i], path, "name"), path + ".name");
    run.noise = parse_noise(member(runs[i], path, "noise"), path + ".noise");
    cfg.runs.push_back(std::move(run));
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("<file>", "cannot open " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const ExperimentConfig& config) {
  json j;
  json chain = {{"n_qubits", config.chain.n_qubits}};
  if (config.chain.coupling_j) chain["coupling_j"] = *config.chain.coupling_j;
  if (config.chain.coupling_c) chain["coupling_c"] = *config.chain.coupling_c;
  j["chain"] = chain;
  j["time_window"] = {{"t_min", config.time_window.t_min},
                      {"t_max", config.time_window.t_max},
                      {"grid_points", config.time_window.grid_points}};
  j["depth_sweep"] = {{"n_min", config.depth_sweep.n_min},
                      {"n_max", config.depth_sweep.n_max}};
  j["mitigation"] = {{"enabled", config.mitigation.enabled},
                     {"fit_n_min", config.mitigation.fit_n_min}};
  if (!config.baseline.empty()) j["baseline"] = config.baseline;
  json runs = json::array();
  for (const RunSpec& run : config.runs)
    runs.push_back({{"name", run.name}, {"noise", noise_to_json(run.noise)}});
  j["runs"] = runs;
  return j.dump(2) + "\n";
}

namespace {

void atomic_write(const fs::path& file, const std::string& content) {
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, file);
}

std::string series_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "n_steps,t_model,fidelity\n";
  for (const TransferRecord& r : sweep.records)
    for (std::size_t i = 0; i < r.t_grid.size(); ++i)
      out << r.n_steps << ',' << format_double(r.t_grid[i]) << ','
          << format_double(r.fidelity[i]) << '\n';
  return out.str();
}

std::string hitting_csv(const SweepResult& sweep) {
  std::ostringstream out;
  out << "n_steps,hitting_time,peak_fidelity\n";
  for (const TransferRecord& r : sweep.records)
    out << r.n_steps << ',' << format_double(r.hitting_time) << ','
        << format_double(r.peak_fidelity) << '\n';
  return out.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

json fit_to_json(const MitigationOutcome& outcome) {
  return json{{"alpha", outcome.fit.alpha},
              {"c1", outcome.fit.c1},
              {"c2", outcome.fit.c2},
              {"fit_n_min", outcome.fit.fit_n_min},
              {"fit_n_max", outcome.fit.fit_n_max},
              {"c1_residual_rms", outcome.fit.c1_residual_rms},
              {"c2_residual_rms", outcome.fit.c2_residual_rms},
              {"t_ideal_hitting", outcome.fit.t_ideal_hitting},
              {"clamp_events", outcome.clamp_events}};
}

}  // namespace

void write_sweep(const fs::path& run_dir, const SweepResult& sweep) {
  fs::create_directories(run_dir);
  atomic_write(run_dir / "fidelity_series.csv", series_csv(sweep));
  atomic_write(run_dir / "hitting_times.csv", hitting_csv(sweep));
}

void write_mitigation(const fs::path& run_dir,
                      const MitigationOutcome& outcome) {
  fs::create_directories(run_dir);
  atomic_write(run_dir / "mitigated_series.csv", series_csv(outcome.corrected));
  atomic_write(run_dir / "mitigated_hitting_times.csv",
               hitting_csv(outcome.corrected));
  atomic_write(run_dir / "fit_result.json", fit_to_json(outcome).dump(2) + "\n");
}

SweepResult load_sweep(const fs::path& run_dir) {
  const fs::path file = run_dir / "fidelity_series.csv";
  std::ifstream in(file);
  if (!in) throw InputError("load_sweep: cannot open " + file.string());
  std::string line;
  if (!std::getline(in, line) || line != "n_steps,t_model,fidelity")
    throw InputError("load_sweep: unexpected header in " + file.string());

  SweepResult sweep;
  sweep.label = run_dir.filename().string();
  int current_n = -1;
  std::vector<double> grid, values;
  auto flush = [&] {
    if (current_n >= 0)
      sweep.records.push_back(
          make_record(current_n, std::move(grid), std::move(values)));
    grid.clear();
    values.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 3)
      throw InputError("load_sweep: malformed row in " + file.string());
    const int n = std::stoi(fields[0]);
    if (n != current_n) {
      if (n < current_n)
        throw InputError("load_sweep: depths must increase in " +
                         file.string());
      flush();
      current_n = n;
    }
    grid.push_back(std::stod(fields[1]));
    values.push_back(std::stod(fields[2]));
  }
  flush();
  if (sweep.records.empty())
    throw InputError("load_sweep: no rows in " + file.string());
  return sweep;
}

double compare_metric(const SweepResult& a, const SweepResult& b,
                      const std::string& metric) {
  if (metric == "delta_fidelity") return delta_fidelity(a, b);
  if (metric == "delta_hitting") return delta_hitting(a, b);
  throw InputError("compare_metric: unknown metric " + metric);
}

std::vector<std::pair<int, double>> compare_dynamics(const SweepResult& a,
                                                     const SweepResult& b) {
  if (a.records.size() != b.records.size())
    throw InputError("compare_dynamics: sweeps cover different N ranges");
  std::vector<std::pair<int, double>> rows;
  rows.reserve(a.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const TransferRecord& ra = a.records[i];
    const TransferRecord& rb = b.records[i];
    if (ra.n_steps != rb.n_steps || ra.t_grid != rb.t_grid)
      throw InputError("compare_dynamics: incompatible grids");
    rows.emplace_back(ra.n_steps, dynamics_error(ra.fidelity, rb.fidelity));
  }
  return rows;
}

std::vector<ErrorRow> dynamics_error_rows(const SweepResult& baseline,
                                          const SweepResult& noisy,
                                          const MitigationOutcome& mitigation) {
  if (baseline.records.size() != noisy.records.size() ||
      noisy.records.size() != mitigation.corrected.records.size())
    throw InputError("dynamics_error_rows: sweeps cover different N ranges");

  std::vector<ErrorRow> rows;
  rows.reserve(noisy.records.size());
  for (std::size_t i = 0; i < noisy.records.size(); ++i) {
    const TransferRecord& ref = baseline.records[i];
    const TransferRecord& raw = noisy.records[i];
    const TransferRecord& shifted = mitigation.corrected.records[i];
    if (ref.t_grid != raw.t_grid)
      throw InputError("dynamics_error_rows: incompatible grids");

    // Rescaled-only series: the corrected values live on the original grid.
    const std::vector<double>& rescaled = shifted.fidelity;

    ErrorRow row;
    row.n_steps = raw.n_steps;
    for (std::size_t k = 0; k < ref.t_grid.size(); ++k) {
      const auto moved =
          interp_linear(shifted.t_grid, shifted.fidelity, ref.t_grid[k]);
      if (!moved) continue;
      ++row.points_used;
      row.raw += std::abs(ref.fidelity[k] - raw.fidelity[k]);
      row.rescaled += std::abs(ref.fidelity[k] - rescaled[k]);
      row.rescaled_shifted += std::abs(ref.fidelity[k] - *moved);
    }
    rows.push_back(row);
  }
  return rows;
}

const RunOutput* ExperimentResult::find(const std::string& name) const {
  for (const RunOutput& run : runs)
    if (run.name == name) return &run;
  return nullptr;
}

ExperimentResult run_experiment(const ExperimentConfig& config,
                                const fs::path& out_dir, int threads) {
  config.validate();
  const ChainSpec chain = config.chain.build();
  chain.validate();

  ExperimentResult result;
  result.t_grid = linspace(config.time_window.t_min, config.time_window.t_max,
                           config.time_window.grid_points);

  fs::create_directories(out_dir);
  atomic_write(out_dir / "config.json", serialize_config(config));

  for (const RunSpec& run : config.runs) {
    RunOutput output;
    output.name = run.name;
    output.sweep = sweep_depths(chain, run.noise, result.t_grid,
                                config.depth_sweep.n_min,
                                config.depth_sweep.n_max, threads);
    output.sweep.label = run.name;
    if (config.mitigation.enabled)
      output.mitigation =
          mitigate(output.sweep, config.mitigation.fit_n_min);
    result.runs.push_back(std::move(output));
  }

  for (const RunOutput& run : result.runs) {
    const fs::path run_dir = out_dir / run.name;
    write_sweep(run_dir, run.sweep);
    if (run.mitigation) write_mitigation(run_dir, *run.mitigation);
  }

  json summary;
  summary["runs"] = json::object();
  for (const RunOutput& run : result.runs) {
    json entry;
    const TransferRecord& deepest = run.sweep.records.back();
    entry["peak_fidelity_at_n_max"] = deepest.peak_fidelity;
    entry["hitting_time_at_n_max"] = deepest.hitting_time;
    if (run.mitigation) entry["fit"] = fit_to_json(*run.mitigation);
    summary["runs"][run.name] = entry;
  }

  if (!config.baseline.empty()) {
    const RunOutput* base = result.find(config.baseline);
    json comparisons = json::array();
    for (const RunOutput& run : result.runs) {
      if (run.name == config.baseline) continue;
      ComparisonRow row;
      row.run = run.name;
      row.baseline = config.baseline;
      row.delta_fidelity = delta_fidelity(run.sweep, base->sweep);
      row.delta_hitting = delta_hitting(run.sweep, base->sweep);
      comparisons.push_back({{"run", row.run},
                             {"baseline", row.baseline},
                             {"delta_fidelity", row.delta_fidelity},
                             {"delta_hitting", row.delta_hitting}});
      result.comparisons.push_back(std::move(row));

      if (run.mitigation) {
        auto rows =
            dynamics_error_rows(base->sweep, run.sweep, *run.mitigation);
        std::ostringstream csv;
        csv << "n_steps,points_used,error_raw,error_rescaled,"
               "error_rescaled_shifted\n";
        for (const ErrorRow& r : rows)
          csv << r.n_steps << ',' << r.points_used << ','
              << format_double(r.raw) << ',' << format_double(r.rescaled)
              << ',' << format_double(r.rescaled_shifted) << '\n';
        atomic_write(out_dir / run.name / "dynamics_error.csv", csv.str());
        result.dynamics_errors[run.name] = std::move(rows);
      }
    }
    summary["comparisons"] = comparisons;
  }

  atomic_write(out_dir / "summary.json", summary.dump(2) + "\n");
  return result;
}

}  // namespace pst
