#include "pstsim/pst_simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <thread>

namespace pst {

std::vector<double> build_couplings(int n_qubits, double c) {
  if (n_qubits < 2)
    throw InputError("build_couplings: need at least 2 qubits");
  if (!(c > 0.0)) throw InputError("build_couplings: C must be positive");
  std::vector<double> j(n_qubits - 1);
  for (int i = 1; i < n_qubits; ++i)
    j[i - 1] = c * std::sqrt(double(i) * double(n_qubits - i));
  return j;
}

ChainSpec ChainSpec::pst_profile(int n_qubits, double c) {
  return ChainSpec{n_qubits, build_couplings(n_qubits, c)};
}

ChainSpec ChainSpec::uniform(int n_qubits, double j) {
  if (n_qubits < 2) throw InputError("ChainSpec: need at least 2 qubits");
  if (!(j > 0.0)) throw InputError("ChainSpec: coupling must be positive");
  return ChainSpec{n_qubits, std::vector<double>(n_qubits - 1, j)};
}

void ChainSpec::validate() const {
  if (n_qubits < 2) throw InputError("ChainSpec: need at least 2 qubits");
  if (static_cast<int>(couplings.size()) != n_qubits - 1)
    throw InputError("ChainSpec: expected " + std::to_string(n_qubits - 1) +
                     " couplings");
  for (double j : couplings)
    if (!(j > 0.0) || !std::isfinite(j))
      throw InputError("ChainSpec: couplings must be positive and finite");
}

bool NoiseModel::any_noise() const {
  return gate_error_1q || gate_error_2q || crosstalk || decoherence;
}

void NoiseModel::validate() const {
  if (gate_error_1q) {
    const auto& ge = *gate_error_1q;
    if (ge.kind == GateError1q::Kind::Depolarizing) {
      if (!(ge.q >= 0.0 && ge.q <= 1.0))
        throw InputError("NoiseModel: 1q depolarizing q outside [0, 1]");
    } else {
      if (ge.px < 0 || ge.py < 0 || ge.pz < 0 || ge.px + ge.py + ge.pz > 1.0)
        throw InputError("NoiseModel: invalid 1q Pauli probabilities");
    }
  }
  if (gate_error_2q) {
    const auto& ge = *gate_error_2q;
    if (ge.kind == GateError2q::Kind::Pauli) {
      if (ge.px < 0 || ge.py < 0 || ge.pz < 0 || ge.px + ge.py + ge.pz > 1.0)
        throw InputError("NoiseModel: invalid 2q Pauli probabilities");
    } else if (!(ge.q >= 0.0 && ge.q <= 1.0)) {
      throw InputError("NoiseModel: 2q depolarizing intensity outside [0, 1]");
    }
  }
  if (decoherence) {
    if (!(decoherence->t1_us > 0.0) || !(decoherence->t2_us > 0.0))
      throw InputError("NoiseModel: T1 and T2 must be positive");
    if (decoherence->t2_us > 2.0 * decoherence->t1_us)
      throw InputError("NoiseModel: T2 must not exceed 2*T1");
  }
  if ((decoherence || crosstalk) &&
      (!(durations.l1q_ns > 0.0) || !(durations.l2q_ns > 0.0)))
    throw InputError(
        "NoiseModel: gate durations must be positive when decoherence or "
        "crosstalk is enabled");
}

GateTimes NoiseModel::gate_times() const {
  return GateTimes{durations.l1q_ns * 1e-9, durations.l2q_ns * 1e-9};
}

NoiseChannel NoiseModel::build_1q_channel() const {
  const auto& ge = *gate_error_1q;
  if (ge.kind == GateError1q::Kind::Depolarizing) return depolarizing_1q(ge.q);
  return pauli_1q(ge.px, ge.py, ge.pz);
}

NoiseChannel NoiseModel::build_2q_channel() const {
  const auto& ge = *gate_error_2q;
  switch (ge.kind) {
    case GateError2q::Kind::DepolarizingEach:
      return lift_2q(depolarizing_1q(ge.q));
    case GateError2q::Kind::DepolarizingPairTotal:
      return lift_2q(depolarizing_1q(pair_q_from_total_error(ge.q)));
    case GateError2q::Kind::Pauli:
      return lift_2q(pauli_1q(ge.px, ge.py, ge.pz));
  }
  throw InputError("NoiseModel: unknown 2q gate error kind");
}

TrotterCircuit build_circuit(const ChainSpec& chain, double model_time,
                             int n_steps, const GateTimes& times,
                             const TrotterOptions& opts) {
  chain.validate();
  if (model_time < 0.0) throw InputError("build_circuit: negative model time");
  if (n_steps < 1) throw InputError("build_circuit: need at least one step");

  const double dt = model_time / n_steps;
  TrotterCircuit circuit;
  circuit.n_qubits = chain.n_qubits;
  circuit.n_steps = n_steps;
  circuit.model_time = model_time;

  // Odd bonds (H_A), then even bonds (H_B); same-parity blocks share layers.
  for (int parity : {1, 0}) {
    std::vector<int> bonds;
    for (int bond = 1; bond < chain.n_qubits; ++bond)
      if (bond % 2 == parity) bonds.push_back(bond);
    if (bonds.empty()) continue;

    std::vector<std::vector<CircuitLayer>> per_block;
    per_block.reserve(bonds.size());
    for (int bond : bonds) {
      const double theta = opts.angle_scale * chain.couplings[bond - 1] * dt;
      per_block.push_back(pack_layers(xy_block(theta, bond - 1, bond, times)));
    }
    const std::size_t depth = per_block.front().size();
    for (std::size_t s = 0; s < depth; ++s) {
      CircuitLayer merged;
      for (const auto& block : per_block) {
        for (const GateOp& g : block[s].gates) merged.gates.push_back(g);
        merged.duration = std::max(merged.duration, block[s].duration);
      }
      circuit.step_layers.push_back(std::move(merged));
    }
    const int end_layer = static_cast<int>(circuit.step_layers.size()) - 1;
    for (int bond : bonds)
      circuit.blocks.push_back(BlockMark{end_layer, bond - 1, bond});
  }

  for (const CircuitLayer& layer : circuit.step_layers)
    circuit.step_duration += layer.duration;
  return circuit;
}

namespace {

struct CompiledOp {
  enum class Kind { Unitary, PhaseMask, Kraus } kind;
  Matrix u;
  Matrix mask;
  std::vector<Matrix> kraus;
};

std::vector<Matrix> embed_kraus(const NoiseChannel& ch,
                                const std::vector<int>& targets, int n) {
  std::vector<Matrix> out;
  out.reserve(ch.kraus.size());
  for (const Matrix& e : ch.kraus)
    out.push_back(embed(OperatorMatrix{ch.arity, e}, targets, n).m);
  return out;
}

/// Flattened op sequence for one Trotter step.
std::vector<CompiledOp> compile_step(const TrotterCircuit& circuit,
                                     const NoiseModel& noise) {
  const int n = circuit.n_qubits;
  const Eigen::Index dim = Eigen::Index(1) << n;
  std::vector<CompiledOp> ops;

  // Distinct layer durations (l1q / l2q in practice).
  std::map<double, int> duration_class;
  for (const CircuitLayer& layer : circuit.step_layers)
    duration_class.emplace(layer.duration,
                           static_cast<int>(duration_class.size()));

  std::vector<std::vector<Matrix>> err1q(n);
  if (noise.gate_error_1q) {
    const NoiseChannel ch = noise.build_1q_channel();
    for (int q = 0; q < n; ++q) err1q[q] = embed_kraus(ch, {q}, n);
  }
  std::vector<std::vector<Matrix>> err2q(std::max(n - 1, 0));
  if (noise.gate_error_2q) {
    const NoiseChannel ch = noise.build_2q_channel();
    for (int q = 0; q + 1 < n; ++q) err2q[q] = embed_kraus(ch, {q, q + 1}, n);
  }

  // Decoherence Kraus sets per (qubit, duration class).
  std::vector<std::vector<std::vector<Matrix>>> relax, dephase;
  if (noise.decoherence) {
    const double t1 = noise.decoherence->t1_us * 1e-6;
    const double t2 = noise.decoherence->t2_us * 1e-6;
    relax.resize(duration_class.size());
    dephase.resize(duration_class.size());
    for (const auto& [tau, cls] : duration_class) {
      relax[cls].resize(n);
      dephase[cls].resize(n);
      const NoiseChannel t1_ch = thermal_t1(t1, tau);
      const NoiseChannel t2_ch = dephasing_t2(t2, tau);
      for (int q = 0; q < n; ++q) {
        relax[cls][q] = embed_kraus(t1_ch, {q}, n);
        dephase[cls][q] = embed_kraus(t2_ch, {q}, n);
      }
    }
  }

  // Crosstalk phase masks per (pair, duration class).
  std::vector<std::vector<Matrix>> zz_mask;
  if (noise.crosstalk && n >= 2) {
    const double dt = circuit.model_time / circuit.n_steps;
    zz_mask.resize(duration_class.size());
    for (const auto& [tau, cls] : duration_class) {
      double phase = 0.0;
      switch (noise.crosstalk->mode) {
        case CrosstalkMode::PerStepRad:
          phase = noise.crosstalk->zeta * (tau / circuit.step_duration);
          break;
        case CrosstalkMode::ModelFrequency:
          phase = noise.crosstalk->zeta * (tau / circuit.step_duration) * dt;
          break;
        case CrosstalkMode::RadPerSecond:
          phase = noise.crosstalk->zeta * tau;
          break;
      }
      zz_mask[cls].resize(n - 1);
      for (int q = 0; q + 1 < n; ++q) {
        const OperatorMatrix u =
            embed(crosstalk_zz(phase, 1.0), {q, q + 1}, n);
        const Eigen::VectorXcd d = u.m.diagonal();
        zz_mask[cls][q] = d * d.adjoint();
      }
    }
  }

  for (std::size_t li = 0; li < circuit.step_layers.size(); ++li) {
    const CircuitLayer& layer = circuit.step_layers[li];
    const int cls = duration_class.at(layer.duration);

    Matrix u = identity(dim);
    for (const GateOp& g : layer.gates)
      u = embed(gate_matrix(g), g.targets, n).m * u;
    ops.push_back(CompiledOp{CompiledOp::Kind::Unitary, std::move(u), {}, {}});

    if (noise.placement_1q == Placement1q::PerGate && noise.gate_error_1q)
      for (const GateOp& g : layer.gates)
        if (!is_two_qubit(g.kind))
          ops.push_back(CompiledOp{CompiledOp::Kind::Kraus, {}, {},
                                   err1q[g.targets[0]]});
    if (noise.placement_2q == Placement2q::PerCnot && noise.gate_error_2q)
      for (const GateOp& g : layer.gates)
        if (is_two_qubit(g.kind))
          ops.push_back(CompiledOp{CompiledOp::Kind::Kraus, {}, {},
                                   err2q[std::min(g.targets[0], g.targets[1])]});

    for (const BlockMark& mark : circuit.blocks) {
      if (mark.end_layer != static_cast<int>(li)) continue;
      if (noise.placement_1q == Placement1q::PerBlock && noise.gate_error_1q) {
        ops.push_back(
            CompiledOp{CompiledOp::Kind::Kraus, {}, {}, err1q[mark.qa]});
        ops.push_back(
            CompiledOp{CompiledOp::Kind::Kraus, {}, {}, err1q[mark.qb]});
      }
      if (noise.placement_2q == Placement2q::PerBlock && noise.gate_error_2q)
        ops.push_back(
            CompiledOp{CompiledOp::Kind::Kraus, {}, {}, err2q[mark.qa]});
    }

    if (noise.decoherence) {
      std::vector<bool> touched(n, noise.decoherence_qubits ==
                                       DecoherenceQubits::All);
      if (noise.decoherence_qubits == DecoherenceQubits::Gated)
        for (const GateOp& g : layer.gates)
          for (int q : g.targets) touched[q] = true;
      for (int q = 0; q < n; ++q) {
        if (!touched[q]) continue;
        ops.push_back(
            CompiledOp{CompiledOp::Kind::Kraus, {}, {}, relax[cls][q]});
        ops.push_back(
            CompiledOp{CompiledOp::Kind::Kraus, {}, {}, dephase[cls][q]});
      }
    }

    if (noise.crosstalk)
      for (int q = 0; q + 1 < n; ++q)
        ops.push_back(CompiledOp{CompiledOp::Kind::PhaseMask, {},
                                 zz_mask[cls][q], {}});
  }
  return ops;
}

}  // namespace

DensityMatrix simulate(const TrotterCircuit& circuit, const NoiseModel& noise,
                       const DensityMatrix& rho0) {
  if (rho0.n_qubits != circuit.n_qubits)
    throw InputError("simulate: state and circuit dimensions do not match");
  noise.validate();

  const std::vector<CompiledOp> ops = compile_step(circuit, noise);
  const Eigen::Index dim = rho0.dim();
  Matrix rho = rho0.m;
  Matrix tmp(dim, dim), out(dim, dim);

  for (int step = 0; step < circuit.n_steps; ++step) {
    for (const CompiledOp& op : ops) {
      switch (op.kind) {
        case CompiledOp::Kind::Unitary:
          tmp.noalias() = op.u * rho;
          out.noalias() = tmp * op.u.adjoint();
          rho.swap(out);
          break;
        case CompiledOp::Kind::PhaseMask:
          rho.array() *= op.mask.array();
          break;
        case CompiledOp::Kind::Kraus:
          out.setZero();
          for (const Matrix& e : op.kraus) {
            tmp.noalias() = e * rho;
            out.noalias() += tmp * e.adjoint();
          }
          rho.swap(out);
          break;
      }
    }
  }

  DensityMatrix result{circuit.n_qubits, std::move(rho)};
  if (std::abs(result.m.trace() - Complex(1.0, 0.0)) > 1e-9)
    throw ContractError("simulate: trace drifted beyond 1e-9");
  return result;
}

TransferRecord fidelity_series(const ChainSpec& chain, const NoiseModel& noise,
                               const std::vector<double>& t_grid, int n_steps,
                               const TrotterOptions& opts) {
  if (t_grid.empty()) throw InputError("fidelity_series: empty time grid");
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw InputError("fidelity_series: grid must be strictly ascending");

  std::string bits(chain.n_qubits, '0');
  bits[0] = '1';
  const DensityMatrix rho0 = basis_state(chain.n_qubits, bits);
  const Eigen::Index target_index = 1;  // |0...01>
  const GateTimes times = noise.gate_times();

  std::vector<double> fidelity(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    const TrotterCircuit circuit =
        build_circuit(chain, t_grid[i], n_steps, times, opts);
    const DensityMatrix rho = simulate(circuit, noise, rho0);
    const Complex f = rho.m(target_index, target_index);
    if (std::abs(f.imag()) > 1e-10 || f.real() < -1e-9 || f.real() > 1 + 1e-9)
      throw ContractError("fidelity_series: population outside [0, 1]");
    fidelity[i] = std::min(1.0, std::max(0.0, f.real()));
  }
  return make_record(n_steps, t_grid, std::move(fidelity));
}

SweepResult sweep_depths(const ChainSpec& chain, const NoiseModel& noise,
                         const std::vector<double>& t_grid, int n_min,
                         int n_max, int threads, const TrotterOptions& opts) {
  if (n_min < 1 || n_max < n_min)
    throw InputError("sweep_depths: invalid depth range");
  const int count = n_max - n_min + 1;
  SweepResult sweep;
  sweep.records.resize(count);

  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  // Deepest circuits first: task cost grows with N, so this balances the pool.
  auto worker_body = [&] {
    try {
      for (int task = next.fetch_add(1); task < count;
           task = next.fetch_add(1)) {
        const int i = count - 1 - task;
        sweep.records[i] =
            fidelity_series(chain, noise, t_grid, n_min + i, opts);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(count);
    }
  };

  if (threads <= 1) {
    worker_body();
  } else {
    std::vector<std::thread> pool;
    const int n_workers = std::min(threads, count);
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker_body);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return sweep;
}

std::vector<double> linspace(double lo, double hi, int points) {
  if (points < 1) throw InputError("linspace: need at least one point");
  std::vector<double> grid(points);
  if (points == 1) {
    grid[0] = lo;
    return grid;
  }
  for (int i = 0; i < points; ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
  return grid;
}

}  // namespace pst
