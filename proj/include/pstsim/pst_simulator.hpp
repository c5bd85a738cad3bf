#pragma once

#include <optional>
#include <vector>

#include "pstsim/analysis.hpp"
#include "pstsim/gate_library.hpp"
#include "pstsim/noise_channels.hpp"

namespace pst {

/// Qubit chain with nearest-neighbor couplings J_1..J_{n-1}.
struct ChainSpec {
  int n_qubits = 0;
  std::vector<double> couplings;

  /// Perfect-transfer profile J_i = C sqrt(i (n - i)).
  static ChainSpec pst_profile(int n_qubits, double c);
  static ChainSpec uniform(int n_qubits, double j);
  void validate() const;
};

std::vector<double> build_couplings(int n_qubits, double c);

/// Where gate-error channels are inserted. PerBlock charges one channel per
/// XY block (the block treated as the native two-qubit operation); PerGate /
/// PerCnot charge every primitive gate individually.
enum class Placement1q { PerGate, PerBlock };
enum class Placement2q { PerCnot, PerBlock };

/// Which qubits the per-layer T1/T2 channels touch. Gated charges only the
/// qubits the layer operates on (noise attached to gate execution); All also
/// charges idle qubits for the layer duration.
enum class DecoherenceQubits { Gated, All };

/// How the configured zeta turns into a per-layer ZZ phase:
///   PerStepRad    - zeta radians accumulated per Trotter step, spread over
///                   layers by wall-clock share (phase grows with depth N).
///   ModelFrequency- zeta * (layer / step wall-clock) * dt, i.e. a static
///                   model-frequency perturbation (total phase zeta * t).
///   RadPerSecond  - zeta * layer duration, directly physical.
enum class CrosstalkMode { PerStepRad, ModelFrequency, RadPerSecond };

struct GateError1q {
  enum class Kind { Depolarizing, Pauli } kind = Kind::Depolarizing;
  double q = 0.0;                       // depolarizing intensity
  double px = 0.0, py = 0.0, pz = 0.0;  // Pauli probabilities
};

struct GateError2q {
  /// DepolarizingEach: q is the per-qubit factor intensity of the lift.
  /// DepolarizingPairTotal: q is the total pair error probability, the usual
  /// published two-qubit gate error rate.
  enum class Kind { DepolarizingEach, DepolarizingPairTotal, Pauli } kind =
      Kind::DepolarizingPairTotal;
  double q = 0.0;
  double px = 0.0, py = 0.0, pz = 0.0;
};

struct CrosstalkSpec {
  CrosstalkMode mode = CrosstalkMode::PerStepRad;
  double zeta = 0.0;  // signed
};

struct DecoherenceSpec {
  double t1_us = 0.0;
  double t2_us = 0.0;
};

struct DurationsSpec {
  double l1q_ns = 35.5;
  double l2q_ns = 340.0;
};

struct NoiseModel {
  std::optional<GateError1q> gate_error_1q;
  std::optional<GateError2q> gate_error_2q;
  std::optional<CrosstalkSpec> crosstalk;
  std::optional<DecoherenceSpec> decoherence;
  DurationsSpec durations;
  Placement1q placement_1q = Placement1q::PerBlock;
  Placement2q placement_2q = Placement2q::PerBlock;
  DecoherenceQubits decoherence_qubits = DecoherenceQubits::Gated;

  bool any_noise() const;
  void validate() const;
  GateTimes gate_times() const;
  NoiseChannel build_1q_channel() const;
  NoiseChannel build_2q_channel() const;
};

/// Marks the layer after which a block's gate-error channels are charged.
struct BlockMark {
  int end_layer = 0;
  int qa = 0;
  int qb = 0;
};

/// One Trotter step's layers; the circuit repeats them n_steps times.
/// Same-parity bonds are scheduled in parallel (merged layers).
struct TrotterCircuit {
  int n_qubits = 0;
  int n_steps = 1;
  double model_time = 0.0;
  std::vector<CircuitLayer> step_layers;
  std::vector<BlockMark> blocks;
  double step_duration = 0.0;

  double wall_clock() const { return n_steps * step_duration; }
  std::size_t total_layers() const { return step_layers.size() * n_steps; }
};

struct TrotterOptions {
  /// theta_i = angle_scale * J_i * dt maps chain couplings to block angles.
  /// The default magnitude is calibrated against the single-excitation
  /// oracle so that the 3-qubit J = 2 chain completes one full
  /// transfer-and-return period over [0, pi]: F(t) = sin^4(t), hitting time
  /// pi/2, F(0) = F(pi) = 0. The sign orients the XY dynamics relative to
  /// the ZZ crosstalk (it is invisible to noiseless observables); with the
  /// default, positive zeta delays the hitting time as depth grows.
  double angle_scale = 0.7071067811865476;  // 1/sqrt(2)
};

TrotterCircuit build_circuit(const ChainSpec& chain, double model_time,
                             int n_steps, const GateTimes& times = {},
                             const TrotterOptions& opts = {});

DensityMatrix simulate(const TrotterCircuit& circuit, const NoiseModel& noise,
                       const DensityMatrix& rho0);

/// F(t) = Tr[P_B rho(t)] over the grid, P_B the projector onto the basis
/// state with the excitation on the last qubit. Initial state is |10...0>.
TransferRecord fidelity_series(const ChainSpec& chain, const NoiseModel& noise,
                               const std::vector<double>& t_grid, int n_steps,
                               const TrotterOptions& opts = {});

SweepResult sweep_depths(const ChainSpec& chain, const NoiseModel& noise,
                         const std::vector<double>& t_grid, int n_min,
                         int n_max, int threads = 1,
                         const TrotterOptions& opts = {});

std::vector<double> linspace(double lo, double hi, int points);

}  // namespace pst
