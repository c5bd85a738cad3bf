#pragma once

#include <vector>

#include "pstsim/quantum_core.hpp"

namespace pst {

enum class GateKind { H, S, Sdg, Rx, Rz, Cnot };

int gate_arity(GateKind kind);
bool is_two_qubit(GateKind kind);

/// Physical gate durations, in seconds.
struct GateTimes {
  double l1q = 35.5e-9;
  double l2q = 340e-9;

  double of(GateKind kind) const { return is_two_qubit(kind) ? l2q : l1q; }
};

struct GateOp {
  GateKind kind;
  double theta = 0.0;  // Rx/Rz only
  std::vector<int> targets;
  double duration = 0.0;  // seconds
};

GateOp make_gate(GateKind kind, int qubit, const GateTimes& times);
GateOp make_rotation(GateKind kind, double theta, int qubit,
                     const GateTimes& times);
GateOp make_cnot(int control, int target, const GateTimes& times);

/// Exact unitary for a gate. Rz(t) = diag(e^{-it/2}, e^{it/2}); Rx(t) has
/// -i sin(t/2) off-diagonals; CNOT control is targets[0].
OperatorMatrix gate_matrix(const GateOp& g);

/// Gates scheduled in the same time slice; targets are pairwise disjoint.
struct CircuitLayer {
  std::vector<GateOp> gates;
  double duration = 0.0;  // max gate duration in the layer
};

/// Greedy in-order packing of a gate sequence into layers.
std::vector<CircuitLayer> pack_layers(const std::vector<GateOp>& gates);

/// The two-CNOT circuit implementing the XY interaction on an adjacent pair
/// (qa, qa+1). The composed unitary equals exp(+i(theta/2)(XX+YY)) up to a
/// global phase.
std::vector<GateOp> xy_block(double theta, int qa, int qb,
                             const GateTimes& times);

}  // namespace pst
