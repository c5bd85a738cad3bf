#include "pstsim/gate_library.hpp"

#include <cmath>
#include <string>

namespace pst {

int gate_arity(GateKind kind) { return kind == GateKind::Cnot ? 2 : 1; }

bool is_two_qubit(GateKind kind) { return kind == GateKind::Cnot; }

GateOp make_gate(GateKind kind, int qubit, const GateTimes& times) {
  return GateOp{kind, 0.0, {qubit}, times.of(kind)};
}

GateOp make_rotation(GateKind kind, double theta, int qubit,
                     const GateTimes& times) {
  if (kind != GateKind::Rx && kind != GateKind::Rz)
    throw InputError("make_rotation: only Rx/Rz take an angle");
  return GateOp{kind, theta, {qubit}, times.of(kind)};
}

GateOp make_cnot(int control, int target, const GateTimes& times) {
  return GateOp{GateKind::Cnot, 0.0, {control, target}, times.l2q};
}

OperatorMatrix gate_matrix(const GateOp& g) {
  const Complex i(0.0, 1.0);
  Matrix m;
  switch (g.kind) {
    case GateKind::H: {
      m.resize(2, 2);
      const double s = 1.0 / std::sqrt(2.0);
      m << s, s, s, -s;
      break;
    }
    case GateKind::S: {
      m.resize(2, 2);
      m << 1, 0, 0, i;
      break;
    }
    case GateKind::Sdg: {
      m.resize(2, 2);
      m << 1, 0, 0, -i;
      break;
    }
    case GateKind::Rx: {
      m.resize(2, 2);
      const double c = std::cos(g.theta / 2);
      const double s = std::sin(g.theta / 2);
      m << c, -i * s, -i * s, c;
      break;
    }
    case GateKind::Rz: {
      m.resize(2, 2);
      m << std::exp(-i * (g.theta / 2)), 0, 0, std::exp(i * (g.theta / 2));
      break;
    }
    case GateKind::Cnot: {
      m = Matrix::Zero(4, 4);
      m(0, 0) = 1;
      m(1, 1) = 1;
      m(2, 3) = 1;
      m(3, 2) = 1;
      break;
    }
  }
  return OperatorMatrix{gate_arity(g.kind), std::move(m)};
}

std::vector<CircuitLayer> pack_layers(const std::vector<GateOp>& gates) {
  std::vector<CircuitLayer> layers;
  std::vector<bool> used;
  auto overlaps = [&used](const GateOp& g) {
    for (int q : g.targets)
      if (q < static_cast<int>(used.size()) && used[q]) return true;
    return false;
  };
  for (const GateOp& g : gates) {
    if (layers.empty() || overlaps(g)) {
      layers.push_back(CircuitLayer{});
      std::fill(used.begin(), used.end(), false);
    }
    CircuitLayer& layer = layers.back();
    for (int q : g.targets) {
      if (q >= static_cast<int>(used.size())) used.resize(q + 1, false);
      used[q] = true;
    }
    layer.duration = std::max(layer.duration, g.duration);
    layer.gates.push_back(g);
  }
  return layers;
}

std::vector<GateOp> xy_block(double theta, int qa, int qb,
                             const GateTimes& times) {
  if (qb != qa + 1)
    throw InputError("xy_block: qubits (" + std::to_string(qa) + ", " +
                     std::to_string(qb) + ") are not an adjacent pair");
  // The literal circuit composes to exp(-i(g/2)(XX+YY)) for gate angle g:
  // CNOT (Rx(g) x Rz(g)) CNOT = exp(-i(g/2)(XX+ZZ)) and the HS(dg)H basis
  // change rotates ZZ into YY. Emit g = -theta to match the +i convention.
  const double g = -theta;
  std::vector<GateOp> ops;
  ops.reserve(16);
  for (int q : {qa, qb}) ops.push_back(make_gate(GateKind::H, q, times));
  for (int q : {qa, qb}) ops.push_back(make_gate(GateKind::Sdg, q, times));
  for (int q : {qa, qb}) ops.push_back(make_gate(GateKind::H, q, times));
  ops.push_back(make_cnot(qa, qb, times));
  ops.push_back(make_rotation(GateKind::Rx, g, qa, times));
  ops.push_back(make_rotation(GateKind::Rz, g, qb, times));
  ops.push_back(make_cnot(qa, qb, times));
  for (int q : {qa, qb}) ops.push_back(make_gate(GateKind::H, q, times));
  for (int q : {qa, qb}) ops.push_back(make_gate(GateKind::S, q, times));
  for (int q : {qa, qb}) ops.push_back(make_gate(GateKind::H, q, times));
  return ops;
}

}  // namespace pst
