#include "pstsim/noise_channels.hpp"

#include <cmath>
#include <string>

namespace pst {

namespace {

void require_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError(std::string(name) + " must lie in [0, 1], got " +
                     std::to_string(p));
}

void check_completeness(const NoiseChannel& ch, const char* who) {
  if (completeness_defect(ch) > numeric_policy().kraus_construct_tol)
    throw ContractError(std::string(who) + ": Kraus set incomplete");
}

}  // namespace

NoiseChannel identity_channel(int arity) {
  return NoiseChannel{arity, {identity(Eigen::Index(1) << arity)}};
}

NoiseChannel depolarizing_1q(double q) {
  require_probability(q, "depolarizing intensity q");
  NoiseChannel ch{1, {}};
  ch.kraus.push_back(std::sqrt(1.0 - 0.75 * q) * identity(2));
  if (q > 0.0) {
    const double w = std::sqrt(q / 4.0);
    ch.kraus.push_back(w * pauli_x());
    ch.kraus.push_back(w * pauli_y());
    ch.kraus.push_back(w * pauli_z());
  }
  check_completeness(ch, "depolarizing_1q");
  return ch;
}

NoiseChannel pauli_1q(double px, double py, double pz) {
  for (double p : {px, py, pz})
    if (p < 0.0) throw InputError("pauli_1q: negative probability");
  const double p = px + py + pz;
  if (p > 1.0) throw InputError("pauli_1q: p_x + p_y + p_z exceeds 1");
  NoiseChannel ch{1, {}};
  ch.kraus.push_back(std::sqrt(1.0 - p) * identity(2));
  if (px > 0.0) ch.kraus.push_back(std::sqrt(px) * pauli_x());
  if (py > 0.0) ch.kraus.push_back(std::sqrt(py) * pauli_y());
  if (pz > 0.0) ch.kraus.push_back(std::sqrt(pz) * pauli_z());
  check_completeness(ch, "pauli_1q");
  return ch;
}

NoiseChannel lift_2q(const NoiseChannel& ch) {
  NoiseChannel out{2 * ch.arity, {}};
  out.kraus.reserve(ch.kraus.size() * ch.kraus.size());
  for (const Matrix& a : ch.kraus)
    for (const Matrix& b : ch.kraus) out.kraus.push_back(kron(a, b));
  check_completeness(out, "lift_2q");
  return out;
}

OperatorMatrix crosstalk_zz(double zeta, double tau) {
  if (tau < 0.0) throw InputError("crosstalk_zz: negative duration");
  const Complex i(0.0, 1.0);
  const Complex even = std::exp(-i * (zeta * tau));
  const Complex odd = std::exp(i * (zeta * tau));
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = even;
  m(1, 1) = odd;
  m(2, 2) = odd;
  m(3, 3) = even;
  return OperatorMatrix{2, std::move(m)};
}

NoiseChannel thermal_t1(double t1, double tau) {
  if (!(t1 > 0.0)) throw InputError("thermal_t1: T1 must be positive");
  if (tau < 0.0) throw InputError("thermal_t1: negative duration");
  const double g1 = 1.0 - std::exp(-tau / t1);
  NoiseChannel ch{1, {}};
  Matrix e1 = Matrix::Zero(2, 2);
  e1(0, 0) = 1.0;
  e1(1, 1) = std::sqrt(1.0 - g1);
  ch.kraus.push_back(std::move(e1));
  if (g1 > 0.0) {
    Matrix e2 = Matrix::Zero(2, 2);
    e2(0, 1) = std::sqrt(g1);
    ch.kraus.push_back(std::move(e2));
  }
  check_completeness(ch, "thermal_t1");
  return ch;
}

NoiseChannel dephasing_t2(double t2, double tau) {
  if (!(t2 > 0.0)) throw InputError("dephasing_t2: T2 must be positive");
  if (tau < 0.0) throw InputError("dephasing_t2: negative duration");
  const double g2 = 0.5 * (1.0 + std::exp(-tau / t2));
  NoiseChannel ch{1, {}};
  ch.kraus.push_back(std::sqrt(g2) * identity(2));
  if (g2 < 1.0) ch.kraus.push_back(std::sqrt(1.0 - g2) * pauli_z());
  check_completeness(ch, "dephasing_t2");
  return ch;
}

double completeness_defect(const NoiseChannel& ch) {
  const Eigen::Index dim = Eigen::Index(1) << ch.arity;
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& e : ch.kraus) sum.noalias() += e.adjoint() * e;
  return max_abs_diff(sum, identity(dim));
}

double pair_q_from_total_error(double p_total) {
  require_probability(p_total, "two-qubit total error probability");
  return (4.0 / 3.0) * (1.0 - std::sqrt(1.0 - p_total));
}

DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseChannel& ch,
                            const std::vector<int>& targets) {
  return apply_kraus(rho, ch.kraus, targets);
}

}  // namespace pst
