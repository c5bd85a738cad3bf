#include "pstsim/quantum_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pst {

NumericPolicy& numeric_policy() {
  static NumericPolicy policy;
  return policy;
}

const Matrix& pauli_x() {
  static const Matrix x = [] {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
  }();
  return x;
}

const Matrix& pauli_y() {
  static const Matrix y = [] {
    Matrix m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
  }();
  return y;
}

const Matrix& pauli_z() {
  static const Matrix z = [] {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
  }();
  return z;
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const Matrix& a) { return a.cwiseAbs().maxCoeff(); }

double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  return m.rows() == m.cols() && max_abs_diff(m, m.adjoint()) < tol;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs_diff(m.adjoint() * m, identity(m.rows())) < tol;
}

double min_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix basis_state(int n_qubits, std::string_view bits) {
  if (n_qubits < 1)
    throw InputError("basis_state: n_qubits must be positive");
  if (static_cast<int>(bits.size()) != n_qubits)
    throw InputError("basis_state: bitstring length " +
                     std::to_string(bits.size()) + " does not match " +
                     std::to_string(n_qubits) + " qubits");
  Eigen::Index index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw InputError("basis_state: bitstring must contain only 0/1");
    index = (index << 1) | (c == '1' ? 1 : 0);
  }
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  DensityMatrix rho{n_qubits, Matrix::Zero(dim, dim)};
  rho.m(index, index) = 1.0;
  return rho;
}

namespace {

void check_targets(const std::vector<int>& targets, int arity, int n_qubits,
                   const char* who) {
  if (static_cast<int>(targets.size()) != arity)
    throw InputError(std::string(who) + ": operator arity " +
                     std::to_string(arity) + " does not match " +
                     std::to_string(targets.size()) + " targets");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= n_qubits)
      throw InputError(std::string(who) + ": target qubit " +
                       std::to_string(targets[i]) + " out of range");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j])
        throw InputError(std::string(who) + ": duplicate target qubit " +
                         std::to_string(targets[i]));
  }
}

bool is_full_identity_targets(const std::vector<int>& targets, int n_qubits) {
  if (static_cast<int>(targets.size()) != n_qubits) return false;
  for (int i = 0; i < n_qubits; ++i)
    if (targets[i] != i) return false;
  return true;
}

}  // namespace

OperatorMatrix embed(const OperatorMatrix& op, const std::vector<int>& targets,
                     int n_qubits) {
  check_targets(targets, op.arity, n_qubits, "embed");
  if (op.dim() != (Eigen::Index(1) << op.arity))
    throw InputError("embed: operator dimension does not match its arity");
  if (is_full_identity_targets(targets, n_qubits)) return op;

  const int n = n_qubits;
  const int k = op.arity;
  const Eigen::Index dim = Eigen::Index(1) << n;
  const Eigen::Index local_dim = Eigen::Index(1) << k;

  // Qubit q occupies bit (n-1-q) of the basis index.
  auto bit_of = [n](int qubit) { return n - 1 - qubit; };

  std::vector<int> rest;
  rest.reserve(n - k);
  for (int q = 0; q < n; ++q)
    if (std::find(targets.begin(), targets.end(), q) == targets.end())
      rest.push_back(q);

  Matrix out = Matrix::Zero(dim, dim);
  std::vector<Eigen::Index> scatter(local_dim);
  for (Eigen::Index local = 0; local < local_dim; ++local) {
    Eigen::Index bits = 0;
    for (int a = 0; a < k; ++a)
      if ((local >> (k - 1 - a)) & 1) bits |= Eigen::Index(1) << bit_of(targets[a]);
    scatter[local] = bits;
  }

  const Eigen::Index rest_count = Eigen::Index(1) << rest.size();
  for (Eigen::Index r = 0; r < rest_count; ++r) {
    Eigen::Index base = 0;
    for (std::size_t a = 0; a < rest.size(); ++a)
      if ((r >> a) & 1) base |= Eigen::Index(1) << bit_of(rest[a]);
    for (Eigen::Index lr = 0; lr < local_dim; ++lr)
      for (Eigen::Index lc = 0; lc < local_dim; ++lc)
        out(base | scatter[lr], base | scatter[lc]) = op.m(lr, lc);
  }
  return OperatorMatrix{n, std::move(out)};
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const OperatorMatrix& op,
                            const std::vector<int>& targets) {
  const auto& policy = numeric_policy();
  if (!is_unitary(op.m, policy.unitary_tol))
    throw ContractError("apply_unitary: operator is not unitary");
  const OperatorMatrix full =
      is_full_identity_targets(targets, rho.n_qubits) && op.arity == rho.n_qubits
          ? op
          : embed(op, targets, rho.n_qubits);
  DensityMatrix out{rho.n_qubits, full.m * rho.m * full.m.adjoint()};
  const double drift = std::abs(out.m.trace() - rho.m.trace());
  if (drift > policy.unitary_trace_tol)
    throw ContractError("apply_unitary: trace drifted by " +
                        std::to_string(drift));
  return out;
}

DensityMatrix apply_kraus(const DensityMatrix& rho,
                          const std::vector<Matrix>& kraus,
                          const std::vector<int>& targets) {
  if (kraus.empty()) throw InputError("apply_kraus: empty Kraus set");
  const auto& policy = numeric_policy();
  const Eigen::Index local_dim = kraus.front().rows();
  int arity = 0;
  while ((Eigen::Index(1) << arity) < local_dim) ++arity;
  if ((Eigen::Index(1) << arity) != local_dim)
    throw InputError("apply_kraus: Kraus dimension is not a power of two");

  Matrix completeness = Matrix::Zero(local_dim, local_dim);
  for (const Matrix& e : kraus) {
    if (e.rows() != local_dim || e.cols() != local_dim)
      throw InputError("apply_kraus: inconsistent Kraus dimensions");
    completeness.noalias() += e.adjoint() * e;
  }
  if (max_abs_diff(completeness, identity(local_dim)) > policy.kraus_apply_tol)
    throw ContractError("apply_kraus: Kraus set is not trace preserving");

  Matrix acc = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& e : kraus) {
    const OperatorMatrix full = embed(OperatorMatrix{arity, e}, targets,
                                      rho.n_qubits);
    acc.noalias() += full.m * rho.m * full.m.adjoint();
  }
  DensityMatrix out{rho.n_qubits, std::move(acc)};
  if (std::abs(out.m.trace() - rho.m.trace()) > policy.trace_tol)
    throw ContractError("apply_kraus: trace not preserved");
  return out;
}

double expectation(const DensityMatrix& rho, const OperatorMatrix& obs) {
  if (obs.dim() != rho.dim())
    throw InputError("expectation: dimension mismatch");
  if (!is_hermitian(obs.m, numeric_policy().herm_tol))
    throw ContractError("expectation: observable is not Hermitian");
  const Complex value = (rho.m * obs.m).trace();
  if (std::abs(value.imag()) > numeric_policy().imag_tol)
    throw ContractError("expectation: imaginary residue " +
                        std::to_string(value.imag()));
  return value.real();
}

void check_density(const DensityMatrix& rho, bool with_psd) {
  const auto& policy = numeric_policy();
  if (!rho.m.allFinite())
    throw ContractError("density matrix contains non-finite entries");
  if (std::abs(rho.m.trace().real() - 1.0) > policy.trace_tol ||
      std::abs(rho.m.trace().imag()) > policy.trace_tol)
    throw ContractError("density matrix trace deviates from 1");
  if (!is_hermitian(rho.m, policy.herm_tol))
    throw ContractError("density matrix is not Hermitian");
  if (with_psd && min_eigenvalue(rho.m) < -policy.psd_tol)
    throw ContractError("density matrix is not positive semidefinite");
}

}  // namespace pst
