#pragma once

#include <complex>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "pstsim/errors.hpp"
#include "pstsim/numeric.hpp"

namespace pst {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// A k-qubit operator. Qubit 0 of the operator's local ordering is the most
/// significant bit of the matrix index, matching the global convention below.
struct OperatorMatrix {
  int arity = 0;
  Matrix m;

  Eigen::Index dim() const { return m.rows(); }
};

/// Density matrix over n qubits. Basis index convention: qubit 0 is the most
/// significant bit, so |10...0> sits at index 2^(n-1).
struct DensityMatrix {
  int n_qubits = 0;
  Matrix m;

  Eigen::Index dim() const { return m.rows(); }
};

const Matrix& pauli_x();
const Matrix& pauli_y();
const Matrix& pauli_z();
Matrix identity(Eigen::Index dim);
Matrix kron(const Matrix& a, const Matrix& b);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
bool is_hermitian(const Matrix& m, double tol);
bool is_unitary(const Matrix& m, double tol);
double min_eigenvalue(const Matrix& hermitian);

/// Projector |b><b| for the computational basis string b ("100" -> index 4).
DensityMatrix basis_state(int n_qubits, std::string_view bits);

/// Lift op onto an n-qubit register, acting on the listed qubits (targets[0]
/// becomes the most significant local bit) and as identity elsewhere.
OperatorMatrix embed(const OperatorMatrix& op, const std::vector<int>& targets,
                     int n_qubits);

/// rho -> U rho U^dag. op must be unitary on its arity.
DensityMatrix apply_unitary(const DensityMatrix& rho, const OperatorMatrix& op,
                            const std::vector<int>& targets);

/// rho -> sum_k E_k rho E_k^dag for a trace-preserving Kraus set.
DensityMatrix apply_kraus(const DensityMatrix& rho,
                          const std::vector<Matrix>& kraus,
                          const std::vector<int>& targets);

/// Tr[obs rho] for Hermitian obs of the same dimension as rho.
double expectation(const DensityMatrix& rho, const OperatorMatrix& obs);

/// Trace/Hermiticity validation; PSD check is opt-in (it costs an
/// eigendecomposition and channels are CPTP by construction).
void check_density(const DensityMatrix& rho, bool with_psd = false);

}  // namespace pst
