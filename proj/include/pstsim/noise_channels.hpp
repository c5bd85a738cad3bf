#pragma once

#include <vector>

#include "pstsim/quantum_core.hpp"

namespace pst {

/// A CPTP map as a Kraus operator set; unitary channels are singleton sets so
/// the simulator has one application path.
struct NoiseChannel {
  int arity = 1;
  std::vector<Matrix> kraus;
};

NoiseChannel identity_channel(int arity);

/// (1-q) rho + (q/2) I as the Kraus set
/// {sqrt(1-3q/4) I, sqrt(q/4) X, sqrt(q/4) Y, sqrt(q/4) Z}.
NoiseChannel depolarizing_1q(double q);

/// (1-p) rho + px X rho X + py Y rho Y + pz Z rho Z, p = px+py+pz.
NoiseChannel pauli_1q(double px, double py, double pz);

/// Uncorrelated two-qubit lift: all pairwise tensor products E_i (x) E_j.
NoiseChannel lift_2q(const NoiseChannel& ch);

/// U_ZZ = diag(e^{-i zeta tau}, e^{+i zeta tau}, e^{+i zeta tau},
/// e^{-i zeta tau}) on a neighboring pair.
OperatorMatrix crosstalk_zz(double zeta, double tau);

/// Thermal relaxation over tau: {diag(1, sqrt(1-g1)), sqrt(g1) |0><1|} with
/// g1 = 1 - e^{-tau/T1}.
NoiseChannel thermal_t1(double t1, double tau);

/// Pure dephasing over tau: {sqrt(g2) I, sqrt(1-g2) Z} with
/// g2 = (1 + e^{-tau/T2})/2, so off-diagonals scale by exactly e^{-tau/T2}.
NoiseChannel dephasing_t2(double t2, double tau);

/// max |sum E^dag E - I|; zero for a complete Kraus set.
double completeness_defect(const NoiseChannel& ch);

/// Per-qubit depolarizing intensity q such that the uncorrelated two-qubit
/// lift has total error probability p_total: (1 - 3q/4)^2 = 1 - p_total.
double pair_q_from_total_error(double p_total);

DensityMatrix apply_channel(const DensityMatrix& rho, const NoiseChannel& ch,
                            const std::vector<int>& targets);

}  // namespace pst
