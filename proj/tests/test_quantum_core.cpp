#include <doctest.h>

#include "oracles.hpp"
#include "pstsim/noise_channels.hpp"
#include "pstsim/quantum_core.hpp"

using namespace pst;
namespace tt = pst::testing;

namespace {

DensityMatrix plus_state() {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return DensityMatrix{1, m};
}

DensityMatrix minus_state() {
  Matrix m(2, 2);
  m << 0.5, -0.5, -0.5, 0.5;
  return DensityMatrix{1, m};
}

}  // namespace

TEST_CASE("basis_state builds computational projectors") {
  const DensityMatrix ground = basis_state(1, "0");
  CHECK(ground.m(0, 0).real() == doctest::Approx(1.0));
  CHECK(max_abs(ground.m) == doctest::Approx(1.0));

  const DensityMatrix excited = basis_state(1, "1");
  CHECK(excited.m(1, 1).real() == doctest::Approx(1.0));
  CHECK(excited.m(0, 0).real() == doctest::Approx(0.0));

  // Qubit 0 is the most significant bit: |100> sits at index 4.
  const DensityMatrix three = basis_state(3, "100");
  CHECK(three.dim() == 8);
  CHECK(three.m(4, 4).real() == doctest::Approx(1.0));
  CHECK(three.m.trace().real() == doctest::Approx(1.0));

  CHECK_THROWS_AS(basis_state(3, "10"), InputError);
  CHECK_THROWS_AS(basis_state(2, "1x"), InputError);
}

TEST_CASE("embed lifts operators with identity padding") {
  const OperatorMatrix x{1, pauli_x()};

  CHECK(max_abs_diff(embed(x, {0}, 1).m, pauli_x()) == 0.0);
  CHECK(max_abs_diff(embed(x, {1}, 2).m, kron(identity(2), pauli_x())) == 0.0);
  CHECK(max_abs_diff(embed(x, {0}, 2).m, kron(pauli_x(), identity(2))) == 0.0);

  SUBCASE("reversed CNOT targets act on the right control") {
    Matrix cnot = Matrix::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = 1;
    cnot(2, 3) = cnot(3, 2) = 1;
    const OperatorMatrix lifted = embed(OperatorMatrix{2, cnot}, {1, 0}, 2);
    // Control on qubit 1: basis |q0 q1>, flip q0 iff q1 = 1.
    for (int in = 0; in < 4; ++in) {
      const int q0 = (in >> 1) & 1;
      const int q1 = in & 1;
      const int out = ((q0 ^ q1) << 1) | q1;
      CHECK(lifted.m(out, in).real() == doctest::Approx(1.0));
    }
  }

  CHECK_THROWS_AS(embed(x, {2}, 2), InputError);
  CHECK_THROWS_AS(embed(OperatorMatrix{2, identity(4)}, {0, 0}, 2), InputError);
  CHECK_THROWS_AS(embed(x, {0, 1}, 2), InputError);
}

TEST_CASE("embedded operators on disjoint qubits commute") {
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = tt::random_unitary(2);
    const Matrix b = tt::random_unitary(2);
    const Matrix ea = embed(OperatorMatrix{1, a}, {0}, 3).m;
    const Matrix eb = embed(OperatorMatrix{1, b}, {2}, 3).m;
    CHECK(max_abs_diff(ea * eb, eb * ea) < 1e-14);
  }
}

TEST_CASE("apply_unitary acts by conjugation") {
  const DensityMatrix zero = basis_state(1, "0");
  const OperatorMatrix x{1, pauli_x()};

  const DensityMatrix flipped = apply_unitary(zero, x, {0});
  CHECK(max_abs_diff(flipped.m, basis_state(1, "1").m) < 1e-15);

  GateTimes times;
  const OperatorMatrix h = gate_matrix(make_gate(GateKind::H, 0, times));
  const DensityMatrix mixed = apply_unitary(zero, h, {0});
  CHECK(max_abs_diff(mixed.m, plus_state().m) < 1e-15);

  const OperatorMatrix rz_pi =
      gate_matrix(make_rotation(GateKind::Rz, 3.141592653589793, 0, times));
  const DensityMatrix rotated = apply_unitary(plus_state(), rz_pi, {0});
  CHECK(max_abs_diff(rotated.m, minus_state().m) < 1e-12);

  Matrix not_unitary = 2.0 * pauli_x();
  CHECK_THROWS_AS(apply_unitary(zero, OperatorMatrix{1, not_unitary}, {0}),
                  ContractError);
}

TEST_CASE("apply_kraus resolves channels") {
  const DensityMatrix zero = basis_state(1, "0");

  SUBCASE("identity Kraus set is the identity map") {
    const DensityMatrix out = apply_kraus(zero, {identity(2)}, {0});
    CHECK(max_abs_diff(out.m, zero.m) == 0.0);
  }

  SUBCASE("depolarizing matches the closed form") {
    const double q = 0.3;
    const NoiseChannel ch = depolarizing_1q(q);
    const DensityMatrix out = apply_kraus(zero, ch.kraus, {0});
    const Matrix expected = (1 - q) * zero.m + (q / 2) * identity(2);
    CHECK(max_abs_diff(out.m, expected) < 1e-15);
  }

  SUBCASE("thermal relaxation moves population down") {
    // gamma1 = 0.3 at tau = -T1 ln(0.7)
    const double tau = -std::log(0.7);
    const NoiseChannel ch = thermal_t1(1.0, tau);
    const DensityMatrix out =
        apply_kraus(basis_state(1, "1"), ch.kraus, {0});
    CHECK(out.m(0, 0).real() == doctest::Approx(0.3));
    CHECK(out.m(1, 1).real() == doctest::Approx(0.7));
  }

  SUBCASE("non-trace-preserving sets are rejected") {
    const std::vector<Matrix> bad = {0.5 * identity(2)};
    CHECK_THROWS_AS(apply_kraus(zero, bad, {0}), ContractError);
  }
}

TEST_CASE("expectation values") {
  const OperatorMatrix z{1, pauli_z()};
  CHECK(expectation(basis_state(1, "1"), z) == doctest::Approx(-1.0));

  const OperatorMatrix x{1, pauli_x()};
  CHECK(expectation(plus_state(), x) == doctest::Approx(1.0));

  const Matrix a = tt::random_hermitian(2);
  DensityMatrix mixed{1, 0.5 * identity(2)};
  CHECK(expectation(mixed, OperatorMatrix{1, a}) ==
        doctest::Approx(0.5 * a.trace().real()));

  Matrix skew(2, 2);
  skew << 0, 1, 2, 0;
  CHECK_THROWS_AS(expectation(mixed, OperatorMatrix{1, skew}), ContractError);
}

TEST_CASE("channel applications preserve density-matrix structure") {
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 3;
    const DensityMatrix rho = tt::random_density(n);
    const int target = trial % n;

    const Matrix u = tt::random_unitary(2);
    const DensityMatrix after_u =
        apply_unitary(rho, OperatorMatrix{1, u}, {target});
    CHECK(std::abs(after_u.m.trace() - rho.m.trace()) < 1e-12);
    CHECK(is_hermitian(after_u.m, 1e-10));

    const NoiseChannel ch = depolarizing_1q(tt::uniform(0.0, 1.0));
    const DensityMatrix after_k = apply_kraus(rho, ch.kraus, {target});
    CHECK(std::abs(after_k.m.trace() - rho.m.trace()) < 1e-10);
    CHECK(is_hermitian(after_k.m, 1e-10));
    CHECK(min_eigenvalue(after_k.m) > -1e-8);

    // Unitary channels as singleton Kraus sets agree with conjugation.
    const DensityMatrix via_kraus = apply_kraus(rho, {u}, {target});
    CHECK(max_abs_diff(via_kraus.m, after_u.m) < 1e-14);
  }
}

TEST_CASE("check_density flags corrupted states") {
  DensityMatrix rho = tt::random_density(2);
  CHECK_NOTHROW(check_density(rho, true));
  rho.m(0, 0) += 0.5;
  CHECK_THROWS_AS(check_density(rho), ContractError);
}
