#include "qrealism/closed_forms.hpp"
#include "qrealism/random.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qreal {
namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(values.size()),
                                        static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

DensityOperator bell_state() {
  ComplexVector v = ComplexVector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return DensityOperator::pure(v, qubits({"A", "B"}));
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t d) {
  const ComplexMatrix g = ginibre(rng, d, d);
  return 0.5 * (g + g.adjoint());
}

TEST(TensorProduct, IdentityTimesIdentity) {
  EXPECT_LE(max_abs(tensor_product(pauli::i2(), pauli::i2()) - identity(4)), 0.0);
}

TEST(TensorProduct, ProjectorPlacement) {
  const ComplexMatrix m = tensor_product(outer(basis_ket(2, 0)), outer(basis_ket(2, 1)));
  EXPECT_LE(max_abs(m - diag({0, 1, 0, 0})), 0.0);
}

TEST(TensorProduct, ZZ) {
  EXPECT_LE(max_abs(tensor_product(pauli::z(), pauli::z()) - diag({1, -1, -1, 1})), 0.0);
}

TEST(PartialTrace, BellReducesToMaximallyMixed) {
  const DensityOperator r = partial_trace(bell_state(), {"A"});
  EXPECT_LE(max_abs(r.matrix() - identity(2) / 2.0), 1e-12);
  ASSERT_EQ(r.factors().size(), 1u);
  EXPECT_EQ(r.factors()[0].label, "A");
}

TEST(PartialTrace, ProductStateFactorizes) {
  Rng rng(11);
  const DensityOperator a = random_density(rng, {{"A", 2}});
  const DensityOperator b = random_density(rng, {{"B", 4}});
  const DensityOperator ab = tensor_product(a, b);
  EXPECT_LE(max_abs(partial_trace(ab, {"A"}).matrix() - a.matrix()), 1e-12);
  EXPECT_LE(max_abs(partial_trace(ab, {"B"}).matrix() - b.matrix()), 1e-12);
}

TEST(PartialTrace, ReducedStatesOfRealityControlledInside) {
  const CircuitParams p{kPi / 2, 0.0};
  const ComplexVector psi = closed_form::inside(CircuitKind::qcre, p);
  const DensityOperator rho = DensityOperator::pure(psi, path_controller_factors());

  // Oracle: explicit index contraction rho_X(i, j) = sum_k psi(i, k) conj(psi(j, k)).
  ComplexMatrix path = ComplexMatrix::Zero(2, 2), controller = ComplexMatrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        path(i, j) += psi(2 * i + k) * std::conj(psi(2 * j + k));
        controller(i, j) += psi(2 * k + i) * std::conj(psi(2 * k + j));
      }

  const DensityOperator rp = partial_trace(rho, {kPath});
  const DensityOperator rc = partial_trace(rho, {kController});
  EXPECT_LE(max_abs(rp.matrix() - path), 1e-12);
  EXPECT_LE(max_abs(rc.matrix() - controller), 1e-12);
  EXPECT_NEAR(rp.matrix()(0, 0).real(), 0.75, 1e-12);
  EXPECT_NEAR(rp.matrix()(1, 1).real(), 0.25, 1e-12);
  const RealVector ev = rc.eigenvalues();
  EXPECT_NEAR(ev(0), 0.5 * (1 - 1 / std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(ev(1), 0.5 * (1 + 1 / std::sqrt(2.0)), 1e-12);
}

TEST(PartialTrace, UnknownLabelThrows) {
  EXPECT_THROW(partial_trace(bell_state(), {"C"}), std::invalid_argument);
  EXPECT_THROW(partial_trace(bell_state(), {}), std::invalid_argument);
}

TEST(PartialTrace, KeepsFactorOrderOfTheState) {
  Rng rng(5);
  const DensityOperator rho = random_density(rng, qubits({"a", "b", "c"}));
  const DensityOperator r = partial_trace(rho, {"c", "a"});
  EXPECT_EQ(r.factors()[0].label, "a");
  EXPECT_EQ(r.factors()[1].label, "c");
}

TEST(Eigh, PauliX) {
  const Eigensystem es = eigh(pauli::x());
  EXPECT_NEAR(es.values(0), -1.0, 1e-14);
  EXPECT_NEAR(es.values(1), 1.0, 1e-14);
}

TEST(Eigh, Diagonal) {
  const Eigensystem es = eigh(diag({0.75, 0.25}));
  EXPECT_NEAR(es.values(0), 0.25, 1e-15);
  EXPECT_NEAR(es.values(1), 0.75, 1e-15);
}

// Faddeev-LeVerrier characteristic polynomial det(lambda I - M), coefficients
// c[0] = 1 (leading) ... c[n].
std::vector<cplx> characteristic_polynomial(const ComplexMatrix& m) {
  const auto n = m.rows();
  std::vector<cplx> c(static_cast<std::size_t>(n + 1));
  c[0] = 1.0;
  ComplexMatrix mk = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk + c[static_cast<std::size_t>(k - 1)] * ComplexMatrix::Identity(n, n);
    c[static_cast<std::size_t>(k)] = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

TEST(Eigh, DephasedRealityControlledStateMatchesCharacteristicPolynomial) {
  const ComplexVector psi = closed_form::inside(CircuitKind::qcre, {kPi / 2, 0.0});
  ComplexMatrix rho = outer(psi);
  // Zero the path coherences: entries whose path index differs.
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if ((r >> 1) != (c >> 1)) rho(r, c) = 0.0;

  const auto poly = characteristic_polynomial(rho);
  // Expected spectrum {0, 0, 1/4, 3/4}: lambda^2 (lambda - 1/4)(lambda - 3/4).
  const std::vector<double> expected{1.0, -1.0, 3.0 / 16.0, 0.0, 0.0};
  for (std::size_t k = 0; k < poly.size(); ++k) EXPECT_NEAR(std::abs(poly[k] - expected[k]), 0.0, 1e-12) << k;

  const RealVector ev = eigh(rho).values;
  EXPECT_NEAR(ev(0), 0.0, 1e-12);
  EXPECT_NEAR(ev(1), 0.0, 1e-12);
  EXPECT_NEAR(ev(2), 0.25, 1e-12);
  EXPECT_NEAR(ev(3), 0.75, 1e-12);
}

TEST(Eigh, RejectsNonHermitian) {
  ComplexMatrix m = pauli::x();
  m(0, 1) = 2.0;
  EXPECT_THROW(eigh(m), LinalgError);
  EXPECT_THROW(eigh(ComplexMatrix::Zero(2, 3)), LinalgError);
}

TEST(Eigh, ReconstructsRandomHermitianMatrices) {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t d = 2 + static_cast<std::size_t>(rng.next_u64() % 15);
    const ComplexMatrix m = random_hermitian(rng, d);
    const Eigensystem es = eigh(m);
    const ComplexMatrix rebuilt = es.vectors * es.values.cast<cplx>().asDiagonal() * es.vectors.adjoint();
    ASSERT_LE(max_abs(m - rebuilt), 1e-9) << "dim " << d;
    ASSERT_LE(max_abs(es.vectors.adjoint() * es.vectors - identity(d)), 1e-9);
    for (Eigen::Index i = 1; i < es.values.size(); ++i) ASSERT_LE(es.values(i - 1), es.values(i));
  }
}

TEST(Entropy, PureStateIsZero) {
  Rng rng(1);
  EXPECT_NEAR(von_neumann_entropy(random_pure(rng, qubits({"a", "b", "c"}))), 0.0, 1e-9);
}

TEST(Entropy, MaximallyMixedTwoQubits) {
  EXPECT_NEAR(von_neumann_entropy(DensityOperator::maximally_mixed(qubits({"a", "b"}))), 2.0, 1e-12);
}

TEST(Entropy, QuarterThreeQuarters) {
  const DensityOperator rho(diag({0.25, 0.75}), {{"a", 2}});
  EXPECT_NEAR(von_neumann_entropy(rho), 0.8112781244591328, 1e-9);
}

TEST(Entropy, NegativeSlackDoesNotProduceNaN) {
  const DensityOperator rho(diag({1.0 + 5e-11, -5e-11}), {{"a", 2}});
  const double s = von_neumann_entropy(rho);
  EXPECT_TRUE(std::isfinite(s));
  EXPECT_NEAR(s, 0.0, 1e-9);
}

TEST(RelativeEntropy, SelfIsZero) {
  Rng rng(3);
  const DensityOperator rho = random_density(rng, qubits({"a", "b"}));
  EXPECT_NEAR(relative_entropy(rho, rho), 0.0, 1e-9);
}

TEST(RelativeEntropy, PureAgainstMaximallyMixed) {
  const DensityOperator zero(outer(basis_ket(2, 0)), {{"a", 2}});
  EXPECT_NEAR(relative_entropy(zero, DensityOperator::maximally_mixed({{"a", 2}})), 1.0, 1e-12);
}

TEST(RelativeEntropy, SupportMismatchIsInfinite) {
  const DensityOperator zero(outer(basis_ket(2, 0)), {{"a", 2}});
  const DensityOperator plus = DensityOperator::pure(ComplexVector::Ones(2), {{"a", 2}});
  const double s = relative_entropy(plus, zero);
  EXPECT_TRUE(std::isinf(s));
  EXPECT_GT(s, 0.0);
}

TEST(BinaryEntropy, Values) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.25), 0.8112781244591328, 1e-9);
}

TEST(BinaryEntropy, OutOfRangeThrows) {
  EXPECT_THROW(binary_entropy(-0.1), std::domain_error);
  EXPECT_THROW(binary_entropy(1.5), std::domain_error);
  EXPECT_THROW(binary_entropy(NAN), std::domain_error);
}

TEST(Fidelity, Values) {
  Rng rng(9);
  const DensityOperator rho = random_density(rng, qubits({"a", "b"}));
  EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-9);
  const DensityOperator zero(outer(basis_ket(2, 0)), {{"a", 2}});
  const DensityOperator one(outer(basis_ket(2, 1)), {{"a", 2}});
  EXPECT_NEAR(fidelity(zero, one), 0.0, 1e-12);
  EXPECT_NEAR(fidelity(zero, DensityOperator::maximally_mixed({{"a", 2}})), 0.5, 1e-12);
}

TEST(Fidelity, SymmetricOnRandomStates) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const DensityOperator a = random_density(rng, qubits({"a", "b"}));
    const DensityOperator b = random_density(rng, qubits({"a", "b"}));
    ASSERT_NEAR(fidelity(a, b), fidelity(b, a), 1e-9);
  }
}

TEST(DensityOperator, RejectsInvalidMatrices) {
  EXPECT_THROW(DensityOperator(diag({0.5, 0.4}), {{"a", 2}}), InvalidState);
  EXPECT_THROW(DensityOperator(diag({1.5, -0.5}), {{"a", 2}}), InvalidState);
  EXPECT_THROW(DensityOperator(pauli::x(), {{"a", 2}}), InvalidState);
  EXPECT_THROW(DensityOperator(diag({0.5, 0.5}), {{"a", 4}}), InvalidState);
  EXPECT_THROW(DensityOperator(identity(4) / 4.0, {{"a", 2}, {"a", 2}}), InvalidState);
  ComplexMatrix m = diag({0.5, 0.5});
  m(0, 1) = 0.1;
  EXPECT_THROW(DensityOperator(m, {{"a", 2}}), InvalidState);
}

TEST(Properties, RandomStateInvariants) {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const FactorList factors = trial % 3 == 0 ? qubits({"a"}) : trial % 3 == 1 ? qubits({"a", "b"})
                                                                               : qubits({"a", "b", "c"});
    const DensityOperator rho = random_density(rng, factors);
    const DensityOperator sigma = random_density(rng, factors);
    const double s = von_neumann_entropy(rho);
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, std::log2(static_cast<double>(rho.dim())));
    ASSERT_GE(relative_entropy(rho, sigma), -1e-9);
    if (factors.size() > 1) {
      const DensityOperator r = partial_trace(rho, {"a"});
      ASSERT_NEAR(r.matrix().trace().real(), 1.0, 1e-10);
    }
  }
}

TEST(Properties, TensorThenTraceRecoversFirstFactor) {
  Rng rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const DensityOperator a = random_density(rng, {{"a", static_cast<std::size_t>(2 + 2 * (trial % 2))}});
    const DensityOperator b = random_density(rng, {{"b", 2}});
    ASSERT_LE(max_abs(partial_trace(tensor_product(a, b), {"a"}).matrix() - a.matrix()), 1e-10);
  }
}

}  // namespace
}  // namespace qreal
