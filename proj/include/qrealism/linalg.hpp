// Dense complex linear algebra for few-qubit operators (dimension <= 16).
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace qreal {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Absolute entrywise tolerance used for Hermiticity, trace and projector checks.
inline constexpr double kStructureTolerance = 1e-10;

/// Largest dimension handled by the dense routines (four qubits).
inline constexpr std::size_t kMaxDimension = 16;

/// Signals that a caller handed in a matrix that violates a structural precondition.
class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const cplx z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// max |m - m^dagger| entrywise.
inline double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return max_abs(m - m.adjoint());
}

/// Kronecker product with `a` as the leftmost (most significant) factor.
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline ComplexMatrix tensor_product(std::initializer_list<ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) out = tensor_product(out, f);
  return out;
}

inline ComplexVector tensor_product(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

inline ComplexVector tensor_product(std::initializer_list<ComplexVector> factors) {
  ComplexVector out = ComplexVector::Ones(1);
  for (const auto& f : factors) out = tensor_product(out, f);
  return out;
}

/// Computational basis ket |index> in dimension `dim`.
inline ComplexVector basis_ket(std::size_t dim, std::size_t index) {
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

/// |v><v| (no normalization).
inline ComplexMatrix outer(const ComplexVector& v) { return v * v.adjoint(); }

inline ComplexMatrix identity(std::size_t dim) {
  return ComplexMatrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

namespace pauli {

inline ComplexMatrix i2() { return ComplexMatrix::Identity(2, 2); }

inline ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0, cplx(0, -1), cplx(0, 1), 0;
  return m;
}

inline ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// Index 0..3 -> I, X, Y, Z.
inline ComplexMatrix by_index(int i) {
  switch (i) {
    case 0: return i2();
    case 1: return x();
    case 2: return y();
    case 3: return z();
    default: throw LinalgError("pauli index out of range: " + std::to_string(i));
  }
}

}  // namespace pauli

struct Eigensystem {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are orthonormal eigenvectors
};

/// Hermitian eigendecomposition. Throws LinalgError on non-square, non-finite or
/// non-Hermitian input (defect above 1e-10).
inline Eigensystem eigh(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw LinalgError("eigh: matrix is not square");
  if (!all_finite(m)) throw LinalgError("eigh: non-finite entries");
  const double defect = hermiticity_defect(m);
  if (defect > kStructureTolerance)
    throw LinalgError("eigh: matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw LinalgError("eigh: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// Eigenvalues only, for a matrix already known to be Hermitian up to rounding.
/// 2x2 blocks use the closed form since they dominate the discord optimizer.
inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() == 2) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const double mid = 0.5 * (a + d);
    const double half = 0.5 * (a - d);
    const double r = std::sqrt(half * half + std::norm(m(0, 1)));
    RealVector v(2);
    v << mid - r, mid + r;
    return v;
  }
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

/// Applies a scalar function to a Hermitian matrix through its spectrum.
template <typename F>
ComplexMatrix hermitian_function(const ComplexMatrix& m, F&& f) {
  const Eigensystem es = eigh(m);
  RealVector mapped(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) mapped(i) = f(es.values(i));
  return es.vectors * mapped.cast<cplx>().asDiagonal() * es.vectors.adjoint();
}

/// max |U^dagger U - I|.
inline double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return INFINITY;
  return max_abs(u.adjoint() * u - identity(static_cast<std::size_t>(u.rows())));
}

}  // namespace qreal
