// Seeded randomness and random quantum objects.
//
// All draws come from std::mt19937_64 seeded through std::seed_seq with
// (seed, stream); both algorithms are fully specified by the standard. Uniform
// and Gaussian variates are derived here (53-bit mantissa, Box-Muller) instead
// of through the <random> distributions, whose output is implementation
// defined, so a (seed, stream) pair gives the same numbers on every platform.
#pragma once

#include "qrealism/density.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace qreal {

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Standard normal.
  double normal() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    return r * std::cos(2.0 * kPi * u2);
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Ginibre matrix with standard complex Gaussian entries.
inline ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = cplx(rng.normal(), rng.normal());
  return g;
}

/// Haar-random unitary (QR of a Ginibre matrix with phase-fixed R).
inline ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
  const ComplexMatrix g = ginibre(rng, dim, dim);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0.0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

inline ComplexVector random_ket(Rng& rng, std::size_t dim) {
  ComplexVector v = ginibre(rng, dim, 1).col(0);
  return v / v.norm();
}

/// Random mixed state of random rank 1..dim (G G^dagger / Tr).
inline DensityOperator random_density(Rng& rng, FactorList factors) {
  const std::size_t d = total_dimension(factors);
  const std::size_t rank = 1 + static_cast<std::size_t>(rng.next_u64() % d);
  const ComplexMatrix g = ginibre(rng, d, rank);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityOperator(std::move(m), std::move(factors));
}

inline DensityOperator random_pure(Rng& rng, FactorList factors) {
  const std::size_t d = total_dimension(factors);
  return DensityOperator::pure(random_ket(rng, d), std::move(factors));
}

}  // namespace qreal
