#pragma once

// Slow, independent routines used to cross-check the production paths.
// Nothing here is called by the solvers themselves.

#include <gpencil/pencil_solve.hpp>
#include <gpencil/types.hpp>

#include <Eigen/Eigenvalues>

#include <cstdint>
#include <numeric>
#include <vector>

namespace gpencil::reference {

/// Laplace expansion along the first row. Exponential; keep n small.
template <typename Derived>
typename Derived::Scalar cofactor_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar total(0);
  Matrix<Scalar> minor(n - 1, n - 1);
  for (Eigen::Index c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    for (Eigen::Index i = 1; i < n; ++i)
      for (Eigen::Index j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    Scalar term = m(0, c) * cofactor_determinant(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Euler's totient by counting residues coprime to n.
inline std::uint64_t euler_totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

/// Generalized eigenvalues from Eigen's own symmetric-definite solver.
inline Spectrum eigen_generalized_eigenvalues(const RealMatrix& a, const RealMatrix& b) {
  Eigen::GeneralizedSelfAdjointEigenSolver<RealMatrix> solver(a, b, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

}  // namespace gpencil::reference
