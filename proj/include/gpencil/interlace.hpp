#pragma once

#include <gpencil/pencil_solve.hpp>

#include <utility>
#include <vector>

namespace gpencil {

struct InterlaceViolation {
  std::size_t index;  // 1-based k of the failing inequality
  double gap;         // amount by which it fails, always > slack
};

struct InterlaceReport {
  std::size_t order = 0;  // parent order n
  Spectrum parent;
  Spectrum child;
  double slack = 0.0;
  std::vector<InterlaceViolation> violations;
  bool holds = true;
};

/// Top-left k x k block.
template <typename Derived>
Matrix<typename Derived::Scalar> leading_principal_submatrix(const Eigen::MatrixBase<Derived>& x,
                                                             Eigen::Index k) {
  if (k < 1 || k > x.rows() || k > x.cols()) {
    throw InvalidParameter("leading principal submatrix order " + std::to_string(k) +
                           " outside 1.." + std::to_string(std::min(x.rows(), x.cols())));
  }
  return x.topLeftCorner(k, k);
}

/// Checks parent[k] + slack >= child[k] and child[k] + slack >= parent[k+1].
InterlaceReport check_interlacing(const Spectrum& parent, const Spectrum& child, double slack);

/// Interlacing between (A, B) and its order n-1 leading sections.
InterlaceReport check_pencil_interlacing(const RealMatrix& a, const RealMatrix& b, double slack);

struct PositiveCount {
  std::size_t n;
  std::size_t positive;
};

struct PositiveCountReport {
  std::vector<PositiveCount> counts;
  bool monotone = true;
};

/// Number of eigenvalues above 1e-6 for the pencil (L, G) on {1..n},
/// n = 1..max_order, and whether that count never decreases.
PositiveCountReport positive_count_monotone(std::size_t max_order);

}  // namespace gpencil
