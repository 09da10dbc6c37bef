#pragma once

#include <gpencil/set_matrix.hpp>
#include <gpencil/types.hpp>

#include <cstddef>
#include <vector>

namespace gpencil {

inline constexpr double kDefaultPdTolerance = 1e-12;

/// Real generalized eigenvalues in non-increasing order.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts descending; equal values keep their input order.
  explicit Spectrum(std::vector<double> values);

  std::size_t order() const { return values_.size(); }
  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

struct ClusterReport {
  double target = 0.0;
  double tolerance = 0.0;
  std::size_t count = 0;
  std::vector<std::size_t> members;  // 0-based indices into the spectrum
};

/// Lower-triangular F with F F^T = B. Throws NotPositiveDefinite when a pivot
/// drops to pd_tolerance * max diag(B) or below.
RealMatrix cholesky_factor(const RealMatrix& b, double pd_tolerance = kDefaultPdTolerance);

/// C = F^{-1} A F^{-T} for the Cholesky factor F of B, symmetrized.
RealMatrix reduce_to_standard(const RealMatrix& a, const RealMatrix& b,
                              double pd_tolerance = kDefaultPdTolerance);

struct JacobiResult {
  std::vector<double> eigenvalues;  // diagonal order, unsorted
  std::size_t sweeps = 0;
};

/// Cyclic Jacobi on a symmetric matrix. Stops once the off-diagonal Frobenius
/// norm is at most 1e-12 * ||C||_F; NoConvergence after `max_sweeps`.
JacobiResult jacobi_eigenvalues(RealMatrix c, std::size_t max_sweeps = 100);

/// Spectrum of the symmetric-definite pencil A x = lambda B x.
Spectrum generalized_eigenvalues(const RealMatrix& a, const RealMatrix& b,
                                 double pd_tolerance = kDefaultPdTolerance);

/// (r, -1, ..., -1, -r) with r = sqrt(max S / min S); (1) for a singleton.
Spectrum maxmin_closed_form(const SetSpec& s);

/// Closed forms for (L, G): {u, v} -> (sqrt(uv'), -sqrt(uv')) after dividing
/// out gcd(u, v); {1, u, v} with gcd(u, v) = 1 -> (sqrt(uv), -1, -sqrt(uv)).
Spectrum lcmgcd_small_closed_form(const SetSpec& t);

ClusterReport cluster_count(const Spectrum& spec, double target, double tolerance);

}  // namespace gpencil
