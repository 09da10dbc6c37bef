#pragma once

#include <gpencil/types.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gpencil {

enum class SetKind { Real, Integer };

/// An ordered finite set of distinct positive values. Order is kept as
/// given; nothing downstream requires sorted input.
///
/// Integer sets hold values >= 1 and can build all four matrices. Real sets
/// hold exact rationals and only build MAX/MIN matrices.
class SetSpec {
 public:
  static SetSpec real(std::vector<Rational> elements);
  static SetSpec big_integer(std::vector<BigInt> elements);
  static SetSpec integer(const std::vector<long>& elements);
  /// {first, first+1, ..., last}
  static SetSpec range(long first, long last);
  /// Real set from doubles; each value is converted exactly.
  static SetSpec from_doubles(const std::vector<double>& elements);

  SetKind kind() const { return kind_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Rational>& elements() const { return elements_; }
  const Rational& operator[](std::size_t i) const { return elements_[i]; }

  /// Elements as integers; throws InvalidSet for a real set.
  std::vector<BigInt> integers() const;
  std::vector<double> to_doubles() const;

  Rational min() const;
  Rational max() const;

  std::string to_string() const;

 private:
  SetSpec(std::vector<Rational> elements, SetKind kind);

  std::vector<Rational> elements_;
  SetKind kind_;
};

/// Bijection on {1..n} stored as a 1-based image array.
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  /// sigma(i) for 1-based i.
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<std::size_t>& images() const { return images_; }

 private:
  std::vector<std::size_t> images_;
};

RationalMatrix build_max_matrix(const SetSpec& s);
RationalMatrix build_min_matrix(const SetSpec& s);
BigIntMatrix build_gcd_matrix(const SetSpec& t);
BigIntMatrix build_lcm_matrix(const SetSpec& t);

/// Exact integer MAX/MIN matrices for an integer set.
BigIntMatrix build_max_matrix_int(const SetSpec& t);
BigIntMatrix build_min_matrix_int(const SetSpec& t);

/// X_sigma with (X_sigma)_{ij} = X_{sigma(i), sigma(j)}.
template <typename Derived>
Matrix<typename Derived::Scalar> permute_conjugate(const Eigen::MatrixBase<Derived>& x,
                                                   const Permutation& sigma) {
  const auto n = static_cast<std::size_t>(x.rows());
  if (x.rows() != x.cols() || sigma.size() != n) {
    throw DimensionMismatch("permute_conjugate: permutation of order " +
                            std::to_string(sigma.size()) + " applied to a " +
                            std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                            " matrix");
  }
  Matrix<typename Derived::Scalar> out(x.rows(), x.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(Eigen::Index(i), Eigen::Index(j)) =
          x(Eigen::Index(sigma(i + 1) - 1), Eigen::Index(sigma(j + 1) - 1));
    }
  }
  return out;
}

template <typename Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& x) {
  if (x.rows() != x.cols()) return false;
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < i; ++j)
      if (x(i, j) != x(j, i)) return false;
  return true;
}

}  // namespace gpencil
