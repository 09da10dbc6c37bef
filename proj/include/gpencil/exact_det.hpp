#pragma once

#include <gpencil/types.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gpencil {

/// Polynomial in one indeterminate with arbitrary-precision integer
/// coefficients, stored in ascending order and kept free of trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(BigInt c);
  /// lambda - r
  static IntPolynomial linear_root(BigInt r);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return long(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Coefficient of lambda^k; zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator*(const BigInt& c) const;
  bool operator==(const IntPolynomial& o) const = default;

  /// Divides every coefficient by c; throws InternalConsistency unless exact.
  IntPolynomial divide_exact(const BigInt& c) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

/// Quotient and remainder of p / (lambda - r).
std::pair<IntPolynomial, BigInt> synthetic_divide(const IntPolynomial& p, const BigInt& r);

/// a + b*sqrt(m), m positive and not a perfect square.
struct SurdValue {
  BigInt rational_part;
  BigInt surd_part;
  BigInt radicand;

  bool is_zero() const { return rational_part == 0 && surd_part == 0; }
  bool operator==(const SurdValue&) const = default;
};

enum class Verdict { CertifiedZero, CertifiedNonZero, ProbablyZero };

std::string to_string(Verdict v);

struct ZeroTestVerdict {
  Verdict verdict = Verdict::ProbablyZero;
  std::optional<std::uint64_t> witness;  // prime p with det != 0 (mod p)
  std::size_t primes_used = 0;
  std::optional<std::size_t> hadamard_bits;

  bool is_zero() const { return verdict != Verdict::CertifiedNonZero; }
  bool operator==(const ZeroTestVerdict&) const = default;
};

inline constexpr std::size_t kDefaultPrimes = 16;

/// Fraction-free (Bareiss) determinant with row pivoting on zero pivots.
/// Every division in the recurrence is exact over an integral domain.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  Matrix<Scalar> a = m;
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return Scalar(0);
      a.row(k).swap(a.row(piv));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = Scalar((a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev);
      }
    }
    prev = a(k, k);
  }
  return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// Product of ceil(row Euclidean norm) over all rows; bounds |det M|.
BigInt hadamard_bound(const BigIntMatrix& m);

/// Bit length of a non-negative integer (0 for 0).
std::size_t bit_length(const BigInt& x);

/// Smallest k such that the product of the first k primes exceeds 2*bound.
std::size_t primes_to_certify(const std::vector<std::uint64_t>& primes, const BigInt& bound);

/// Zero test of det(M) over the reproducible prime sequence for `seed`.
/// With `certify`, enough primes are used that their product exceeds twice
/// the Hadamard bound, so a zero verdict is a proof.
ZeroTestVerdict modular_zero_test(const BigIntMatrix& m, std::size_t num_primes = kDefaultPrimes,
                                  bool certify = false, std::uint64_t seed = 0);

/// Unique polynomial of degree <= values.size()-1 through (k, values[k]),
/// k = 0, 1, ...; throws InternalConsistency if its coefficients are not
/// integers.
IntPolynomial interpolate_consecutive(const std::vector<BigInt>& values);

/// det(A - lambda B), exact.
IntPolynomial pencil_charpoly(const BigIntMatrix& a, const BigIntMatrix& b);

BigInt poly_eval_integer(const IntPolynomial& p, const BigInt& x);

/// Largest k with (lambda - r)^k dividing p.
std::size_t root_multiplicity(const IntPolynomial& p, const BigInt& r);

SurdValue poly_eval_surd(const IntPolynomial& p, const BigInt& m);

/// Horner evaluation in double precision.
double poly_eval_real(const IntPolynomial& p, double x);

}  // namespace gpencil
