#include "generators.hpp"

#include <gpencil/exact_det.hpp>
#include <gpencil/modular.hpp>
#include <gpencil/reference.hpp>
#include <gpencil/set_matrix.hpp>

#include <doctest.h>

#include <cmath>

using namespace gpencil;
using namespace gpencil::reference;
using namespace gpencil::modular;
namespace gt = gpencil::testing;

namespace {

IntPolynomial range_charpoly(long n) {
  const auto t = SetSpec::range(1, n);
  return pencil_charpoly(build_lcm_matrix(t), build_gcd_matrix(t));
}

// Independent oracle: det(A - xB) at an integer x through cofactor expansion.
BigInt cofactor_at(const BigIntMatrix& a, const BigIntMatrix& b, long x) {
  const BigIntMatrix m = a - BigInt(x) * b;
  return cofactor_determinant(m);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p{1, 1};  // 1 + x
  const IntPolynomial q{-6, 0, 1};
  CHECK((p * q) == IntPolynomial{-6, -6, 1, 1});
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(IntPolynomial::linear_root(BigInt(3)) == IntPolynomial{-3, 1});
  CHECK((p * q).divide_exact(BigInt(1)) == p * q);
  const IntPolynomial odd{1, 3};
  CHECK_THROWS_AS(odd.divide_exact(BigInt(2)), InternalConsistency);
  const auto [quot, rem] = synthetic_divide(p * q, BigInt(-1));
  CHECK(quot == q);
  CHECK(rem == 0);
  CHECK(IntPolynomial{900, 420, -38, -22}.to_string() == "-22x^3 - 38x^2 + 420x + 900");
}

TEST_CASE("characteristic polynomials on {1..n}") {
  const IntPolynomial lp1{1, 1};
  CHECK(range_charpoly(1) == IntPolynomial{1, -1});
  CHECK(range_charpoly(2) == IntPolynomial{-2, 0, 1});
  CHECK(range_charpoly(3) == IntPolynomial::constant(-2) * lp1 * IntPolynomial{-6, 0, 1});
  CHECK(range_charpoly(4) == IntPolynomial::constant(4) * lp1 * lp1 * IntPolynomial{-12, 0, 1});
  CHECK(range_charpoly(5) == IntPolynomial{960, 2880, 2480, 528, -48, -16});
}

TEST_CASE("the quartic cofactor of p_5 comes from exact division") {
  const auto [quot, rem] = synthetic_divide(range_charpoly(5), BigInt(-1));
  CHECK(rem == 0);
  const auto q = quot.divide_exact(BigInt(-16));
  CHECK(q == IntPolynomial{-60, -120, -35, 2, 1});
  CHECK(poly_eval_integer(q, BigInt(-1)) == 24);
}

TEST_CASE("charpoly of {2,3,5}") {
  const auto t = SetSpec::integer({2, 3, 5});
  CHECK(pencil_charpoly(build_lcm_matrix(t), build_gcd_matrix(t)) == IntPolynomial{900, 420, -38, -22});
}

TEST_CASE("multiplicity of -1") {
  const std::size_t expected[] = {0, 0, 1, 2, 1, 0};
  for (long n = 1; n <= 6; ++n) CHECK(root_multiplicity(range_charpoly(n), BigInt(-1)) == expected[n - 1]);
  CHECK_THROWS_AS(root_multiplicity(IntPolynomial{}, BigInt(1)), InvalidParameter);
}

TEST_CASE("surd evaluation") {
  const auto v = poly_eval_surd(range_charpoly(5), BigInt(42));
  CHECK(v.rational_part == 20448);
  CHECK(v.surd_part == -3168);
  CHECK(poly_eval_surd(range_charpoly(3), BigInt(6)).is_zero());
  CHECK(poly_eval_surd(range_charpoly(4), BigInt(12)).is_zero());
  CHECK_THROWS_AS(poly_eval_surd(range_charpoly(3), BigInt(9)), InvalidParameter);
  CHECK_THROWS_AS(poly_eval_surd(range_charpoly(3), BigInt(0)), InvalidParameter);
  CHECK_THROWS_AS(poly_eval_surd(range_charpoly(3), BigInt(-2)), InvalidParameter);
}

TEST_CASE("property: surd evaluation matches floating evaluation") {
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = gt::random_integer_set(std::size_t(gt::uniform(1, 5)), 12);
    const auto p = pencil_charpoly(build_lcm_matrix(t), build_gcd_matrix(t));
    long m = gt::uniform(2, 50);
    if (long r = std::lround(std::sqrt(double(m))); r * r == m) ++m;
    const auto v = poly_eval_surd(p, BigInt(m));
    const double exact = v.rational_part.convert_to<double>() + v.surd_part.convert_to<double>() * std::sqrt(double(m));
    const double direct = poly_eval_real(p, std::sqrt(double(m)));
    CHECK(std::abs(exact - direct) <= 1e-9 * (1.0 + std::abs(direct)));
  }
}

TEST_CASE("interpolation error path") {
  CHECK(interpolate_consecutive({BigInt(0), BigInt(1), BigInt(4)}) == IntPolynomial{0, 0, 1});
  CHECK_THROWS_AS(interpolate_consecutive({BigInt(0), BigInt(0), BigInt(1)}), InternalConsistency);
}

TEST_CASE("charpoly dimension errors") {
  CHECK_THROWS_AS(pencil_charpoly(BigIntMatrix::Ones(2, 2), BigIntMatrix::Ones(3, 3)), DimensionMismatch);
}

TEST_CASE("property: Bareiss agrees with cofactor expansion") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = gt::random_integer_matrix(gt::uniform(1, 6), -20, 20);
    CHECK(bareiss_determinant(m) == cofactor_determinant(m));
  }
  CHECK(bareiss_determinant(BigIntMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(bareiss_determinant(BigIntMatrix::Ones(2, 3)), DimensionMismatch);
}

TEST_CASE("property: Bareiss works for rational scalars") {
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::Index n = gt::uniform(1, 5);
    RationalMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j) m(i, j) = Rational(gt::uniform(-9, 9), gt::uniform(1, 7));
    CHECK(bareiss_determinant(m) == cofactor_determinant(m));
  }
}

TEST_CASE("property: charpoly agrees with the determinant at integer points") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = gt::random_integer_set(std::size_t(gt::uniform(1, 6)), 40);
    const auto a = build_lcm_matrix(t), b = build_gcd_matrix(t);
    const auto p = pencil_charpoly(a, b);
    CHECK(p.degree() <= long(t.size()));
    for (long x : {-3L, -1L, 2L, 7L}) CHECK(poly_eval_integer(p, BigInt(x)) == cofactor_at(a, b, x));
    // Boundary coefficients: p(0) = det A, leading = (-1)^n det B.
    CHECK(p.coefficient(0) == cofactor_determinant(a));
    const BigInt det_b = cofactor_determinant(b);
    CHECK(p.coefficient(std::size_t(t.size())) == (t.size() % 2 ? BigInt(-det_b) : det_b));
  }
}

TEST_CASE("property: Smith determinant on {1..n} is a product of totients") {
  for (long n = 1; n <= 8; ++n) {
    const auto g = build_gcd_matrix(SetSpec::range(1, n));
    BigInt product = 1;
    for (long k = 1; k <= n; ++k) product *= euler_totient(std::uint64_t(k));
    CHECK(bareiss_determinant(g) == product);
    CHECK(cofactor_determinant(g) == product);
  }
}

TEST_CASE("modular zero test") {
  CHECK_THROWS_AS(modular_zero_test(BigIntMatrix::Ones(2, 2), 0), InvalidParameter);

  const BigIntMatrix singular = BigIntMatrix::Ones(3, 3);
  const auto z = modular_zero_test(singular);
  CHECK(z.verdict == Verdict::ProbablyZero);
  CHECK(z.is_zero());
  CHECK(z.primes_used == kDefaultPrimes);
  CHECK_FALSE(z.witness);

  const auto zc = modular_zero_test(singular, 1, true);
  CHECK(zc.verdict == Verdict::CertifiedZero);
  REQUIRE(zc.hadamard_bits);
  CHECK(zc.primes_used >= 1);

  BigIntMatrix id = BigIntMatrix::Identity(3, 3);
  const auto nz = modular_zero_test(id);
  CHECK(nz.verdict == Verdict::CertifiedNonZero);
  REQUIRE(nz.witness);
  CHECK(*nz.witness == prime_sequence(0, 1)[0]);
  CHECK(nz.primes_used == 1);
  CHECK(to_string(Verdict::CertifiedZero) == "certified-zero");
}

TEST_CASE("property: modular test agrees with the exact determinant") {
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = gt::uniform(1, 5);
    BigIntMatrix m = gt::random_integer_matrix(n, -4, 4);
    if (trial % 3 == 0 && n > 1) m.row(n - 1) = m.row(0) * BigInt(2);  // force singular
    const BigInt det = bareiss_determinant(m);
    const auto v = modular_zero_test(m, 4, true, std::uint64_t(trial));
    CHECK(v.is_zero() == (det == 0));
    CHECK(v.verdict != Verdict::ProbablyZero);
    for (auto p : prime_sequence(std::uint64_t(trial), 2)) CHECK(determinant_mod(m, p) == reduce(det, p));
  }
}

TEST_CASE("Hadamard bound dominates the determinant") {
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = gt::random_integer_matrix(gt::uniform(1, 6), -50, 50);
    CHECK(abs(bareiss_determinant(m)) <= hadamard_bound(m));
  }
  CHECK(bit_length(BigInt(0)) == 0);
  CHECK(bit_length(BigInt(255)) == 8);
  CHECK(bit_length(BigInt(256)) == 9);
}
