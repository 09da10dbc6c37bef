#include <gpencil/exact_det.hpp>
#include <gpencil/modular.hpp>

#include <sstream>

namespace gpencil {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending)
    : coeffs_(ascending.begin(), ascending.end()) {
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::linear_root(BigInt r) {
  return IntPolynomial(std::vector<BigInt>{BigInt(-r), BigInt(1)});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = coefficient(k) + o.coefficient(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = coefficient(k) - o.coefficient(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const BigInt& s) const {
  std::vector<BigInt> c(coeffs_);
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_exact(const BigInt& d) const {
  if (d == 0) throw InvalidParameter("division of a polynomial by zero");
  std::vector<BigInt> c(coeffs_.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    BigInt q, r;
    divide_qr(coeffs_[k], d, q, r);
    if (r != 0) {
      throw InternalConsistency("coefficient " + coeffs_[k].str() + " of degree " +
                                std::to_string(k) + " is not divisible by " + d.str());
    }
    c[k] = std::move(q);
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << '^' << k;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

std::pair<IntPolynomial, BigInt> synthetic_divide(const IntPolynomial& p, const BigInt& r) {
  const auto& c = p.coefficients();
  if (c.empty()) return {IntPolynomial{}, BigInt(0)};
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t k = c.size(); k-- > 0;) {
    carry = carry * r + c[k];
    if (k > 0) q[k - 1] = carry;
  }
  return {IntPolynomial(std::move(q)), carry};
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::CertifiedZero:
      return "certified-zero";
    case Verdict::CertifiedNonZero:
      return "certified-nonzero";
    case Verdict::ProbablyZero:
      return "probably-zero";
  }
  return "unknown";
}

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return std::size_t(msb(abs(x))) + 1;
}

BigInt hadamard_bound(const BigIntMatrix& m) {
  BigInt bound = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    BigInt sq = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) sq += m(i, j) * m(i, j);
    BigInt root = sqrt(sq);
    if (root * root < sq) ++root;
    bound *= root;
  }
  return bound;
}

std::size_t primes_to_certify(const std::vector<std::uint64_t>& primes, const BigInt& bound) {
  const BigInt target = 2 * bound;
  BigInt product = 1;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (product > target) return k;
    product *= primes[k];
  }
  if (product > target) return primes.size();
  return primes.size() + 1;  // not enough primes supplied
}

ZeroTestVerdict modular_zero_test(const BigIntMatrix& m, std::size_t num_primes, bool certify,
                                  std::uint64_t seed) {
  if (num_primes == 0) throw InvalidParameter("modular_zero_test needs num_primes >= 1");
  if (m.rows() != m.cols()) throw DimensionMismatch("zero test of a non-square matrix");

  ZeroTestVerdict out;
  std::size_t count = num_primes;
  std::vector<std::uint64_t> primes;
  if (certify) {
    const BigInt bound = hadamard_bound(m);
    out.hadamard_bits = bit_length(bound);
    // 61-bit primes: this many always suffices, then trim to the exact need.
    const std::size_t generous = (*out.hadamard_bits + 1) / 61 + 2;
    primes = modular::prime_sequence(seed, std::max(count, generous));
    count = std::max(count, primes_to_certify(primes, bound));
    primes.resize(count);
  } else {
    primes = modular::prime_sequence(seed, count);
  }

  for (std::size_t k = 0; k < count; ++k) {
    if (modular::determinant_mod(m, primes[k]) != 0) {
      out.verdict = Verdict::CertifiedNonZero;
      out.witness = primes[k];
      out.primes_used = k + 1;
      return out;
    }
  }
  out.primes_used = count;
  out.verdict = certify ? Verdict::CertifiedZero : Verdict::ProbablyZero;
  return out;
}

// Lagrange form over the nodes 0..n: multiplying through by n! turns every
// basis denominator k!(n-k)! into a signed binomial coefficient.
IntPolynomial interpolate_consecutive(const std::vector<BigInt>& values) {
  if (values.empty()) return {};
  const std::size_t n = values.size() - 1;

  IntPolynomial nodes = IntPolynomial::constant(1);  // prod_{i=0..n} (x - i)
  for (std::size_t i = 0; i <= n; ++i) nodes = nodes * IntPolynomial::linear_root(BigInt(i));

  BigInt factorial = 1;
  for (std::size_t i = 2; i <= n; ++i) factorial *= i;

  IntPolynomial scaled;
  BigInt binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) binom = binom * BigInt(n - k + 1) / BigInt(k);
    if (values[k] != 0) {
      auto [basis, rem] = synthetic_divide(nodes, BigInt(k));
      if (rem != 0) throw InternalConsistency("node polynomial does not vanish at a node");
      BigInt weight = values[k] * binom;
      if ((n - k) % 2 == 1) weight = -weight;
      scaled = scaled + basis * weight;
    }
  }
  return scaled.divide_exact(factorial);
}

IntPolynomial pencil_charpoly(const BigIntMatrix& a, const BigIntMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw DimensionMismatch("pencil_charpoly: A is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " but B is " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
  }
  const auto n = std::size_t(a.rows());
  std::vector<BigInt> values;
  values.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const BigIntMatrix shifted = a - BigInt(k) * b;
    values.push_back(bareiss_determinant(shifted));
  }
  return interpolate_consecutive(values);
}

BigInt poly_eval_integer(const IntPolynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

double poly_eval_real(const IntPolynomial& p, double x) {
  double acc = 0.0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k].convert_to<double>();
  return acc;
}

std::size_t root_multiplicity(const IntPolynomial& p, const BigInt& r) {
  if (p.is_zero()) throw InvalidParameter("root multiplicity of the zero polynomial is undefined");
  std::size_t k = 0;
  IntPolynomial cur = p;
  for (;;) {
    auto [q, rem] = synthetic_divide(cur, r);
    if (rem != 0) return k;
    ++k;
    cur = std::move(q);
  }
}

SurdValue poly_eval_surd(const IntPolynomial& p, const BigInt& m) {
  if (m <= 0) throw InvalidParameter("radicand " + m.str() + " must be positive");
  const BigInt root = sqrt(m);
  if (root * root == m) {
    throw InvalidParameter("radicand " + m.str() +
                           " is a perfect square; evaluate at the integer root instead");
  }
  // (a + b*sqrt(m)) * sqrt(m) = b*m + a*sqrt(m)
  BigInt a = 0, b = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    BigInt na = b * m + c[k];
    b = a;
    a = std::move(na);
  }
  return {a, b, m};
}

}  // namespace gpencil
