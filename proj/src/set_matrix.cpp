#include <gpencil/set_matrix.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace gpencil {

namespace {

void validate(const std::vector<Rational>& elements) {
  if (elements.empty()) throw InvalidSet("set is empty");
  std::set<Rational> seen;
  for (const auto& e : elements) {
    if (e <= 0) throw InvalidSet("set element " + e.str() + " is not strictly positive");
    if (!seen.insert(e).second) throw InvalidSet("set element " + e.str() + " is repeated");
  }
}

bool is_integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

template <typename Scalar, typename Op>
Matrix<Scalar> pairwise(const std::vector<Scalar>& v, Op op) {
  const auto n = Eigen::Index(v.size());
  Matrix<Scalar> out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out(i, i) = v[std::size_t(i)];
    for (Eigen::Index j = 0; j < i; ++j) {
      out(i, j) = op(v[std::size_t(i)], v[std::size_t(j)]);
      out(j, i) = out(i, j);
    }
  }
  return out;
}

}  // namespace

SetSpec::SetSpec(std::vector<Rational> elements, SetKind kind)
    : elements_(std::move(elements)), kind_(kind) {}

SetSpec SetSpec::real(std::vector<Rational> elements) {
  validate(elements);
  return SetSpec(std::move(elements), SetKind::Real);
}

SetSpec SetSpec::big_integer(std::vector<BigInt> elements) {
  std::vector<Rational> r;
  r.reserve(elements.size());
  for (auto& e : elements) r.emplace_back(std::move(e));
  validate(r);
  return SetSpec(std::move(r), SetKind::Integer);
}

SetSpec SetSpec::integer(const std::vector<long>& elements) {
  return big_integer(std::vector<BigInt>(elements.begin(), elements.end()));
}

SetSpec SetSpec::range(long first, long last) {
  if (first < 1 || last < first) {
    throw InvalidSet("range " + std::to_string(first) + ".." + std::to_string(last) +
                     " must satisfy 1 <= first <= last");
  }
  std::vector<BigInt> v;
  for (long k = first; k <= last; ++k) v.emplace_back(k);
  return big_integer(std::move(v));
}

SetSpec SetSpec::from_doubles(const std::vector<double>& elements) {
  std::vector<Rational> r(elements.begin(), elements.end());
  return real(std::move(r));
}

std::vector<BigInt> SetSpec::integers() const {
  std::vector<BigInt> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) {
    if (!is_integral(e)) throw InvalidSet("set element " + e.str() + " is not an integer");
    out.push_back(boost::multiprecision::numerator(e));
  }
  return out;
}

std::vector<double> SetSpec::to_doubles() const {
  std::vector<double> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.convert_to<double>());
  return out;
}

Rational SetSpec::min() const { return *std::min_element(elements_.begin(), elements_.end()); }
Rational SetSpec::max() const { return *std::max_element(elements_.begin(), elements_.end()); }

std::string SetSpec::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? "," : "") << elements_[i].str();
  os << '}';
  return os.str();
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto v : images_) {
    if (v < 1 || v > images_.size() || hit[v - 1]) {
      throw InvalidParameter("permutation image array is not a rearrangement of 1.." +
                             std::to_string(images_.size()));
    }
    hit[v - 1] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{1});
  return Permutation(std::move(v));
}

RationalMatrix build_max_matrix(const SetSpec& s) {
  return pairwise(s.elements(), [](const Rational& a, const Rational& b) { return a < b ? b : a; });
}

RationalMatrix build_min_matrix(const SetSpec& s) {
  return pairwise(s.elements(), [](const Rational& a, const Rational& b) { return a < b ? a : b; });
}

BigIntMatrix build_gcd_matrix(const SetSpec& t) {
  return pairwise(t.integers(), [](const BigInt& a, const BigInt& b) { return BigInt(gcd(a, b)); });
}

BigIntMatrix build_lcm_matrix(const SetSpec& t) {
  return pairwise(t.integers(),
                  [](const BigInt& a, const BigInt& b) { return BigInt(a * b / gcd(a, b)); });
}

BigIntMatrix build_max_matrix_int(const SetSpec& t) {
  return pairwise(t.integers(), [](const BigInt& a, const BigInt& b) { return a < b ? b : a; });
}

BigIntMatrix build_min_matrix_int(const SetSpec& t) {
  return pairwise(t.integers(), [](const BigInt& a, const BigInt& b) { return a < b ? a : b; });
}

}  // namespace gpencil
