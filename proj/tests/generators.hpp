#pragma once

// Small hand-rolled generators shared by the property tests.

#include <gpencil/set_matrix.hpp>

#include <random>
#include <set>

namespace gpencil::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eedf00dULL);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline double uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

// n distinct integers in [1, max_value].
inline std::vector<long> distinct_integers(std::size_t n, long max_value) {
  std::set<long> seen;
  std::vector<long> v;
  while (v.size() < n) {
    const long x = uniform(1, max_value);
    if (seen.insert(x).second) v.push_back(x);
  }
  return v;
}

inline SetSpec random_integer_set(std::size_t n, long max_value) {
  return SetSpec::integer(distinct_integers(n, max_value));
}

inline SetSpec random_real_set(std::size_t n, double lo = 1.0, double hi = 1000.0) {
  std::set<double> seen;
  std::vector<double> v;
  while (v.size() < n) {
    const double x = uniform_real(lo, hi);
    if (seen.insert(x).second) v.push_back(x);
  }
  return SetSpec::from_doubles(v);
}

inline Permutation random_permutation(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng());
  return Permutation(std::move(v));
}

inline BigIntMatrix random_integer_matrix(Eigen::Index n, long lo, long hi) {
  BigIntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = uniform(lo, hi);
  return m;
}

}  // namespace gpencil::testing
