#pragma once

#include <gpencil/exact_det.hpp>

#include <cstdint>
#include <vector>

namespace gpencil {

/// True iff the binary expansion of n starts with the bits "10".
bool binary_begins_10(std::uint64_t n);

/// a(2^m + k) = 2^(m+1) + k for 0 <= k < 2^m; a(1) = 2.
std::uint64_t a004754_term(std::uint64_t index);

struct SequenceWindow {
  std::uint64_t start_index = 1;
  std::vector<std::uint64_t> terms;
};

SequenceWindow a004754_window(std::uint64_t start_index, std::size_t count);

/// Whether {n <= bound : binary_begins_10(n)} \ {2} equals the terms of
/// a004754 up to `bound` with the first term dropped.
bool predicate_formula_consistency(std::uint64_t bound);

/// L + G on {1..n}.
BigIntMatrix lcm_plus_gcd(std::size_t n);

struct ScanRecord {
  std::size_t n = 0;
  ZeroTestVerdict exact_verdict;
  bool has_minus_one = false;
  bool predicted = false;
  bool agrees = false;
  /// n > 3; records outside this range are reported but not compared.
  bool in_conjecture_range = false;
};

enum class ScanStrategy {
  Incremental,  // one leading-minor elimination per prime covers every n
  Rebuild,      // modular_zero_test on each L + G from scratch
};

struct ScanOptions {
  std::size_t max_n = 1;
  std::size_t num_primes = kDefaultPrimes;
  bool certify = false;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  ScanStrategy strategy = ScanStrategy::Incremental;
};

/// Decides for n = 1..max_n whether det(L + G) on {1..n} vanishes, i.e.
/// whether -1 is a generalized eigenvalue of (L, G). Records are sorted by n
/// and identical for both strategies and any job count.
std::vector<ScanRecord> scan_minus_one(const ScanOptions& options);

}  // namespace gpencil
