#include <gpencil/conjecture.hpp>
#include <gpencil/modular.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

namespace gpencil {

bool binary_begins_10(std::uint64_t n) {
  if (n == 0) throw InvalidParameter("binary_begins_10 needs n >= 1");
  if (n < 2) return false;
  const int width = std::bit_width(n);
  return (n >> (width - 2)) == 0b10;
}

std::uint64_t a004754_term(std::uint64_t index) {
  if (index == 0) throw InvalidParameter("a004754 is indexed from 1");
  const int m = std::bit_width(index) - 1;
  const std::uint64_t k = index - (std::uint64_t{1} << m);
  return (std::uint64_t{1} << (m + 1)) + k;
}

SequenceWindow a004754_window(std::uint64_t start_index, std::size_t count) {
  SequenceWindow w;
  w.start_index = start_index;
  w.terms.reserve(count);
  for (std::size_t i = 0; i < count; ++i) w.terms.push_back(a004754_term(start_index + i));
  return w;
}

bool predicate_formula_consistency(std::uint64_t bound) {
  if (bound < 4) throw InvalidParameter("predicate_formula_consistency needs bound >= 4");
  std::set<std::uint64_t> by_predicate, by_formula;
  for (std::uint64_t n = 1; n <= bound; ++n)
    if (n != 2 && binary_begins_10(n)) by_predicate.insert(n);
  for (std::uint64_t i = 2;; ++i) {
    const auto a = a004754_term(i);
    if (a > bound) break;
    by_formula.insert(a);
  }
  return by_predicate == by_formula;
}

BigIntMatrix lcm_plus_gcd(std::size_t n) {
  const auto order = Eigen::Index(n);
  BigIntMatrix m(order, order);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      const std::uint64_t g = std::gcd(i, j);
      const BigInt v(std::uint64_t(i / g * j + g));
      m(Eigen::Index(i - 1), Eigen::Index(j - 1)) = v;
      m(Eigen::Index(j - 1), Eigen::Index(i - 1)) = v;
    }
  }
  return m;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t count, std::size_t jobs, Fn fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (std::size_t t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

ScanRecord make_record(std::size_t n, ZeroTestVerdict v) {
  ScanRecord r;
  r.n = n;
  r.has_minus_one = v.is_zero();
  r.exact_verdict = std::move(v);
  r.in_conjecture_range = n > 3;
  r.predicted = r.in_conjecture_range && binary_begins_10(n);
  r.agrees = r.has_minus_one == r.predicted;
  return r;
}

std::vector<ScanRecord> scan_rebuild(const ScanOptions& o, const BigIntMatrix& full) {
  std::vector<ScanRecord> out(o.max_n);
  parallel_for(o.max_n, o.jobs, [&](std::size_t i) {
    const auto k = Eigen::Index(i + 1);
    const BigIntMatrix block = full.topLeftCorner(k, k);
    out[i] = make_record(i + 1, modular_zero_test(block, o.num_primes, o.certify, o.seed));
  });
  return out;
}

// Hadamard bound of every leading block, from running row sums of squares.
std::vector<BigInt> leading_hadamard_bounds(const BigIntMatrix& m) {
  const auto n = std::size_t(m.rows());
  std::vector<BigInt> row_sq(n, 0), bounds;
  bounds.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto kk = Eigen::Index(k);
    for (std::size_t i = 0; i < k; ++i) row_sq[i] += m(Eigen::Index(i), kk) * m(Eigen::Index(i), kk);
    for (std::size_t j = 0; j <= k; ++j) row_sq[k] += m(kk, Eigen::Index(j)) * m(kk, Eigen::Index(j));
    BigInt h = 1;
    for (std::size_t i = 0; i <= k; ++i) {
      BigInt root = sqrt(row_sq[i]);
      if (root * root < row_sq[i]) ++root;
      h *= root;
    }
    bounds.push_back(std::move(h));
  }
  return bounds;
}

std::vector<ScanRecord> scan_incremental(const ScanOptions& o, const BigIntMatrix& full) {
  const std::size_t n_max = o.max_n;
  std::vector<std::size_t> needed(n_max, o.num_primes);
  std::vector<std::optional<std::size_t>> bits(n_max);
  std::vector<std::uint64_t> primes;

  if (o.certify) {
    const auto bounds = leading_hadamard_bounds(full);
    const std::size_t generous = (bit_length(bounds.back()) + 1) / 61 + 2;
    primes = modular::prime_sequence(o.seed, std::max(o.num_primes, generous));
    for (std::size_t i = 0; i < n_max; ++i) {
      bits[i] = bit_length(bounds[i]);
      needed[i] = std::max(o.num_primes, primes_to_certify(primes, bounds[i]));
    }
  } else {
    primes = modular::prime_sequence(o.seed, o.num_primes);
  }

  // witness[i]: index of the first prime with a nonzero residue for order i+1.
  std::vector<std::optional<std::size_t>> witness(n_max);
  const std::size_t batch = std::max<std::size_t>(1, o.jobs);
  for (std::size_t first = 0; first < primes.size(); first += batch) {
    // Only orders with no witness yet, still owed this prime, need work.
    std::size_t limit = 0;
    for (std::size_t i = 0; i < n_max; ++i)
      if (!witness[i] && needed[i] > first) limit = i + 1;
    if (limit == 0) break;

    const std::size_t count = std::min(batch, primes.size() - first);
    std::vector<std::vector<bool>> nonzero(count);
    parallel_for(count, o.jobs, [&](std::size_t b) {
      const modular::Montgomery field(primes[first + b]);
      modular::ResidueMatrix block;
      block.order = limit;
      block.data.resize(limit * limit);
      for (std::size_t i = 0; i < limit; ++i)
        for (std::size_t j = 0; j < limit; ++j)
          block(i, j) = field.to_mont(
              modular::reduce(full(Eigen::Index(i), Eigen::Index(j)), field.modulus()));
      nonzero[b] = modular::leading_minor_nonzero(block, field);
    });
    for (std::size_t b = 0; b < count; ++b) {
      const std::size_t pi = first + b;
      for (std::size_t i = 0; i < limit; ++i)
        if (!witness[i] && pi < needed[i] && nonzero[b][i]) witness[i] = pi;
    }
  }

  std::vector<ScanRecord> out;
  out.reserve(n_max);
  for (std::size_t i = 0; i < n_max; ++i) {
    ZeroTestVerdict v;
    v.hadamard_bits = bits[i];
    if (witness[i]) {
      v.verdict = Verdict::CertifiedNonZero;
      v.witness = primes[*witness[i]];
      v.primes_used = *witness[i] + 1;
    } else {
      v.verdict = o.certify ? Verdict::CertifiedZero : Verdict::ProbablyZero;
      v.primes_used = needed[i];
    }
    out.push_back(make_record(i + 1, std::move(v)));
  }
  return out;
}

}  // namespace

std::vector<ScanRecord> scan_minus_one(const ScanOptions& o) {
  if (o.max_n < 1) throw InvalidParameter("scan needs max n >= 1");
  if (o.num_primes < 1) throw InvalidParameter("scan needs at least one prime");
  const BigIntMatrix full = lcm_plus_gcd(o.max_n);
  return o.strategy == ScanStrategy::Rebuild ? scan_rebuild(o, full) : scan_incremental(o, full);
}

}  // namespace gpencil
