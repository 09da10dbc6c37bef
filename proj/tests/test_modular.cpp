#include "generators.hpp"

#include <gpencil/exact_det.hpp>
#include <gpencil/modular.hpp>

#include <boost/multiprecision/miller_rabin.hpp>
#include <doctest.h>

#include <set>

using namespace gpencil;
using namespace gpencil::modular;
namespace gt = gpencil::testing;

TEST_CASE("primality on small and known values") {
  const std::set<std::uint64_t> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t k = 0; k < 50; ++k) CHECK(is_prime(k) == (small.count(k) == 1));
  CHECK(is_prime((std::uint64_t(1) << 61) - 1));  // Mersenne prime
  CHECK_FALSE(is_prime(3215031751ULL));           // strong pseudoprime to bases 2,3,5,7
  CHECK(next_prime(14) == 17);
  CHECK(next_prime(17) == 17);  // smallest prime >= n
  CHECK(next_prime(18) == 19);
}

TEST_CASE("prime sequence: large, distinct, deterministic, prime") {
  for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) {
    const auto primes = prime_sequence(seed, 24);
    CHECK(primes == prime_sequence(seed, 24));
    CHECK(std::set<std::uint64_t>(primes.begin(), primes.end()).size() == primes.size());
    for (auto p : primes) {
      CHECK(p > (std::uint64_t(1) << 60));
      CHECK(p < (std::uint64_t(1) << 62));
      CHECK(boost::multiprecision::miller_rabin_test(BigInt(p), 25));
    }
  }
  CHECK(prime_sequence(1, 1) != prime_sequence(2, 1));
}

TEST_CASE("property: Montgomery arithmetic matches 128-bit reference") {
  const auto primes = prime_sequence(7, 4);
  for (auto p : primes) {
    const Montgomery f(p);
    for (int trial = 0; trial < 500; ++trial) {
      const std::uint64_t a = gt::rng()() % p, b = gt::rng()() % p;
      const auto ma = f.to_mont(a), mb = f.to_mont(b);
      CHECK(f.from_mont(f.mul(ma, mb)) == std::uint64_t((unsigned __int128)a * b % p));
      CHECK(f.from_mont(f.add(ma, mb)) == std::uint64_t(((unsigned __int128)a + b) % p));
      CHECK(f.from_mont(f.sub(ma, mb)) == (a >= b ? a - b : a + p - b));
      CHECK(mulmod(a, b, p) == std::uint64_t((unsigned __int128)a * b % p));
      if (a != 0) CHECK(f.from_mont(f.mul(f.inv(ma), ma)) == 1);
    }
    CHECK(f.from_mont(f.one()) == 1);
    CHECK(powmod(3, p - 1, p) == 1);
  }
}

TEST_CASE("residue reduction handles negatives and big values") {
  const std::uint64_t p = prime_sequence(0, 1)[0];
  CHECK(reduce(BigInt(-1), p) == p - 1);
  const BigInt big = BigInt(p) * BigInt(p) * 3 + 5;
  CHECK(reduce(big, p) == 5);
}

TEST_CASE("property: leading-minor engine matches per-minor determinants") {
  const auto primes = prime_sequence(3, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const Eigen::Index n = gt::uniform(1, 9);
    BigIntMatrix m = gt::random_integer_matrix(n, -2, 2);
    // Sprinkle in structured singular leading blocks.
    if (trial % 4 == 0 && n > 2) m.row(1) = m.row(0);
    if (trial % 5 == 0) m(0, 0) = 0;
    for (auto p : primes) {
      const Montgomery f(p);
      const auto flags = leading_minor_nonzero(to_residues(m, f), f);
      REQUIRE(flags.size() == std::size_t(n));
      for (Eigen::Index k = 1; k <= n; ++k) {
        const BigIntMatrix block = m.topLeftCorner(k, k);
        CHECK(flags[std::size_t(k - 1)] == (determinant_mod(block, p) != 0));
      }
      const auto limited = leading_minor_nonzero(to_residues(m, f), f, 2);
      CHECK(limited.size() == std::min<std::size_t>(2, std::size_t(n)));
    }
  }
}
