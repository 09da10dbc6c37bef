#pragma once

#include <gpencil/types.hpp>

#include <cstdint>
#include <vector>

namespace gpencil::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Montgomery arithmetic modulo an odd prime p < 2^62, R = 2^64.
/// Residues handed to add/sub/mul must already be in Montgomery form.
class Montgomery {
 public:
  explicit Montgomery(u64 modulus);

  u64 modulus() const { return p_; }

  u64 to_mont(u64 x) const { return mul(x % p_, r2_); }
  u64 from_mont(u64 x) const { return reduce(x); }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 mul(u64 a, u64 b) const { return reduce(u128(a) * b); }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 one() const { return one_; }

 private:
  u64 reduce(u128 t) const {
    const u64 m = u64(t) * pinv_neg_;
    const u64 r = u64((t + u128(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }

  u64 p_;
  u64 pinv_neg_;  // -p^{-1} mod 2^64
  u64 r2_;        // 2^128 mod p
  u64 one_;       // 2^64 mod p
};

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);
u64 next_prime(u64 n);

/// The i-th prime of the reproducible sequence for `seed`. All primes lie in
/// [2^61, 2^61 + 2^60 + gap) and are pairwise distinct.
std::vector<u64> prime_sequence(std::uint64_t seed, std::size_t count);

/// x mod p for an arbitrary-precision integer, result in [0, p).
u64 reduce(const BigInt& x, u64 p);

/// Dense row-major square matrix of residues in Montgomery form.
struct ResidueMatrix {
  std::size_t order = 0;
  std::vector<u64> data;

  u64& operator()(std::size_t i, std::size_t j) { return data[i * order + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return data[i * order + j]; }
};

ResidueMatrix to_residues(const BigIntMatrix& m, const Montgomery& field);

/// det(M) mod p by Gaussian elimination with row pivoting. Plain residue.
u64 determinant_mod(const BigIntMatrix& m, u64 p);

/// For each k = 1..order, whether det of the leading k x k block of M is
/// nonzero mod p. One O(order^3) elimination covers every k; only the first
/// `limit` orders are examined (0 means all).
std::vector<bool> leading_minor_nonzero(const ResidueMatrix& m, const Montgomery& field,
                                        std::size_t limit = 0);

}  // namespace gpencil::modular
