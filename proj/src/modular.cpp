#include <gpencil/modular.hpp>

#include <array>
#include <utility>

namespace gpencil::modular {

u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

Montgomery::Montgomery(u64 modulus) : p_(modulus) {
  if (p_ % 2 == 0 || p_ >= (u64{1} << 62)) {
    throw InvalidParameter("Montgomery modulus must be odd and below 2^62");
  }
  u64 inv = p_;  // correct to 3 bits; each step doubles that
  for (int i = 0; i < 5; ++i) inv *= 2 - p_ * inv;
  pinv_neg_ = ~inv + 1;
  one_ = u64((u128(1) << 64) % p_);
  r2_ = mulmod(one_, one_, p_);
}

u64 Montgomery::pow(u64 a, u64 e) const {
  u64 r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 b : bases) {
    if (n % b == 0) return n == b;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 b : bases) {
    u64 x = powmod(b, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 next_prime(u64 n) {
  if (n <= 2) return 2;
  u64 c = n | 1;
  while (!is_prime(c)) c += 2;
  return c;
}

namespace {

u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<u64> prime_sequence(std::uint64_t seed, std::size_t count) {
  std::vector<u64> primes;
  primes.reserve(count);
  u64 candidate = (u64{1} << 61) + (splitmix64(seed) >> 4);
  for (std::size_t i = 0; i < count; ++i) {
    candidate = next_prime(candidate);
    primes.push_back(candidate);
    candidate += 2;
  }
  return primes;
}

u64 reduce(const BigInt& x, u64 p) {
  static_assert(sizeof(unsigned long) == sizeof(u64));
  return mpz_fdiv_ui(x.backend().data(), p);
}

ResidueMatrix to_residues(const BigIntMatrix& m, const Montgomery& field) {
  if (m.rows() != m.cols()) throw DimensionMismatch("residue matrix must be square");
  ResidueMatrix r;
  r.order = std::size_t(m.rows());
  r.data.resize(r.order * r.order);
  for (std::size_t i = 0; i < r.order; ++i)
    for (std::size_t j = 0; j < r.order; ++j)
      r(i, j) = field.to_mont(reduce(m(Eigen::Index(i), Eigen::Index(j)), field.modulus()));
  return r;
}

u64 determinant_mod(const BigIntMatrix& m, u64 p) {
  const Montgomery f(p);
  ResidueMatrix a = to_residues(m, f);
  const std::size_t n = a.order;
  u64 det = f.one();
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      negate = !negate;
    }
    det = f.mul(det, a(k, k));
    const u64 inv = f.inv(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const u64 factor = f.mul(a(i, k), inv);
      u64* row = &a(i, 0);
      const u64* prow = &a(k, 0);
      for (std::size_t j = k + 1; j < n; ++j) row[j] = f.sub(row[j], f.mul(factor, prow[j]));
    }
  }
  u64 d = f.from_mont(det);
  return (negate && d != 0) ? p - d : d;
}

// Pivots are taken only inside the current leading block, and row/column
// operations only ever add multiples of rows/columns that belong to every
// later block. So the rank of each later leading block is preserved, and
// once the unused part of the block is exhausted its rank equals the number
// of pivots taken so far.
std::vector<bool> leading_minor_nonzero(const ResidueMatrix& m, const Montgomery& field,
                                        std::size_t limit) {
  const std::size_t n = (limit == 0 || limit > m.order) ? m.order : limit;
  std::vector<u64> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);

  std::vector<std::size_t> free_rows, free_cols;  // unused, in index order
  free_rows.reserve(n);
  free_cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    free_rows.push_back(i);
    free_cols.push_back(i);
  }
  std::vector<bool> nonzero(n, false);
  std::size_t pivots = 0;

  auto eliminate = [&](std::size_t pr, std::size_t pc) {
    const u64 inv = field.inv(a[pr * n + pc]);
    const u64* prow = &a[pr * n];
    for (std::size_t x : free_rows) {
      if (x == pr) continue;
      u64* row = &a[x * n];
      if (row[pc] == 0) continue;
      const u64 factor = field.mul(row[pc], inv);
      for (std::size_t y : free_cols) row[y] = field.sub(row[y], field.mul(factor, prow[y]));
    }
    std::erase(free_rows, pr);
    std::erase(free_cols, pc);
    ++pivots;
  };

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      bool found = false;
      std::size_t pr = 0, pc = 0;
      for (std::size_t x : free_rows) {
        if (x > k) break;
        const u64* row = &a[x * n];
        for (std::size_t y : free_cols) {
          if (y > k) break;
          if (row[y] != 0) {
            pr = x;
            pc = y;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) break;
      eliminate(pr, pc);
    }
    nonzero[k] = (pivots == k + 1);
  }
  return nonzero;
}

}  // namespace gpencil::modular
