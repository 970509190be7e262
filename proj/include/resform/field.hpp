#pragma once

// Prime-field arithmetic: Legendre symbol, residue/non-residue sets,
// dilation of subsets of Z_m.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace resform {

using i64 = std::int64_t;
using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

// Distinct prime factors by trial division.
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q == 0) {
      fs.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

inline u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline u64 inverse_mod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

// A subset of Z_m kept in canonical (sorted, duplicate-free) form.
struct FSet {
  u64 modulus = 1;
  std::vector<u64> members;

  FSet() = default;
  FSet(u64 m, std::vector<u64> elems) : modulus(m), members(std::move(elems)) {
    if (m == 0) throw std::invalid_argument("FSet: modulus must be positive");
    for (u64& x : members) x %= m;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }

  bool contains(u64 x) const {
    return std::binary_search(members.begin(), members.end(), x % modulus);
  }

  friend bool operator==(const FSet&, const FSet&) = default;
};

inline FSet dilate(const FSet& A, u64 lambda) {
  lambda %= A.modulus;
  if (lambda == 0) throw std::invalid_argument("dilate: lambda must be nonzero");
  std::vector<u64> out;
  out.reserve(A.size());
  for (u64 a : A.members) out.push_back(mulmod(lambda, a, A.modulus));
  return FSet(A.modulus, std::move(out));
}

inline FSet translate(const FSet& A, u64 s) {
  std::vector<u64> out;
  out.reserve(A.size());
  for (u64 a : A.members) out.push_back((a + s) % A.modulus);
  return FSet(A.modulus, std::move(out));
}

// An odd prime p with t=(p-1)/2, the least primitive root, and Legendre
// evaluation.  Fields below the table threshold carry a precomputed
// chi-table so legendre() is O(1) in search inner loops.
class PrimeField {
 public:
  static constexpr u64 kDefaultTableThreshold = 100000;

  explicit PrimeField(u64 p, u64 table_threshold = kDefaultTableThreshold)
      : p_(p), t_((p - 1) / 2) {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("PrimeField: modulus must be an odd prime >= 3");
    g_ = find_primitive_root();
    if (p_ < table_threshold) {
      table_.assign(p_, -1);
      table_[0] = 0;
      for (u64 x = 1; x < p_; ++x) table_[mulmod(x, x, p_)] = 1;
    }
  }

  u64 p() const { return p_; }
  u64 t() const { return t_; }
  u64 g() const { return g_; }

  int legendre(u64 x) const {
    x %= p_;
    if (!table_.empty()) return table_[x];
    if (x == 0) return 0;
    return powmod(x, t_, p_) == 1 ? 1 : -1;
  }

  FSet residues() const {
    std::vector<u64> r;
    r.reserve(t_);
    for (u64 x = 1; x < p_; ++x)
      if (legendre(x) == 1) r.push_back(x);
    return FSet(p_, std::move(r));
  }

  FSet nonresidues() const {
    std::vector<u64> n;
    n.reserve(t_);
    for (u64 x = 1; x < p_; ++x)
      if (legendre(x) == -1) n.push_back(x);
    return FSet(p_, std::move(n));
  }

 private:
  u64 find_primitive_root() const {
    if (p_ == 3) return 2;
    auto factors = prime_factors(p_ - 1);
    for (u64 g = 2; g < p_; ++g) {
      bool ok = true;
      for (u64 q : factors) {
        if (powmod(g, (p_ - 1) / q, p_) == 1) { ok = false; break; }
      }
      if (ok) return g;
    }
    throw std::logic_error("PrimeField: no primitive root found");
  }

  u64 p_;
  u64 t_;
  u64 g_ = 0;
  std::vector<signed char> table_;
};

}  // namespace resform
