#pragma once

// Dense function space on Z_m: Fourier transform, both convolutions,
// energies E_k, higher correlations C_{k+1}, and the divisibility-norm
// report.  Integer-valued functions stay in exact arithmetic; complex
// functions are used only where roots of unity force it.

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "resform/field.hpp"

namespace resform {

using cplx = std::complex<double>;

struct IntFunction {
  u64 modulus = 1;
  std::vector<i64> values;

  IntFunction() = default;
  explicit IntFunction(u64 m) : modulus(m), values(m, 0) {}
  IntFunction(u64 m, std::vector<i64> v) : modulus(m), values(std::move(v)) {
    if (values.size() != m)
      throw std::invalid_argument("IntFunction: length must equal modulus");
  }

  i64& operator[](u64 x) { return values[x % modulus]; }
  i64 operator[](u64 x) const { return values[x % modulus]; }

  i64 sum() const {
    i64 s = 0;
    for (i64 v : values) s += v;
    return s;
  }
  i64 l2sq() const {
    i64 s = 0;
    for (i64 v : values) s += v * v;
    return s;
  }

  friend bool operator==(const IntFunction&, const IntFunction&) = default;
};

struct CFunction {
  u64 modulus = 1;
  std::vector<cplx> values;

  CFunction() = default;
  explicit CFunction(u64 m) : modulus(m), values(m, cplx{}) {}
  CFunction(u64 m, std::vector<cplx> v) : modulus(m), values(std::move(v)) {
    if (values.size() != m)
      throw std::invalid_argument("CFunction: length must equal modulus");
  }

  cplx& operator[](u64 x) { return values[x % modulus]; }
  cplx operator[](u64 x) const { return values[x % modulus]; }

  cplx sum() const {
    cplx s{};
    for (const cplx& v : values) s += v;
    return s;
  }
  double linf() const {
    double m = 0;
    for (const cplx& v : values) m = std::max(m, std::abs(v));
    return m;
  }

  friend bool operator==(const CFunction&, const CFunction&) = default;
};

// Count histogram of an integer function's values.
using ValueHistogram = std::map<i64, i64>;

inline ValueHistogram histogram(const IntFunction& f) {
  ValueHistogram h;
  for (i64 v : f.values) ++h[v];
  return h;
}

inline IntFunction indicator(const FSet& A) {
  IntFunction f(A.modulus);
  for (u64 a : A.members) f[a] = 1;
  return f;
}

inline IntFunction delta(u64 m, u64 a) {
  IntFunction f(m);
  f[a] = 1;
  return f;
}

inline CFunction lift(const IntFunction& f) {
  CFunction g(f.modulus);
  for (u64 x = 0; x < f.modulus; ++x)
    g.values[x] = static_cast<double>(f.values[x]);
  return g;
}

// chi as the exact {-1,0,1} integer function.
inline IntFunction legendre_function(const PrimeField& F) {
  IntFunction f(F.p());
  for (u64 x = 0; x < F.p(); ++x) f.values[x] = F.legendre(x);
  return f;
}

inline CFunction conj(const CFunction& f) {
  CFunction g(f.modulus);
  for (u64 x = 0; x < f.modulus; ++x) g.values[x] = std::conj(f.values[x]);
  return g;
}

// f^c(x) = f(-x)
template <class Fn>
inline Fn reflect(const Fn& f) {
  Fn g(f.modulus);
  for (u64 x = 0; x < f.modulus; ++x)
    g.values[x] = f.values[(f.modulus - x) % f.modulus];
  return g;
}

// g_s(x) = g(x+s)
template <class Fn>
inline Fn shift(const Fn& f, u64 s) {
  Fn g(f.modulus);
  for (u64 x = 0; x < f.modulus; ++x) g.values[x] = f[(x + s) % f.modulus];
  return g;
}

// g^lam(x) = g(lam*x), lam nonzero
template <class Fn>
inline Fn dilate_fn(const Fn& f, u64 lam) {
  lam %= f.modulus;
  if (lam == 0) throw std::invalid_argument("dilate_fn: lambda must be nonzero");
  Fn g(f.modulus);
  for (u64 x = 0; x < f.modulus; ++x) g.values[x] = f[mulmod(lam, x, f.modulus)];
  return g;
}

namespace detail {
inline void require_same_modulus(u64 a, u64 b) {
  if (a != b) throw std::invalid_argument("modulus mismatch");
}
}  // namespace detail

// (f*g)(x) = sum_y f(y) g(x-y)
template <class Fn>
inline Fn convolve_star(const Fn& f, const Fn& g) {
  detail::require_same_modulus(f.modulus, g.modulus);
  const u64 m = f.modulus;
  Fn out(m);
  for (u64 x = 0; x < m; ++x) {
    auto acc = out.values[x];
    for (u64 y = 0; y < m; ++y) acc += f.values[y] * g.values[(x + m - y) % m];
    out.values[x] = acc;
  }
  return out;
}

// (f o g)(x) = sum_y f(y) g(y+x)
template <class Fn>
inline Fn convolve_circ(const Fn& f, const Fn& g) {
  detail::require_same_modulus(f.modulus, g.modulus);
  const u64 m = f.modulus;
  Fn out(m);
  for (u64 x = 0; x < m; ++x) {
    auto acc = out.values[x];
    for (u64 y = 0; y < m; ++y) acc += f.values[y] * g.values[(y + x) % m];
    out.values[x] = acc;
  }
  return out;
}

// Direct O(m^2) transform: fhat(xi) = sum_x f(x) e(-xi x / m).
inline CFunction fourier(const CFunction& f) {
  const u64 m = f.modulus;
  CFunction out(m);
  const double w = -2.0 * std::numbers::pi / static_cast<double>(m);
  for (u64 xi = 0; xi < m; ++xi) {
    cplx acc{};
    for (u64 x = 0; x < m; ++x)
      acc += f.values[x] * std::polar(1.0, w * static_cast<double>(mulmod(xi, x, m)));
    out.values[xi] = acc;
  }
  return out;
}

inline CFunction inverse_fourier(const CFunction& fhat) {
  const u64 m = fhat.modulus;
  CFunction out(m);
  const double w = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (u64 x = 0; x < m; ++x) {
    cplx acc{};
    for (u64 xi = 0; xi < m; ++xi)
      acc += fhat.values[xi] * std::polar(1.0, w * static_cast<double>(mulmod(xi, x, m)));
    out.values[x] = acc / static_cast<double>(m);
  }
  return out;
}

// E_k(A) = sum_x (A o A)(x)^k, exact.
inline i64 energy_k(const FSet& A, int k) {
  if (k < 2) throw std::invalid_argument("energy_k: k must be >= 2");
  IntFunction d = convolve_circ(indicator(A), indicator(A));
  i64 total = 0;
  for (i64 v : d.values) {
    i64 term = 1;
    for (int i = 0; i < k; ++i) term *= v;
    total += term;
  }
  return total;
}

inline i64 energy(const FSet& A) { return energy_k(A, 2); }

// C_{k+1}(f)(x_1..x_k) = sum_z f(z) f(z+x_1) ... f(z+x_k)
inline i64 correlation(const IntFunction& f, std::span<const u64> shifts) {
  if (shifts.empty()) throw std::invalid_argument("correlation: k must be >= 1");
  const u64 m = f.modulus;
  i64 acc = 0;
  for (u64 z = 0; z < m; ++z) {
    i64 term = f.values[z];
    for (u64 s : shifts) term *= f.values[(z + s) % m];
    acc += term;
  }
  return acc;
}

inline cplx correlation(const CFunction& f, std::span<const u64> shifts) {
  if (shifts.empty()) throw std::invalid_argument("correlation: k must be >= 1");
  const u64 m = f.modulus;
  cplx acc{};
  for (u64 z = 0; z < m; ++z) {
    cplx term = f.values[z];
    for (u64 s : shifts) term *= f.values[(z + s) % m];
    acc += term;
  }
  return acc;
}

// sum over all k-tuples of shifts of C_{k+1}(f) C_{k+1}(g); cost m^(k+1),
// restricted to small m for identity tests.
inline i64 correlation_pairing(const IntFunction& f, const IntFunction& g, int k) {
  const u64 m = f.modulus;
  detail::require_same_modulus(m, g.modulus);
  if (k < 1 || k > 3 || m > 64)
    throw std::invalid_argument("correlation_pairing: need 1 <= k <= 3 and m <= 64");
  std::vector<u64> shifts(static_cast<std::size_t>(k), 0);
  i64 total = 0;
  while (true) {
    total += correlation(f, shifts) * correlation(g, shifts);
    int i = 0;
    for (; i < k; ++i) {
      if (++shifts[static_cast<std::size_t>(i)] < m) break;
      shifts[static_cast<std::size_t>(i)] = 0;
    }
    if (i == k) break;
  }
  return total;
}

struct DivCReport {
  ValueHistogram hist;
  i64 sum = 0;          // sum_x psi(x)
  i64 l2sq = 0;         // ||psi||_2^2
  i64 small_band_sum = 0;  // sum over 0 < |psi(x)| < c
  bool inequality_ok = false;
  bool identity_ok = false;
};

// Checks ||psi||_2^2 >= c|sum psi| - (c-1)|sum_{0<|psi|<c} psi| and the
// exact identity ||psi||_2^2 = c sum psi + sum_k p_k (k^2 - ck).
inline DivCReport div_c_report(const IntFunction& psi, i64 c) {
  if (c == 0) throw std::invalid_argument("div_c_report: c must be nonzero");
  DivCReport r;
  r.hist = histogram(psi);
  r.sum = psi.sum();
  r.l2sq = psi.l2sq();
  for (const auto& [k, pk] : r.hist)
    if (k != 0 && std::abs(k) < c) r.small_band_sum += k * pk;
  r.inequality_ok =
      r.l2sq >= c * std::abs(r.sum) - (c - 1) * std::abs(r.small_band_sum);
  i64 rhs = c * r.sum;
  for (const auto& [k, pk] : r.hist) rhs += pk * (k * k - c * k);
  r.identity_ok = (r.l2sq == rhs);
  return r;
}

}  // namespace resform
