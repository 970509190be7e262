#pragma once

// Perfect-difference-set detection, the function class D, multiplier
// groups, the multiplier-theorem verifier, and the Singer construction
// from GF(q^3).

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "resform/field.hpp"
#include "resform/funcspace.hpp"

namespace resform {

struct PDSReport {
  bool is_pds = false;
  i64 lambda = 0;  // valid when is_pds
};

// (A o A)(x) = (|A|-lambda) delta_0(x) + lambda iff A is a lambda-PDS.
// lambda = 0 (degenerate singletons/empty) is reported rather than
// rejected so the search engine can call this on any candidate.
inline PDSReport pds_lambda(const FSet& A) {
  IntFunction d = convolve_circ(indicator(A), indicator(A));
  PDSReport r;
  if (A.modulus == 1) {
    r.is_pds = true;
    r.lambda = d.values[0];
    return r;
  }
  r.lambda = d.values[1];
  for (u64 x = 1; x < A.modulus; ++x)
    if (d.values[x] != r.lambda) return r;
  r.is_pds = true;
  return r;
}

// phi in D iff (phi o conj(phi)) is constant off zero.
inline bool in_class_D(const IntFunction& phi) {
  IntFunction c = convolve_circ(phi, phi);
  for (u64 x = 2; x < phi.modulus; ++x)
    if (c.values[x] != c.values[1]) return false;
  return true;
}

inline bool in_class_D(const CFunction& phi, double tol = 1e-8) {
  CFunction c = convolve_circ(phi, conj(phi));
  for (u64 x = 2; x < phi.modulus; ++x)
    if (std::abs(c.values[x] - c.values[1]) > tol) return false;
  return true;
}

// {m coprime to modulus : m.A = A}; always a subgroup of the units.
inline FSet multipliers(const FSet& A) {
  std::vector<u64> out;
  for (u64 m = 1; m < A.modulus; ++m) {
    if (std::gcd(m, A.modulus) != 1) continue;
    if (dilate(A, m) == A) out.push_back(m);
  }
  if (A.modulus == 1) out.push_back(0);
  return FSet(A.modulus, std::move(out));
}

// Some s with mult.(A+s) = A+s, or nullopt.
inline std::optional<u64> fixed_translate(const FSet& A, u64 mult) {
  mult %= A.modulus;
  if (std::gcd(mult, A.modulus) != 1)
    throw std::invalid_argument("fixed_translate: multiplier must be a unit");
  for (u64 s = 0; s < A.modulus; ++s) {
    FSet T = translate(A, s);
    if (dilate(T, mult) == T) return s;
  }
  return std::nullopt;
}

namespace gf3 {

// GF(q^3) as F_q[x] / (x^3 + c2 x^2 + c1 x + c0); elements are coefficient
// triples (low degree first).
struct Tower {
  u64 q;
  std::array<u64, 3> cubic;  // c0, c1, c2 of the chosen monic irreducible

  using Elem = std::array<u64, 3>;

  Elem mul(const Elem& a, const Elem& b) const {
    std::array<u64, 5> t{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        t[static_cast<std::size_t>(i + j)] =
            (t[static_cast<std::size_t>(i + j)] + mulmod(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)], q)) % q;
    // reduce x^4 then x^3
    for (int d = 4; d >= 3; --d) {
      u64 c = t[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      t[static_cast<std::size_t>(d)] = 0;
      for (int i = 0; i < 3; ++i) {
        u64 sub = mulmod(c, cubic[static_cast<std::size_t>(i)], q);
        u64& dst = t[static_cast<std::size_t>(d - 3 + i)];
        dst = (dst + q - sub) % q;
      }
    }
    return {t[0], t[1], t[2]};
  }

  Elem pow(Elem base, u64 e) const {
    Elem r{1, 0, 0};
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
};

// Least lexicographic monic irreducible cubic over F_q (no root in F_q).
inline Tower make_tower(u64 q) {
  for (u64 c2 = 0; c2 < q; ++c2)
    for (u64 c1 = 0; c1 < q; ++c1)
      for (u64 c0 = 0; c0 < q; ++c0) {
        bool has_root = false;
        for (u64 x = 0; x < q && !has_root; ++x) {
          u64 v = (mulmod(mulmod(x, x, q), x, q) + mulmod(c2, mulmod(x, x, q), q) +
                   mulmod(c1, x, q) + c0) % q;
          if (v == 0) has_root = true;
        }
        if (!has_root) return Tower{q, {c0, c1, c2}};
      }
  throw std::logic_error("make_tower: no irreducible cubic found");
}

}  // namespace gf3

struct SingerSpec {
  u64 q = 0;
  u64 P = 0;  // q^2 + q + 1
  std::array<u64, 3> irreducible_cubic{};
  gf3::Tower::Elem primitive_elem{};
};

// Deterministic choice of tower and primitive element for GF(q^3).
inline SingerSpec singer_spec(u64 q) {
  if (!is_prime(q)) throw std::invalid_argument("singer: q must be prime");
  SingerSpec s;
  s.q = q;
  s.P = q * q + q + 1;
  gf3::Tower tw = gf3::make_tower(q);
  s.irreducible_cubic = tw.cubic;
  const u64 order = q * q * q - 1;
  auto factors = prime_factors(order);
  // candidates scanned in lexicographic coefficient order, constants last
  for (u64 code = q; code < q * q * q; ++code) {
    gf3::Tower::Elem a{code % q, (code / q) % q, code / (q * q)};
    bool primitive = true;
    for (u64 r : factors) {
      auto v = tw.pow(a, order / r);
      if (v == gf3::Tower::Elem{1, 0, 0}) { primitive = false; break; }
    }
    if (primitive) { s.primitive_elem = a; return s; }
  }
  throw std::logic_error("singer_spec: no primitive element found");
}

// Singer lambda=1 perfect difference set of size q+1 in Z_{q^2+q+1}:
// { i mod P : alpha^i lies in the F_q-span of {1, x} }.
inline FSet singer(u64 q) {
  SingerSpec s = singer_spec(q);
  gf3::Tower tw{q, s.irreducible_cubic};
  std::vector<u64> members;
  gf3::Tower::Elem v{1, 0, 0};
  const u64 order = q * q * q - 1;
  for (u64 i = 0; i < order; ++i) {
    if (v[2] == 0) members.push_back(i % s.P);
    v = tw.mul(v, s.primitive_elem);
  }
  return FSet(s.P, std::move(members));
}

}  // namespace resform
