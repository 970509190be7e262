#pragma once

// Sumsets, restricted sumsets, representation tests against R, the
// per-candidate diagnostic quantities, epsilon/Z/E2 decompositions, and
// the Paley clique number.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "resform/diffsets.hpp"
#include "resform/field.hpp"
#include "resform/funcspace.hpp"
#include "resform/rational.hpp"

namespace resform {

inline FSet sumset(const FSet& A, const FSet& B) {
  if (A.modulus != B.modulus)
    throw std::invalid_argument("sumset: modulus mismatch");
  std::vector<u64> out;
  out.reserve(A.size() * B.size());
  for (u64 a : A.members)
    for (u64 b : B.members) out.push_back((a + b) % A.modulus);
  return FSet(A.modulus, std::move(out));
}

// A +^ A: sums of distinct pairs only.
inline FSet restricted_sumset(const FSet& A) {
  std::vector<u64> out;
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = i + 1; j < A.size(); ++j)
      out.push_back((A.members[i] + A.members[j]) % A.modulus);
  return FSet(A.modulus, std::move(out));
}

enum class SumMode { standard, restricted };

inline bool represents_R(const PrimeField& F, const FSet& A, SumMode mode) {
  if (A.modulus != F.p())
    throw std::invalid_argument("represents_R: modulus mismatch");
  FSet S = (mode == SumMode::standard) ? sumset(A, A) : restricted_sumset(A);
  return S == F.residues();
}

struct SumsetDiagnostics {
  i64 a = 0;       // |A|
  i64 n = 0;       // floor(sqrt(p))
  i64 delta = 0;   // p - n^2, in [1, 2n]
  i64 omega = 0;   // |A n {0}|
  i64 d = 0;       // sum_{x in A} (chi(2x) - 1)
  Rat eta;         // d / a
  i64 z = 0;       // a - delta
  Rat zeta1;       // |R \ (A+A)| / a
  Rat zeta2;       // (sum_{x in (A+A)\R} (A*A)(x)) / a
  i64 energy = 0;  // E(A)
  i64 e1 = 0;      // E(A) - (2a^2 - a)
  i64 e2_l1 = 0;   // sum_x E2(x)
  i64 e2_l2sq = 0; // ||E2||_2^2
};

struct ZDecomposition {
  IntFunction Z;
  i64 l1 = 0;          // sum |Z| (when Z >= 0 this is <Z>)
  i64 mean = 0;        // <Z> = a^2 - 2t - a, always
  bool nonneg = true;
  bool supp_in_R = true;
  // asserted only when A +^ A = R:
  std::optional<bool> pds_form_ok;  // Z >= 0, supp in R, ||Z||_1 = a - delta
};

struct E2Decomposition {
  IntFunction E2;
  i64 sum = 0;
  i64 l2sq = 0;
  std::optional<bool> closure_ok;  // sum = a - delta and ||E2||^2 = E1 + delta - a
};

// Z = A*A - 2R - (2.A)
inline ZDecomposition z_decomposition(const PrimeField& F, const FSet& A) {
  if (A.modulus != F.p())
    throw std::invalid_argument("z_decomposition: modulus mismatch");
  const u64 p = F.p();
  IntFunction Z = convolve_star(indicator(A), indicator(A));
  FSet R = F.residues();
  for (u64 x : R.members) Z.values[x] -= 2;
  if (!A.empty())
    for (u64 x : dilate(A, 2).members) Z.values[x] -= 1;
  ZDecomposition r;
  r.mean = Z.sum();
  for (u64 x = 0; x < p; ++x) {
    i64 v = Z.values[x];
    r.l1 += std::abs(v);
    if (v < 0) r.nonneg = false;
    if (v != 0 && !R.contains(x)) r.supp_in_R = false;
  }
  r.Z = std::move(Z);
  if (restricted_sumset(A) == R) {
    const i64 a = static_cast<i64>(A.size());
    const i64 n = static_cast<i64>(isqrt(p));
    const i64 delta = static_cast<i64>(p) - n * n;
    r.pds_form_ok = r.nonneg && r.supp_in_R && r.l1 == a - delta;
  }
  return r;
}

// E2 = (A o A) - (|A|-1) delta_0 - 1
inline E2Decomposition e2_decomposition(const PrimeField& F, const FSet& A) {
  if (A.modulus != F.p())
    throw std::invalid_argument("e2_decomposition: modulus mismatch");
  IntFunction E2 = convolve_circ(indicator(A), indicator(A));
  const i64 a = static_cast<i64>(A.size());
  E2.values[0] -= a - 1;
  for (u64 x = 0; x < F.p(); ++x) E2.values[x] -= 1;
  E2Decomposition r;
  r.sum = E2.sum();
  r.l2sq = E2.l2sq();
  if (restricted_sumset(A) == F.residues()) {
    const i64 n = static_cast<i64>(isqrt(F.p()));
    const i64 delta = static_cast<i64>(F.p()) - n * n;
    const i64 e1 = energy(A) - (2 * a * a - a);
    r.closure_ok = (r.sum == a - delta) && (r.l2sq == e1 + delta - a);
  }
  r.E2 = std::move(E2);
  return r;
}

inline SumsetDiagnostics diagnostics(const PrimeField& F, const FSet& A) {
  if (A.modulus != F.p())
    throw std::invalid_argument("diagnostics: modulus mismatch");
  if (A.empty()) throw std::invalid_argument("diagnostics: empty set");
  SumsetDiagnostics d;
  const u64 p = F.p();
  d.a = static_cast<i64>(A.size());
  d.n = static_cast<i64>(isqrt(p));
  d.delta = static_cast<i64>(p) - d.n * d.n;
  d.omega = A.contains(0) ? 1 : 0;
  for (u64 x : A.members) d.d += F.legendre(mulmod(2, x, p)) - 1;
  d.eta = Rat(d.d, d.a);
  d.z = d.a - d.delta;
  FSet R = F.residues();
  FSet S = sumset(A, A);
  i64 missing = 0;
  for (u64 x : R.members)
    if (!S.contains(x)) ++missing;
  d.zeta1 = Rat(missing, d.a);
  IntFunction AA = convolve_star(indicator(A), indicator(A));
  i64 excess = 0;
  for (u64 x : S.members)
    if (!R.contains(x)) excess += AA.values[x];
  d.zeta2 = Rat(excess, d.a);
  d.energy = energy(A);
  d.e1 = d.energy - (2 * d.a * d.a - d.a);
  E2Decomposition e2 = e2_decomposition(F, A);
  d.e2_l1 = e2.sum;
  d.e2_l2sq = e2.l2sq;
  return d;
}

enum class EpsVariant { circ, star };

struct EpsilonProfile {
  IntFunction eps;
  bool condition_holds = false;  // A+B in R (circ) / A-A in R u {0} (star)
  // valid only when condition_holds:
  bool vanishes_on_base = false; // eps = 0 on B (circ) / on A (star)
  bool mean_ok = false;          // <eps> = -ab (circ) / -a(a-1) (star)
  bool l2_ok = false;            // ||eps||^2 = pa-a^2-a^2 b / pa-a^2-a(a-1)^2
};

// circ: (A o chi)(x) = a B(x) + eps(x);  star: (A * chi)(x) = (a-1) A(x) + eps(x)
inline EpsilonProfile epsilon_profile(const PrimeField& F, const FSet& A,
                                      const FSet& B, EpsVariant variant) {
  if (A.modulus != F.p() || B.modulus != F.p())
    throw std::invalid_argument("epsilon_profile: modulus mismatch");
  const u64 p = F.p();
  const i64 a = static_cast<i64>(A.size());
  const i64 b = static_cast<i64>(B.size());
  IntFunction chi = legendre_function(F);
  EpsilonProfile r;
  if (variant == EpsVariant::circ) {
    r.eps = convolve_circ(indicator(A), chi);
    for (u64 x : B.members) r.eps.values[x] -= a;
    FSet R = F.residues();
    r.condition_holds = true;
    for (u64 x : sumset(A, B).members)
      if (!R.contains(x)) { r.condition_holds = false; break; }
    if (r.condition_holds) {
      r.vanishes_on_base = true;
      for (u64 x : B.members)
        if (r.eps.values[x] != 0) r.vanishes_on_base = false;
      r.mean_ok = (r.eps.sum() == -a * b);
      r.l2_ok = (r.eps.l2sq() ==
                 static_cast<i64>(p) * a - a * a - a * a * b);
    }
  } else {
    r.eps = convolve_star(indicator(A), chi);
    for (u64 x : A.members) r.eps.values[x] -= a - 1;
    r.condition_holds = true;
    for (u64 x : A.members) {
      for (u64 y : A.members)
        if (x != y && F.legendre((x + p - y) % p) != 1) {
          r.condition_holds = false;
          break;
        }
      if (!r.condition_holds) break;
    }
    if (r.condition_holds) {
      r.vanishes_on_base = true;
      for (u64 x : A.members)
        if (r.eps.values[x] != 0) r.vanishes_on_base = false;
      r.mean_ok = (r.eps.sum() == -a * (a - 1));
      r.l2_ok = (r.eps.l2sq() ==
                 static_cast<i64>(p) * a - a * a - a * (a - 1) * (a - 1));
    }
  }
  return r;
}

struct CliqueResult {
  i64 max_size = 0;
  FSet witness;
  bool lev_bound_ok = false;  // p >= a^2+a-1 (a even) / a^2+2a-2 (a odd)
};

namespace detail {

// Branch and bound over the Paley graph with a greedy-coloring upper
// bound; vertices in ascending order so the first maximum clique found
// is the lexicographically least witness.
class PaleyCliqueSolver {
 public:
  explicit PaleyCliqueSolver(const PrimeField& F) : p_(F.p()) {
    adj_.assign(p_, std::vector<bool>(p_, false));
    for (u64 x = 0; x < p_; ++x)
      for (u64 y = 0; y < p_; ++y)
        if (x != y && F.legendre((x + p_ - y) % p_) == 1) adj_[x][y] = true;
  }

  std::pair<i64, std::vector<u64>> solve() {
    std::vector<u64> all(p_);
    for (u64 v = 0; v < p_; ++v) all[v] = v;
    std::vector<u64> cur;
    expand(all, cur);
    return {static_cast<i64>(best_.size()), best_};
  }

 private:
  i64 color_bound(const std::vector<u64>& cand) const {
    std::vector<i64> color(cand.size(), -1);
    i64 ncolors = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<bool> used(static_cast<std::size_t>(ncolors) + 1, false);
      for (std::size_t j = 0; j < i; ++j)
        if (adj_[cand[i]][cand[j]] && color[j] >= 0)
          used[static_cast<std::size_t>(color[j])] = true;
      i64 c = 0;
      while (c < ncolors && used[static_cast<std::size_t>(c)]) ++c;
      color[i] = c;
      if (c == ncolors) ++ncolors;
    }
    return ncolors;
  }

  void expand(const std::vector<u64>& cand, std::vector<u64>& cur) {
    if (cand.empty()) {
      if (cur.size() > best_.size()) best_ = cur;
      return;
    }
    if (static_cast<i64>(cur.size()) + color_bound(cand) <=
        static_cast<i64>(best_.size()))
      return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (static_cast<i64>(cur.size() + cand.size() - i) <=
          static_cast<i64>(best_.size()))
        return;
      u64 v = cand[i];
      cur.push_back(v);
      std::vector<u64> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (adj_[v][cand[j]]) next.push_back(cand[j]);
      expand(next, cur);
      cur.pop_back();
    }
  }

  u64 p_;
  std::vector<std::vector<bool>> adj_;
  std::vector<u64> best_;
};

}  // namespace detail

// Exact maximum |A| with A-A in R u {0}; for p = 3 mod 4 the condition
// forces singletons.
inline CliqueResult paley_clique(const PrimeField& F) {
  CliqueResult r;
  if (F.p() % 4 == 3) {
    r.max_size = 1;
    r.witness = FSet(F.p(), {0});
    r.lev_bound_ok = true;
    return r;
  }
  detail::PaleyCliqueSolver solver(F);
  auto [size, witness] = solver.solve();
  r.max_size = size;
  r.witness = FSet(F.p(), std::move(witness));
  const i64 a = size;
  const i64 p = static_cast<i64>(F.p());
  r.lev_bound_ok =
      (a % 2 == 0) ? (p >= a * a + a - 1) : (p >= a * a + 2 * a - 2);
  return r;
}

}  // namespace resform
