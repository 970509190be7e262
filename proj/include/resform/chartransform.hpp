#pragma once

// The chi-transform: orthonormal system f_s, the tilde transform with
// its identity suite, the E_A function, and the uncertainty principle.
//
// Although f is real for the Legendre character, everything is written
// with the explicit conjugations of the complex statements so the tests
// exercise the stated forms rather than real shortcuts.

#include <cmath>
#include <map>
#include <stdexcept>

#include "resform/charsums.hpp"
#include "resform/diffsets.hpp"
#include "resform/field.hpp"
#include "resform/funcspace.hpp"

namespace resform {

// f(x) = (chi(x) - 1/sqrt(p)) / sqrt(p); the shifts f_s(x) = f(x+s) form
// an orthonormal basis.
class ChiSystem {
 public:
  explicit ChiSystem(const PrimeField& F) : p_(F.p()), f_(F.p()) {
    const double sp = std::sqrt(static_cast<double>(p_));
    for (u64 x = 0; x < p_; ++x)
      f_.values[x] = (static_cast<double>(F.legendre(x)) - 1.0 / sp) / sp;
  }

  u64 p() const { return p_; }
  const CFunction& base() const { return f_; }

  CFunction basis(u64 s) const { return shift(f_, s); }

 private:
  u64 p_;
  CFunction f_;
};

// phi~(x) = <phi, f_x> = (phi o conj(f))(x)
inline CFunction tilde(const CFunction& phi, const ChiSystem& sys) {
  if (phi.modulus != sys.p())
    throw std::invalid_argument("tilde: modulus mismatch");
  return convolve_circ(phi, conj(sys.base()));
}

inline CFunction tilde(const IntFunction& phi, const ChiSystem& sys) {
  return tilde(lift(phi), sys);
}

struct TildeSuiteReport {
  bool shift_ok = false;        // (phi_s)~ = (phi~)_{-s}
  bool involution_ok = false;   // (conj(phi~))~ = conj(phi) and (phi~)~ = phi
  bool dilation_ok = false;     // (phi^lam)~ = chi(lam) (phi~)^lam + <phi>(chi(lam)-1)/p
  bool inversion_ok = false;    // phi(x) = sum_y phi~(y) f_x(y)
  bool parseval_ok = false;     // <phi, psi> = <phi~, psi~>
  bool circ_star_ok = false;    // (phi o psi)~ = phi * psi~
  bool conv_dilated_ok = false; // general lam,mu exchange
  bool conv_ok = false;         // (phi o conj(psi)) = (conj(psi~) o phi~)
  bool star_ok = false;         // (phi * conj(psi)) twist by chi(-1)
  double max_err = 0;

  bool all_ok() const {
    return shift_ok && involution_ok && dilation_ok && inversion_ok &&
           parseval_ok && circ_star_ok && conv_dilated_ok && conv_ok && star_ok;
  }
};

namespace detail {
inline double max_diff(const CFunction& a, const CFunction& b) {
  double m = 0;
  for (u64 x = 0; x < a.modulus; ++x)
    m = std::max(m, std::abs(a.values[x] - b.values[x]));
  return m;
}
}  // namespace detail

inline TildeSuiteReport tilde_identity_suite(const PrimeField& F,
                                             const CFunction& phi,
                                             const CFunction& psi, u64 lam,
                                             u64 mu, u64 s,
                                             const ChiSystem& sys) {
  const u64 p = F.p();
  if (phi.modulus != p || psi.modulus != p)
    throw std::invalid_argument("tilde_identity_suite: modulus mismatch");
  lam %= p;
  mu %= p;
  if (lam == 0 || mu == 0)
    throw std::invalid_argument("tilde_identity_suite: lam, mu must be nonzero");
  const double tol =
      1e-8 * static_cast<double>(p) * std::max(1.0, phi.linf()) *
      std::max(1.0, psi.linf());
  TildeSuiteReport r;
  auto check = [&](bool& flag, double err) {
    flag = err <= tol;
    r.max_err = std::max(r.max_err, err);
  };

  const CFunction tphi = tilde(phi, sys);
  const CFunction tpsi = tilde(psi, sys);
  const cplx chi_lam = static_cast<double>(F.legendre(lam));
  const cplx chi_mu = static_cast<double>(F.legendre(mu));
  const cplx chi_m1 = static_cast<double>(F.legendre(p - 1));
  const cplx mean_phi = phi.sum();
  const cplx mean_psi_bar = conj(psi).sum();

  // shift exchange
  check(r.shift_ok,
        detail::max_diff(tilde(shift(phi, s), sys), shift(tphi, p - s % p)));

  // double tilde, both stated forms (chi is real here)
  double e1 = detail::max_diff(tilde(conj(tphi), sys), conj(phi));
  double e2 = detail::max_diff(tilde(tphi, sys), phi);
  check(r.involution_ok, std::max(e1, e2));

  // dilation rule
  {
    CFunction rhs = dilate_fn(tphi, lam);
    for (u64 x = 0; x < p; ++x)
      rhs.values[x] = chi_lam * rhs.values[x] +
                      mean_phi * (chi_lam - 1.0) / static_cast<double>(p);
    check(r.dilation_ok, detail::max_diff(tilde(dilate_fn(phi, lam), sys), rhs));
  }

  // inversion
  {
    CFunction inv(p);
    for (u64 x = 0; x < p; ++x) {
      cplx acc{};
      const CFunction fx = sys.basis(x);
      for (u64 y = 0; y < p; ++y) acc += tphi.values[y] * fx.values[y];
      inv.values[x] = acc;
    }
    check(r.inversion_ok, detail::max_diff(inv, phi));
  }

  // Parseval
  {
    cplx lhs{}, rhs{};
    for (u64 x = 0; x < p; ++x) {
      lhs += phi.values[x] * std::conj(psi.values[x]);
      rhs += tphi.values[x] * std::conj(tpsi.values[x]);
    }
    check(r.parseval_ok, std::abs(lhs - rhs));
  }

  // (phi o psi)~ = phi * psi~
  check(r.circ_star_ok,
        detail::max_diff(tilde(convolve_circ(phi, psi), sys),
                         convolve_star(phi, tpsi)));

  // (phi^lam o conj(psi^mu)) = chi(lam)conj(chi(mu)) (conj(psi~^mu) o phi~^lam)
  //   + (1 - chi(lam)conj(chi(mu)))/p <phi><conj(psi)>
  {
    CFunction lhs = convolve_circ(dilate_fn(phi, lam), conj(dilate_fn(psi, mu)));
    CFunction rhs =
        convolve_circ(conj(dilate_fn(tpsi, mu)), dilate_fn(tphi, lam));
    const cplx factor = chi_lam * std::conj(chi_mu);
    const cplx tail =
        (1.0 - factor) / static_cast<double>(p) * mean_phi * mean_psi_bar;
    for (u64 x = 0; x < p; ++x) rhs.values[x] = factor * rhs.values[x] + tail;
    check(r.conv_dilated_ok, detail::max_diff(lhs, rhs));
  }

  // (phi o conj(psi))(x) = (phi~ o conj(psi~))(-x) = (conj(psi~) o phi~)(x)
  {
    CFunction lhs = convolve_circ(phi, conj(psi));
    CFunction r1 = reflect(convolve_circ(tphi, conj(tpsi)));
    CFunction r2 = convolve_circ(conj(tpsi), tphi);
    check(r.conv_ok,
          std::max(detail::max_diff(lhs, r1), detail::max_diff(lhs, r2)));
  }

  // (phi * conj(psi))(x) = chi(-1)(phi~ * conj(psi~))(-x)
  //   + (1-chi(-1))/p <phi><conj(psi)>
  {
    CFunction lhs = convolve_star(phi, conj(psi));
    CFunction rhs = reflect(convolve_star(tphi, conj(tpsi)));
    const cplx tail =
        (1.0 - chi_m1) / static_cast<double>(p) * mean_phi * mean_psi_bar;
    for (u64 x = 0; x < p; ++x) rhs.values[x] = chi_m1 * rhs.values[x] + tail;
    check(r.star_ok, detail::max_diff(lhs, rhs));
  }

  return r;
}

struct EFunction {
  FSet A;
  IntFunction values;            // (A o chi)(x), exact
  ValueHistogram level_histogram;  // residues of E_A(x) mod p
  bool mean_zero = false;
  bool norm_ok = false;       // ||E_A||^2 = p|A| - |A|^2
  bool cocycle_ok = false;    // E_A(xy) = chi(x) E_{x^-1 A}(y), sampled x
  bool level_bound_ok = false;  // |{x : E_A(x) = c mod p}| <= (p-1)/2
  std::optional<bool> singer_repr_ok;  // (A*E_A) = (|A|-1) chi when lambda=1 PDS
};

inline EFunction e_function(const PrimeField& F, const FSet& A) {
  if (A.modulus != F.p())
    throw std::invalid_argument("e_function: modulus mismatch");
  const u64 p = F.p();
  const i64 a = static_cast<i64>(A.size());
  EFunction r;
  r.A = A;
  IntFunction chi = legendre_function(F);
  r.values = convolve_circ(indicator(A), chi);
  r.mean_zero = (r.values.sum() == 0);
  r.norm_ok = (r.values.l2sq() == static_cast<i64>(p) * a - a * a);

  for (u64 x = 0; x < p; ++x) {
    i64 v = r.values.values[x] % static_cast<i64>(p);
    if (v < 0) v += static_cast<i64>(p);
    ++r.level_histogram[v];
  }
  // the polynomial bound needs a nonzero leading coefficient |A| mod p
  r.level_bound_ok = true;
  if (a % static_cast<i64>(p) != 0) {
    for (const auto& [c, cnt] : r.level_histogram)
      if (cnt > static_cast<i64>(F.t())) r.level_bound_ok = false;
  }

  r.cocycle_ok = true;
  for (u64 x : {2ull, 3ull, static_cast<unsigned long long>(p - 1)}) {
    if (x % p == 0) continue;
    FSet Ax = dilate(A, inverse_mod(x % p, p));
    IntFunction Ex = convolve_circ(indicator(Ax), chi);
    const i64 cx = F.legendre(x);
    for (u64 y = 0; y < p; ++y)
      if (r.values.values[mulmod(x % p, y, p)] != cx * Ex.values[y])
        r.cocycle_ok = false;
  }

  PDSReport pds = pds_lambda(A);
  if (pds.is_pds && pds.lambda == 1) {
    IntFunction conv = convolve_star(indicator(A), r.values);
    bool ok = true;
    for (u64 x = 0; x < p; ++x)
      if (conv.values[x] != (a - 1) * chi.values[x]) ok = false;
    r.singer_repr_ok = ok;
  }
  return r;
}

struct UncertaintyReport {
  i64 supp_g = 0;
  i64 supp_tilde = 0;
  double lower_bound = 0;  // p (1 + 1/sqrt(p))^{-2}
  bool pass = false;
};

inline UncertaintyReport uncertainty_product(const CFunction& g,
                                             const ChiSystem& sys,
                                             double rel_threshold = 1e-9) {
  if (g.modulus != sys.p())
    throw std::invalid_argument("uncertainty_product: modulus mismatch");
  const double gmax = g.linf();
  if (gmax == 0.0)
    throw std::invalid_argument("uncertainty_product: zero function");
  const CFunction tg = tilde(g, sys);
  const double thr = rel_threshold * gmax;
  UncertaintyReport r;
  for (u64 x = 0; x < g.modulus; ++x) {
    if (std::abs(g.values[x]) > thr) ++r.supp_g;
    if (std::abs(tg.values[x]) > thr) ++r.supp_tilde;
  }
  const double p = static_cast<double>(sys.p());
  const double u = 1.0 + 1.0 / std::sqrt(p);
  r.lower_bound = p / (u * u);
  r.pass = static_cast<double>(r.supp_g * r.supp_tilde) >= r.lower_bound - 1e-9;
  return r;
}

}  // namespace resform
