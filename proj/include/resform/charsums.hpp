#pragma once

// Gauss sums, Jacobi sums, general multiplicative characters, Weil-bound
// checks, sigma(A,B) character sums, and the rho-of-sum convolution
// identity.

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "resform/field.hpp"
#include "resform/funcspace.hpp"

namespace resform {

// Multiplicative character chi_j with chi_j(g^k) = e(jk/(p-1)), realized
// through a discrete-log table over the least primitive root.  The table
// is shared between characters of the same field via copy.
class MultChar {
 public:
  MultChar(const PrimeField& F, u64 index)
      : p_(F.p()), order_(F.p() - 1), j_(index % order_) {
    auto tab = std::make_shared<std::vector<u64>>(p_, 0);
    u64 v = 1;
    for (u64 k = 0; k < order_; ++k) {
      (*tab)[v] = k;
      v = mulmod(v, F.g(), p_);
    }
    dlog_ = std::move(tab);
  }

  u64 p() const { return p_; }
  u64 index() const { return j_; }
  bool is_principal() const { return j_ == 0; }
  bool is_legendre() const { return j_ == order_ / 2; }

  cplx operator()(u64 x) const {
    x %= p_;
    if (x == 0) return cplx{};  // chi_0(0) = 0 as well
    if (j_ == 0) return cplx{1.0, 0.0};
    u64 e = mulmod(j_, (*dlog_)[x], order_);
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                               static_cast<double>(order_));
  }

  // Exact value for the Legendre character (and principal), else throws.
  int exact(u64 x) const {
    x %= p_;
    if (x == 0) return 0;
    if (j_ == 0) return 1;
    if (!is_legendre())
      throw std::logic_error("MultChar::exact: only principal/Legendre are integer-valued");
    return ((*dlog_)[x] & 1) ? -1 : 1;
  }

  MultChar conjugate() const {
    MultChar c(*this);
    c.j_ = (order_ - j_) % order_;
    return c;
  }

  CFunction as_function() const {
    CFunction f(p_);
    for (u64 x = 0; x < p_; ++x) f.values[x] = (*this)(x);
    return f;
  }

 private:
  u64 p_;
  u64 order_;
  u64 j_;
  std::shared_ptr<const std::vector<u64>> dlog_;
};

enum class GaussClass { real_positive, positive_imaginary };

struct GaussSumValue {
  cplx value;
  GaussClass tag;
};

// G(p) = sum_x chi(x) e(x/p); equals sqrt(p) for p=1 mod 4, i sqrt(p) for
// p=3 mod 4.
inline GaussSumValue gauss_sum(const PrimeField& F) {
  const u64 p = F.p();
  cplx acc{};
  const double w = 2.0 * std::numbers::pi / static_cast<double>(p);
  for (u64 x = 1; x < p; ++x)
    acc += static_cast<double>(F.legendre(x)) *
           std::polar(1.0, w * static_cast<double>(x));
  GaussClass tag = (p % 4 == 1) ? GaussClass::real_positive
                                : GaussClass::positive_imaginary;
  return {acc, tag};
}

// J(phi, psi) = sum_x phi(x) psi(1-x)
inline cplx jacobi_sum(const MultChar& phi, const MultChar& psi) {
  if (phi.p() != psi.p())
    throw std::invalid_argument("jacobi_sum: characters on different fields");
  const u64 p = phi.p();
  cplx acc{};
  for (u64 x = 0; x < p; ++x) acc += phi(x) * psi((1 + p - x % p) % p);
  return acc;
}

struct WeilReport {
  i64 value = 0;    // exact: all factors are Legendre values
  double bound = 0; // k * sqrt(p) for k+1 character factors
  bool pass = false;
};

// sum_x chi(x) chi(x+s_1) ... chi(x+s_k) with |.| <= k sqrt(p); the
// number of character factors is k+1.
inline WeilReport weil_check(const PrimeField& F, std::span<const u64> shifts) {
  const u64 p = F.p();
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (shifts[i] % p == 0)
      throw std::invalid_argument("weil_check: shifts must be nonzero");
    for (std::size_t j = i + 1; j < shifts.size(); ++j)
      if (shifts[i] % p == shifts[j] % p)
        throw std::invalid_argument("weil_check: shifts must be distinct");
  }
  WeilReport r;
  for (u64 x = 0; x < p; ++x) {
    i64 term = F.legendre(x);
    for (u64 s : shifts) term *= F.legendre((x + s) % p);
    r.value += term;
  }
  r.bound = static_cast<double>(shifts.size()) * std::sqrt(static_cast<double>(p));
  r.pass = std::abs(static_cast<double>(r.value)) <= r.bound + 1e-9;
  return r;
}

struct SigmaReport {
  cplx value;
  double de_bound = 0;   // sqrt(|A||B|p)
  double rho_bound = 0;  // ||A||_2 (p ||B||_2^2 - |<B>|^2)^{1/2}
  bool de_ok = false;
  bool rho_ok = false;
};

// sigma(A,B) = sum_{x,y} chi(x+y) B(x) A(y)
inline SigmaReport sigma_sum(const FSet& A, const FSet& B, const MultChar& chi) {
  if (A.modulus != chi.p() || B.modulus != chi.p())
    throw std::invalid_argument("sigma_sum: modulus mismatch");
  const u64 p = chi.p();
  SigmaReport r;
  for (u64 y : A.members)
    for (u64 x : B.members) r.value += chi((x + y) % p);
  const double a = static_cast<double>(A.size());
  const double b = static_cast<double>(B.size());
  const double pd = static_cast<double>(p);
  r.de_bound = std::sqrt(a * b * pd);
  r.rho_bound = std::sqrt(a) * std::sqrt(std::max(0.0, pd * b - b * b));
  r.de_ok = std::abs(r.value) <= r.de_bound + 1e-9;
  r.rho_ok = std::abs(r.value) <= r.rho_bound + 1e-9;
  return r;
}

// ((g o chi) o (h o chi))(x) = p (h o g)(x) - <g><h>, exact in integers.
inline bool rho_conv_identity(const PrimeField& F, const IntFunction& g,
                              const IntFunction& h) {
  if (g.modulus != F.p() || h.modulus != F.p())
    throw std::invalid_argument("rho_conv_identity: modulus mismatch");
  IntFunction chi = legendre_function(F);
  IntFunction lhs = convolve_circ(convolve_circ(g, chi), convolve_circ(h, chi));
  IntFunction rhs = convolve_circ(h, g);
  const i64 c = g.sum() * h.sum();
  const i64 p = static_cast<i64>(F.p());
  for (u64 x = 0; x < F.p(); ++x)
    if (lhs.values[x] != p * rhs.values[x] - c) return false;
  return true;
}

// Closed form for (R o R)(x), x != 0:
//   (p-3)/4 - (chi(x)/4)(1 + chi(-1)),  an exact integer.
inline i64 r_circ_r(const PrimeField& F, u64 x) {
  x %= F.p();
  if (x == 0) throw std::invalid_argument("r_circ_r: closed form requires x != 0");
  const i64 p = static_cast<i64>(F.p());
  const i64 cx = F.legendre(x);
  const i64 cm1 = F.legendre(F.p() - 1);
  return (p - 3 - cx * (1 + cm1)) / 4;
}

}  // namespace resform
