#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "resform/charsums.hpp"

using namespace resform;

TEST_CASE("gauss sum classification") {
  {
    GaussSumValue g = gauss_sum(PrimeField(5));
    CHECK(g.tag == GaussClass::real_positive);
    CHECK(std::abs(g.value - cplx{std::sqrt(5.0), 0.0}) < 1e-9);
  }
  {
    GaussSumValue g = gauss_sum(PrimeField(7));
    CHECK(g.tag == GaussClass::positive_imaginary);
    CHECK(std::abs(g.value - cplx{0.0, std::sqrt(7.0)}) < 1e-9);
  }
  for (u64 p : {3ull, 13ull, 101ull, 499ull}) {
    GaussSumValue g = gauss_sum(PrimeField(p));
    CHECK(std::abs(std::norm(g.value) - static_cast<double>(p)) < 1e-6 * p);
  }
}

TEST_CASE("multiplicative characters") {
  PrimeField F(13);
  MultChar principal(F, 0), legendre(F, 6);
  CHECK(principal.is_principal());
  CHECK(legendre.is_legendre());
  CHECK(std::abs(principal(0)) == 0.0);
  CHECK(std::abs(principal(5) - cplx{1.0, 0.0}) < 1e-12);
  for (u64 x = 0; x < 13; ++x)
    CHECK(legendre.exact(x) == F.legendre(x));
  // chi_j(g^k) = e(jk/(p-1))
  MultChar chi1(F, 1);
  for (u64 k = 0; k < 12; ++k) {
    cplx expect = std::polar(1.0, 2.0 * std::numbers::pi * k / 12.0);
    CHECK(std::abs(chi1(powmod(F.g(), k, 13)) - expect) < 1e-12);
  }
  // multiplicativity
  std::mt19937_64 rng(1);
  MultChar chi5(F, 5);
  for (int rep = 0; rep < 50; ++rep) {
    u64 x = rng() % 13, y = rng() % 13;
    CHECK(std::abs(chi5(mulmod(x, y, 13)) - chi5(x) * chi5(y)) < 1e-12);
  }
}

TEST_CASE("jacobi sum J(psi, conj psi) = -psi(-1)") {
  {
    PrimeField F(13);
    MultChar leg(F, 6);
    CHECK(std::abs(jacobi_sum(leg, leg) - cplx{-1.0, 0.0}) < 1e-9);
  }
  {
    PrimeField F(7);
    MultChar leg(F, 3);
    CHECK(std::abs(jacobi_sum(leg, leg) - cplx{1.0, 0.0}) < 1e-9);
  }
  {
    PrimeField F(5);
    MultChar phi(F, 1), psi(F, 3);
    CHECK(std::abs(jacobi_sum(phi, psi) - (-phi(4))) < 1e-9);
  }
  // general non-principal psi over several fields
  for (u64 p : {11ull, 17ull}) {
    PrimeField F(p);
    for (u64 j = 1; j < p - 1; ++j) {
      MultChar psi(F, j);
      CHECK(std::abs(jacobi_sum(psi, psi.conjugate()) - (-psi(p - 1))) < 1e-9);
    }
  }
}

TEST_CASE("non-principal circ-convolution identity") {
  // (psi o conj psi)(x) = p delta_0(x) - 1
  for (u64 p : {7ull, 13ull, 101ull}) {
    PrimeField F(p);
    for (u64 j : {u64{1}, u64{2}, (p - 1) / 2}) {
      CFunction psi = MultChar(F, j).as_function();
      CFunction c = convolve_circ(psi, conj(psi));
      for (u64 x = 0; x < p; ++x) {
        cplx expect{x == 0 ? static_cast<double>(p) - 1.0 : -1.0, 0.0};
        CHECK(std::abs(c.values[x] - expect) < 1e-6);
      }
    }
  }
}

TEST_CASE("weil check") {
  PrimeField F(13);
  // single shift: value is exactly -1
  for (u64 s = 1; s < 13; ++s) {
    u64 shifts[] = {s};
    WeilReport r = weil_check(F, shifts);
    CHECK(r.value == -1);
    CHECK(r.pass);
  }
  {
    u64 shifts[] = {1, 2, 3};
    WeilReport r = weil_check(F, shifts);
    CHECK(r.pass);
    CHECK(r.bound == Catch::Approx(3.0 * std::sqrt(13.0)));
  }
  u64 dup[] = {1, 1};
  CHECK_THROWS_AS(weil_check(F, dup), std::invalid_argument);
  u64 zero[] = {0};
  CHECK_THROWS_AS(weil_check(F, zero), std::invalid_argument);
}

TEST_CASE("sigma sum") {
  PrimeField F(7);
  MultChar leg(F, 3);
  {
    std::vector<u64> all{0, 1, 2, 3, 4, 5, 6};
    SigmaReport r = sigma_sum(FSet(7, all), FSet(7, all), leg);
    CHECK(std::abs(r.value) < 1e-9);
    CHECK(r.de_ok);
  }
  {
    SigmaReport r = sigma_sum(FSet(7, {0}), FSet(7, {0}), leg);
    CHECK(std::abs(r.value) < 1e-12);
  }
  {
    FSet R = F.residues();
    SigmaReport r = sigma_sum(R, R, leg);
    CHECK(r.de_ok);
    CHECK(r.rho_ok);
    CHECK(std::abs(r.value) <= std::sqrt(3.0 * 3.0 * 7.0));
  }
  // random sets: both bounds hold
  std::mt19937_64 rng(9);
  PrimeField F31(31);
  MultChar chi31(F31, 15);
  for (int rep = 0; rep < 30; ++rep) {
    std::vector<u64> a, b;
    for (u64 x = 0; x < 31; ++x) {
      if (rng() & 1) a.push_back(x);
      if (rng() & 1) b.push_back(x);
    }
    SigmaReport r = sigma_sum(FSet(31, a), FSet(31, b), chi31);
    CHECK(r.de_ok);
    CHECK(r.rho_ok);
  }
}

TEST_CASE("rho convolution identity") {
  PrimeField F(11);
  // g = h = delta_0: both sides are p delta_0 - 1
  CHECK(rho_conv_identity(F, delta(11, 0), delta(11, 0)));
  // constants
  IntFunction ones(11);
  for (auto& v : ones.values) v = 1;
  CHECK(rho_conv_identity(F, ones, ones));
  // random 0/1 functions
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    IntFunction g(11), h(11);
    for (auto& v : g.values) v = static_cast<i64>(rng() & 1);
    for (auto& v : h.values) v = static_cast<i64>(rng() & 1);
    CHECK(rho_conv_identity(F, g, h));
  }
}

TEST_CASE("r_circ_r closed form") {
  {
    PrimeField F(11);
    for (u64 x = 1; x < 11; ++x) CHECK(r_circ_r(F, x) == 2);
  }
  {
    PrimeField F(13);
    CHECK(r_circ_r(F, 1) == 2);
    CHECK(r_circ_r(F, 2) == 3);
  }
  // closed form equals enumeration
  for (u64 p : {5ull, 13ull, 19ull, 29ull}) {
    PrimeField F(p);
    IntFunction rr = convolve_circ(indicator(F.residues()), indicator(F.residues()));
    for (u64 x = 1; x < p; ++x) CHECK(r_circ_r(F, x) == rr.values[x]);
  }
  CHECK_THROWS_AS(r_circ_r(PrimeField(13), 0), std::invalid_argument);
}

TEST_CASE("residue transform bound |hat R(x)| <= (sqrt p + 1)/2") {
  for (u64 p = 3; p <= 499; p += 2) {
    if (!is_prime(p)) continue;
    PrimeField F(p);
    CFunction Rh = fourier(lift(indicator(F.residues())));
    const double bound = (std::sqrt(static_cast<double>(p)) + 1.0) / 2.0;
    for (u64 x = 1; x < p; ++x)
      CHECK(std::abs(Rh.values[x]) <= bound + 1e-6);
  }
}

TEST_CASE("tightness witness: sum chi(x+y) A(x) E_A(y) = p|A| - |A|^2") {
  std::mt19937_64 rng(31);
  for (u64 p : {13ull, 31ull}) {
    PrimeField F(p);
    IntFunction chi = legendre_function(F);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<u64> mem;
      for (u64 x = 0; x < p; ++x)
        if (rng() & 1) mem.push_back(x);
      FSet A(p, mem);
      IntFunction E = convolve_circ(indicator(A), chi);
      i64 lhs = 0;
      for (u64 x : A.members)
        for (u64 y = 0; y < p; ++y)
          lhs += chi.values[(x + y) % p] * E.values[y];
      const i64 a = static_cast<i64>(A.size());
      CHECK(lhs == static_cast<i64>(p) * a - a * a);
    }
  }
}
