#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "resform/diffsets.hpp"
#include "resform/funcspace.hpp"

using namespace resform;

TEST_CASE("pds_lambda") {
  {
    PDSReport r = pds_lambda(FSet(13, {0, 1, 3, 9}));
    CHECK(r.is_pds);
    CHECK(r.lambda == 1);
  }
  {
    PDSReport r = pds_lambda(PrimeField(11).residues());
    CHECK(r.is_pds);
    CHECK(r.lambda == 2);
  }
  {
    std::vector<u64> full(9);
    for (u64 i = 0; i < 9; ++i) full[i] = i;
    PDSReport r = pds_lambda(FSet(9, full));
    CHECK(r.is_pds);
    CHECK(r.lambda == 9);
  }
  {
    PDSReport r = pds_lambda(FSet(11, {3}));  // degenerate lambda = 0
    CHECK(r.is_pds);
    CHECK(r.lambda == 0);
  }
  CHECK_FALSE(pds_lambda(FSet(13, {0, 1, 2})).is_pds);
  // counting identity a(a-1) = lambda(m-1)
  for (const FSet& A : {FSet(13, {0, 1, 3, 9}), FSet(7, {3, 5, 6}),
                        PrimeField(11).residues()}) {
    PDSReport r = pds_lambda(A);
    REQUIRE(r.is_pds);
    i64 a = static_cast<i64>(A.size());
    CHECK(a * (a - 1) == r.lambda * static_cast<i64>(A.modulus - 1));
  }
}

TEST_CASE("class D membership") {
  CHECK(in_class_D(legendre_function(PrimeField(13))));
  CHECK(in_class_D(indicator(PrimeField(11).residues())));
  CHECK_FALSE(in_class_D(indicator(PrimeField(13).residues())));
  // complex path agrees with integer path
  CHECK(in_class_D(lift(legendre_function(PrimeField(13)))));
  CHECK_FALSE(in_class_D(lift(indicator(PrimeField(13).residues()))));
}

TEST_CASE("class D closure under convolution and affine maps") {
  std::mt19937_64 rng(3);
  IntFunction chi = legendre_function(PrimeField(13));
  IntFunction A = indicator(FSet(13, {0, 1, 3, 9}));
  CHECK(in_class_D(convolve_circ(chi, A)));
  CHECK(in_class_D(convolve_star(chi, A)));
  for (int rep = 0; rep < 10; ++rep) {
    double alpha = static_cast<double>(rng() % 7) - 3.0;
    double beta = static_cast<double>(rng() % 7) + 1.0;
    CFunction g = lift(A);
    for (auto& v : g.values) v = alpha + beta * v;
    CHECK(in_class_D(g, 1e-6));
  }
}

TEST_CASE("multipliers") {
  CHECK(multipliers(FSet(7, {3, 5, 6})) == FSet(7, {1, 2, 4}));
  FSet M13 = multipliers(FSet(13, {0, 1, 3, 9}));
  CHECK(M13.contains(1));
  CHECK(M13.contains(3));
  // group closure
  for (const FSet& A : {FSet(13, {0, 1, 3, 9}), FSet(7, {3, 5, 6}),
                        FSet(11, {1, 2, 8})}) {
    FSet M = multipliers(A);
    CHECK(M.contains(1));
    for (u64 x : M.members)
      for (u64 y : M.members)
        CHECK(M.contains(mulmod(x, y, A.modulus)));
  }
}

TEST_CASE("fixed_translate") {
  CHECK(fixed_translate(FSet(7, {3, 5, 6}), 2) == 0);
  CHECK(fixed_translate(FSet(13, {0, 1, 3, 9}), 3) == 0);
  CHECK(fixed_translate(FSet(11, {1, 2, 8}), 1) == 0);
  CHECK_THROWS_AS(fixed_translate(FSet(6, {1}), 2), std::invalid_argument);
}

TEST_CASE("singer construction") {
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull}) {
    FSet A = singer(q);
    CHECK(A.modulus == q * q + q + 1);
    CHECK(A.size() == q + 1);
    PDSReport r = pds_lambda(A);
    CHECK(r.is_pds);
    CHECK(r.lambda == 1);
    // multiplier theorem instance: q | |A|-lambda, q > lambda
    CHECK(fixed_translate(A, q % A.modulus).has_value());
  }
  CHECK_THROWS_AS(singer(4), std::invalid_argument);
  CHECK_THROWS_AS(singer(1), std::invalid_argument);
}

TEST_CASE("singer q=2,3 match the p=7,13 sets up to dilation/translation") {
  auto equivalent = [](const FSet& A, const FSet& B) {
    for (u64 lam = 1; lam < A.modulus; ++lam) {
      if (std::gcd(lam, A.modulus) != 1) continue;
      FSet D = dilate(A, lam);
      for (u64 s = 0; s < A.modulus; ++s)
        if (translate(D, s) == B) return true;
    }
    return false;
  };
  CHECK(equivalent(singer(2), FSet(7, {3, 5, 6})));
  CHECK(equivalent(singer(3), FSet(13, {0, 1, 3, 9})));
}
