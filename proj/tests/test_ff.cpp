#include <catch2/catch_amalgamated.hpp>

#include "hyperzeta/ext_field.hpp"
#include "hyperzeta/ff.hpp"
#include "oracles.hpp"

using namespace hz;

TEST_CASE("FieldCtx rejects non odd primes") {
  CHECK_THROWS_AS(FieldCtx(2), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(4), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(9), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx(1), std::invalid_argument);
  CHECK_NOTHROW(FieldCtx(3));
  CHECK_NOTHROW(FieldCtx(97));
}

TEST_CASE("fq_pow basics") {
  FieldCtx F5(5), F3(3);
  CHECK(fq_pow(2, 3, F5) == 3);
  CHECK(fq_pow(0, 0, F5) == 1);
  CHECK(fq_pow(4, 0, F5) == 1);
  CHECK(fq_pow(2, (3 - 1) / 2, F3) == 2);  // 2 is a non-square mod 3
}

TEST_CASE("chi_base against the square-enumeration oracle") {
  FieldCtx F3(3), F7(7);
  CHECK(chi_base(0, F3) == 0);
  CHECK(chi_base(1, F7) == 1);
  CHECK(chi_base(3, F7) == -1);  // squares mod 7 are {1,2,4}
  for (uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    FieldCtx F(q);
    std::vector<int> expect(q, -1);
    expect[0] = 0;
    for (uint32_t x = 1; x < q; ++x) expect[(x * x) % q] = 1;
    for (uint32_t a = 0; a < q; ++a) CHECK(chi_base(a, F) == expect[a]);
  }
}

TEST_CASE("chi_base multiplicativity and balance, exhaustive for q <= 13") {
  for (uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    FieldCtx F(q);
    int plus = 0, minus = 0;
    for (uint32_t a = 1; a < q; ++a) {
      CHECK(chi_base(a, F) * chi_base(a, F) == 1);
      (chi_base(a, F) == 1 ? plus : minus)++;
      for (uint32_t b = 1; b < q; ++b) CHECK(chi_base(F.mul(a, b), F) == chi_base(a, F) * chi_base(b, F));
    }
    CHECK(plus == int((q - 1) / 2));
    CHECK(minus == int((q - 1) / 2));
  }
}

TEST_CASE("extension moduli are the lex-smallest irreducibles") {
  FieldCtx F(3);
  CHECK(build_extension(1, F).modulus == poly_x());
  CHECK(build_extension(2, F).modulus == Poly({1, 0, 1}));     // x^2+1
  CHECK(build_extension(3, F).modulus == Poly({1, 0, 2, 1}));  // x^3+2x^2+1

  // oracle: first rootless monic quadratic/cubic in lex order
  for (uint32_t d : {2u, 3u}) {
    Poly first;
    bool found = false;
    for_each_monic(d, F, [&](const Poly& p) {
      if (!found && oracles::irreducible_slow(p, F)) {
        first = p;
        found = true;
      }
    });
    CHECK(build_extension(d, F).modulus == first);
  }

  // deterministic: two builds agree
  for (uint32_t q : {3u, 5u})
    for (uint32_t n = 1; n <= 4; ++n) {
      FieldCtx Fq(q);
      CHECK(build_extension(n, Fq).modulus == build_extension(n, Fq).modulus);
      CHECK(oracles::irreducible_slow(build_extension(n, Fq).modulus, Fq));
    }
}

TEST_CASE("chi_ext equals the brute square table") {
  for (uint32_t q : {3u, 5u}) {
    FieldCtx F(q);
    for (uint32_t n = 1; n <= 3; ++n) {
      ExtFieldCtx E = build_extension(n, F);
      auto chi = oracles::ext_chi_by_squares(E.modulus, F);
      for (uint64_t z = 0; z < E.card; ++z) {
        ExtElem a = ext_unpack(z, E);
        CHECK(chi_ext(a, E) == chi.at(a.coeffs));
        CHECK(E.chi_tab[z] == chi.at(a.coeffs));
      }
    }
  }
}

TEST_CASE("chi_ext on the embedded base field") {
  ExtElem zero;
  FieldCtx F(3);
  ExtFieldCtx E = build_extension(2, F);
  zero.coeffs = {0, 0};
  CHECK(chi_ext(zero, E) == 0);

  // q=3, n=2: the class of x is a square in F_9 (it is (1+2x)^2)
  ExtElem t;
  t.coeffs = {0, 1};
  CHECK(chi_ext(t, E) == 1);

  for (uint32_t q : {3u, 5u})
    for (uint32_t n = 1; n <= 4; ++n) {
      FieldCtx Fq(q);
      ExtFieldCtx En = build_extension(n, Fq);
      for (uint32_t a = 1; a < q; ++a) {
        ExtElem e;
        e.coeffs.assign(n, 0);
        e.coeffs[0] = a;
        int expect = n % 2 == 0 ? 1 : chi_base(a, Fq);  // even n: all of F_q^* becomes square
        CHECK(chi_ext(e, En) == expect);
      }
    }
}

TEST_CASE("packed extension arithmetic matches poly arithmetic") {
  for (uint32_t q : {3u, 5u}) {
    FieldCtx F(q);
    for (uint32_t n : {2u, 3u}) {
      ExtFieldCtx E = build_extension(n, F);
      std::vector<Poly> elems = oracles::residues_mod(E.modulus, F);
      oracles::XorShift rng(12345 + q + n);
      for (int trial = 0; trial < 200; ++trial) {
        uint64_t a = rng.below(E.card), b = rng.below(E.card);
        Poly pa = elems[a], pb = elems[b];
        Poly sum = poly_add(pa, pb, F);
        Poly prod = poly_mod(poly_mul(pa, pb, F), E.modulus, F);
        std::vector<uint32_t> ks(n, 0), kp(n, 0);
        for (int i = 0; i <= sum.deg(); ++i) ks[i] = sum.c[i];
        for (int i = 0; i <= prod.deg(); ++i) kp[i] = prod.c[i];
        CHECK(ext_unpack(E.add(a, b), E).coeffs == ks);
        CHECK(ext_unpack(E.mul(a, b), E).coeffs == kp);
      }
    }
  }
}
