#include <catch2/catch_amalgamated.hpp>

#include "hyperzeta/irreducible_table.hpp"
#include "hyperzeta/poly.hpp"
#include "hyperzeta/rational.hpp"
#include "oracles.hpp"

using namespace hz;

TEST_CASE("ring arithmetic basics") {
  FieldCtx F(3);
  Poly x2m1({2, 0, 1});  // x^2 - 1 = x^2 + 2
  Poly xm1({2, 1});      // x - 1 = x + 2
  CHECK(poly_gcd(x2m1, xm1, F) == xm1);
  CHECK(poly_derivative(Poly({0, 0, 0, 1}), F).is_zero());  // (x^3)' = 0 in char 3
  CHECK(poly_eval(Poly({1, 0, 1}), 1, F) == 2);

  Poly a({1, 2, 0, 1}), b({2, 1});
  auto [q, r] = poly_divrem(a, b, F);
  CHECK(poly_add(poly_mul(q, b, F), r, F) == a);
  CHECK(r.deg() < b.deg());
  CHECK_THROWS_AS(poly_divrem(a, Poly(), F), std::invalid_argument);
}

TEST_CASE("squarefree detection with the derivative edge case") {
  FieldCtx F(3);
  CHECK(is_squarefree(Poly({0, 1, 1}), F));          // x^2+x, roots 0 and -1
  CHECK_FALSE(is_squarefree(Poly({0, 0, 1}), F));    // x^2
  CHECK_FALSE(is_squarefree(Poly({0, 0, 0, 1}), F)); // x^3 = (x)^3, f' = 0
  CHECK_THROWS_AS(is_squarefree(Poly(), F), std::invalid_argument);
}

TEST_CASE("monic enumeration is lexicographic and complete") {
  FieldCtx F(3);
  auto d0 = enumerate_monic(0, F);
  REQUIRE(d0.size() == 1);
  CHECK(d0[0] == poly_one());
  CHECK(enumerate_monic(2, F).size() == 9);

  // lex order: low coefficients compared first, first difference decides
  auto d2 = enumerate_monic(2, F);
  CHECK(d2[0] == Poly({0, 0, 1}));
  CHECK(d2[1] == Poly({0, 1, 1}));
  CHECK(d2[3] == Poly({1, 0, 1}));
  for (size_t i = 0; i < d2.size(); ++i) CHECK(lex_index(d2[i], F) == i);

  uint64_t sf = 0;
  for (const Poly& p : enumerate_monic(3, F)) sf += is_squarefree(p, F);
  CHECK(sf == 18);  // (1 - 1/q) q^d at q=3, d=3

  for (uint32_t q : {3u, 5u}) {
    FieldCtx Fq(q);
    for (uint32_t d = 1; d <= 6; ++d) {
      if (monic_count(d, Fq) > 20000) continue;
      uint64_t cnt = 0;
      for_each_monic(d, Fq, [&](const Poly& p) { cnt += is_squarefree(p, Fq); });
      CHECK(cnt == squarefree_count(d, q));
    }
  }
}

TEST_CASE("irreducible table counts and the divisor identity") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  CHECK(T.pi[1] == 3);
  CHECK(T.pi[2] == 3);  // oracle: brute root test over the 9 monic quadratics
  uint64_t brute_pi2 = 0;
  for_each_monic(2, F, [&](const Poly& p) { brute_pi2 += oracles::irreducible_slow(p, F); });
  CHECK(T.pi[2] == brute_pi2);

  // sum over d|4 of d pi(d) = 3^4
  CHECK(1 * T.pi[1] + 2 * T.pi[2] + 4 * T.pi[4] == 81);

  // every table irreducible passes the slow test, and the counts match
  for (uint32_t d = 1; d <= 5; ++d) {
    uint64_t brute = 0;
    for_each_monic(d, F, [&](const Poly& p) { brute += oracles::irreducible_slow(p, F); });
    CHECK(T.pi[d] == brute);
    for (uint32_t lex : T.irr[d]) CHECK(oracles::irreducible_slow(monic_from_lex(d, lex, F), F));
  }
}

TEST_CASE("mobius and von Mangoldt") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  CHECK(mobius(poly_one(), T) == 1);
  CHECK(mobius(poly_x(), T) == -1);
  CHECK(mobius(Poly({0, 1, 1}), T) == 1);   // x(x+1)
  CHECK(mobius(Poly({0, 0, 1}), T) == 0);   // x^2
  CHECK(von_mangoldt(Poly({0, 0, 1}), T) == 1);
  CHECK(von_mangoldt(Poly({0, 1, 1}), T) == 0);
  CHECK(von_mangoldt(poly_one(), T) == 0);

  // mu against direct factor counting via the slow irreducibility test
  for (uint32_t d = 1; d <= 4; ++d)
    for_each_monic(d, F, [&](const Poly& f) {
      if (!is_squarefree(f, F)) {
        CHECK(mobius(f, T) == 0);
        return;
      }
      int factors = 0;
      for (uint32_t e = 1; e <= d; ++e)
        for_each_monic(e, F, [&](const Poly& p) {
          if (oracles::irreducible_slow(p, F) && poly_mod(f, p, F).is_zero()) ++factors;
        });
      CHECK(mobius(f, T) == (factors % 2 ? -1 : 1));
    });

  // sum of Lambda over monic f of degree l is q^l
  for (uint32_t l = 1; l <= 4; ++l) {
    uint64_t s = 0;
    for_each_monic(l, F, [&](const Poly& f) { s += von_mangoldt(f, T); });
    CHECK(s == monic_count(l, F));
  }
  CHECK_THROWS_AS(mobius(Poly({0, 0, 0, 0, 0, 0, 0, 1}), T), std::out_of_range);
}

TEST_CASE("prime polynomial theorem bound at desk scale") {
  for (uint32_t q : {3u, 5u}) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(8, F);
    for (uint32_t n = 2; n <= 8; ++n) {
      BigInt diff = BigInt(T.pi[n]) * n - boost::multiprecision::pow(BigInt(q), n);
      CHECK(diff * diff <= 4 * boost::multiprecision::pow(BigInt(q), n));
    }
  }
}

TEST_CASE("poly string round trip") {
  FieldCtx F(5);
  Poly p = poly_from_string("0,2,0,1", F);
  CHECK(p == Poly({0, 2, 0, 1}));
  CHECK(poly_to_string(p) == "0,2,0,1");
  CHECK(poly_from_string("-1,6", F) == Poly({4, 1}));
  CHECK_THROWS_AS(poly_from_string("1,a", F), std::invalid_argument);
  CHECK_THROWS_AS(poly_from_string("", F), std::invalid_argument);
}
