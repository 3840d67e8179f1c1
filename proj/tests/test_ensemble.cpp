#include <catch2/catch_amalgamated.hpp>

#include "hyperzeta/ensemble.hpp"
#include "oracles.hpp"

using namespace hz;

TEST_CASE("family cardinalities") {
  CHECK(family_size({FamilyKind::FOdd, 3, 1}) == 18);
  CHECK(family_size({FamilyKind::FEven, 3, 1}) == 54);
  CHECK(family_size({FamilyKind::Union, 3, 1}) == 72);
  CHECK(family_size({FamilyKind::Hg, 3, 1}) == 144);  // (q-1)(#F_3 + #F_4)
  CHECK(family_size({FamilyKind::HgMonic, 3, 1}) == 72);
  // q^{2g} (q-1)(q+1) for the union
  CHECK(family_size({FamilyKind::Union, 5, 2}) == 625u * 4 * 6);

  FieldCtx F(3);
  for (FamilyKind k : {FamilyKind::FOdd, FamilyKind::FEven, FamilyKind::Union, FamilyKind::Hg,
                       FamilyKind::HgMonic}) {
    FamilySpec s{k, 3, 1};
    auto curves = enumerate_family(s, F);
    CHECK(curves.size() == family_size(s));
    for (const Curve& c : curves) {
      CHECK(is_squarefree(c.Q, F));
      CHECK((c.Q.deg() == 3 || c.Q.deg() == 4));
      if (k != FamilyKind::Hg) CHECK(c.Q.is_monic());
    }
  }
}

TEST_CASE("budget guard refuses rather than truncates") {
  FieldCtx F(3);
  CHECK_THROWS_AS(enumerate_family({FamilyKind::Hg, 3, 1}, F, 10), BudgetError);
  CHECK_NOTHROW(enumerate_family({FamilyKind::Hg, 3, 1}, F, 1000));
}

TEST_CASE("odd-n vanishing over Hg, exact") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(5, F);
  ScanOptions opt;
  for (uint32_t n : {1u, 3u}) {
    FamilyAverage A = avg_trace_brute({FamilyKind::Hg, 3, 1}, n, T, opt);
    CHECK(A.avg_scaled == 0);
  }
  FamilyAverage A5 = avg_trace_brute({FamilyKind::Hg, 3, 2}, 5, T, opt);
  CHECK(A5.avg_scaled == 0);
  CHECK(avg_point_count({FamilyKind::Hg, 3, 2}, 3, T, opt) == rational_pow(3, 3) + 1);
}

TEST_CASE("sieve average equals brute enumeration, q=3 g=1, all prime powers to degree 4") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(4, F);
  std::vector<Poly> fs;
  for (uint32_t d = 1; d <= 4; ++d)
    for (uint32_t lex : T.irr[d]) {
      Poly P = monic_from_lex(d, lex, F);
      Poly f = P;
      while (f.deg() <= 4) {
        fs.push_back(f);
        f = poly_mul(f, P, F);
      }
    }
  for (FamilyKind k : {FamilyKind::FOdd, FamilyKind::FEven, FamilyKind::Union, FamilyKind::Hg,
                       FamilyKind::HgMonic}) {
    FamilySpec s{k, 3, 1};
    auto curves = enumerate_family(s, F);
    for (const Poly& f : fs) {
      BigInt sum = 0;
      for (const Curve& c : curves) sum += residue_symbol(c.Q, f, F);
      CHECK(avg_chi_sieve(f, s, T) == Rational(sum, BigInt(curves.size())));
    }
  }
}

TEST_CASE("sieve average special cases") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  // odd-degree prime power over Hg: exactly zero
  CHECK(avg_chi_sieve(poly_x(), {FamilyKind::Hg, 3, 2}, T) == 0);
  Poly P3 = monic_from_lex(3, T.irr[3][0], F);
  CHECK(avg_chi_sieve(P3, {FamilyKind::Hg, 3, 2}, T) == 0);

  // f = P^2 with deg P = 1: the sieve value agrees with the closed
  // coprime-count evaluation
  Poly f = poly_mul(poly_x(), poly_x(), F);
  FamilySpec s{FamilyKind::FEven, 3, 2};
  BigInt acc = 0;
  for (uint32_t alpha = 0; 2 * alpha <= 6; ++alpha) {
    int64_t sig = sigma_closed(1, alpha, 3);
    if (!sig) continue;
    acc += BigInt(sig) * count_coprime_B(6 - 2 * alpha, poly_x(), true, F);
  }
  CHECK(avg_chi_sieve(f, s, T) == Rational(acc, BigInt(family_size(s))));

  CHECK_THROWS_AS(avg_chi_sieve(Poly({0, 1, 1}), s, T), std::invalid_argument);  // x(x+1) not a prime power
}

TEST_CASE("decomposition parts sum to the brute average") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  ScanOptions opt;
  for (FamilyKind k : {FamilyKind::FOdd, FamilyKind::FEven, FamilyKind::Union, FamilyKind::Hg}) {
    for (uint32_t n = 1; n <= 4; ++n) {
      FamilySpec s{k, 3, 1};
      TraceDecomposition D = decompose_avg(s, n, T);
      FamilyAverage A = avg_trace_brute(s, n, T, opt);
      CHECK(D.total() == A.avg_scaled);
      if (n % 2 == 1) CHECK(D.square_part == 0);
    }
  }
  // (F_even, q=3, g=2), n=2: record the exact prime part
  TraceDecomposition D = decompose_avg({FamilyKind::FEven, 3, 2}, 2, T);
  INFO("prime part = " << num_str(D.prime_part) << "/" << den_str(D.prime_part));
  CHECK(D.total() == avg_trace_brute({FamilyKind::FEven, 3, 2}, 2, T, opt).avg_scaled);
}

TEST_CASE("family algebra: union is the weighted mixture") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  ScanOptions opt;
  for (uint32_t n = 1; n <= 4; ++n) {
    FamilyAverage odd = avg_trace_brute({FamilyKind::FOdd, 3, 1}, n, T, opt);
    FamilyAverage even = avg_trace_brute({FamilyKind::FEven, 3, 1}, n, T, opt);
    FamilyAverage uni = avg_trace_brute({FamilyKind::Union, 3, 1}, n, T, opt);
    Rational mix = (Rational(BigInt(odd.curves)) * odd.avg_scaled + Rational(BigInt(even.curves)) * even.avg_scaled) /
                   Rational(BigInt(odd.curves + even.curves));
    CHECK(uni.avg_scaled == mix);
  }
}

TEST_CASE("Hg vs its monic slice") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  ScanOptions opt;
  for (uint32_t g : {1u, 2u}) {
    for (uint32_t n = 1; n <= 4; ++n) {
      FamilyAverage hg = avg_trace_brute({FamilyKind::Hg, 3, g}, n, T, opt);
      FamilyAverage hgm = avg_trace_brute({FamilyKind::HgMonic, 3, g}, n, T, opt);
      if (n % 2 == 0) {
        CHECK(hg.avg_scaled == hgm.avg_scaled);
      } else {
        CHECK(hg.avg_scaled == 0);
      }
    }
  }
  // the monic slice is generally biased for odd n
  FamilyAverage hgm1 = avg_trace_brute({FamilyKind::HgMonic, 3, 1}, 1, T, opt);
  CHECK(hgm1.avg_scaled != 0);
}

TEST_CASE("hand-computed exact averages at q=3, g=2, n=2") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  ScanOptions opt;
  FamilyAverage fo = avg_trace_brute({FamilyKind::FOdd, 3, 2}, 2, T, opt);
  FamilyAverage hg = avg_trace_brute({FamilyKind::Hg, 3, 2}, 2, T, opt);
  CHECK(fo.avg_scaled == Rational(-20, 9));
  CHECK(hg.avg_scaled == Rational(-80, 27));
  // trace-unit gap 20/81, within 1/324 of 1/(q+1)
  CHECK((fo.avg_scaled - hg.avg_scaled) / 3 == Rational(20, 81));
}

TEST_CASE("main terms and branches") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  // F_odd at n = 2g: -q^{n/2}(1 + 1/(q-1)) plus the prime sum
  {
    auto [mt, branch] = main_term({FamilyKind::FOdd, 3, 2}, 4, T);
    CHECK(branch == "n=2g");
    Rational sum = Rational(3, 4) + Rational(BigInt(T.pi[2]) * 2, 10);  // deg 1 and deg 2 primes
    CHECK(mt == sum - Rational(9) * Rational(3, 2));
  }
  // Hg at n = 2g: -q^{n/2}(1 + 1/(q^2-1)), prime sum excludes degree 1
  {
    auto [mt, branch] = main_term({FamilyKind::Hg, 3, 2}, 4, T);
    CHECK(branch == "even:n=2g");
    Rational sum = Rational(BigInt(T.pi[2]) * 2, 10);
    CHECK(mt == sum - Rational(9) * Rational(9, 8));
  }
  // Hg odd n is exactly zero
  {
    auto [mt, branch] = main_term({FamilyKind::Hg, 3, 2}, 3, T);
    CHECK(branch == "odd-exact");
    CHECK(mt == 0);
  }
  // F_even at n = 2g+1: q^{(n+1)/2}/(q-1), kept rational
  {
    auto [mt, branch] = main_term({FamilyKind::FEven, 3, 2}, 5, T);
    CHECK(branch == "n=2g+1");
    CHECK(mt == Rational(-1) + Rational(27, 2));
  }
  // union at n = 2g+1: q^{(n+3)/2}/(q^2-1)
  {
    auto [mt, branch] = main_term({FamilyKind::Union, 3, 2}, 5, T);
    CHECK(branch == "n=2g+1");
    CHECK(mt == Rational(-3, 4) + Rational(81, 8));
  }
  // Hg even n < 2g at g=3: prime sum over deg P | n/2, deg P != 1
  {
    IrreducibleTable T8(build_irreducible_table(8, F));
    auto [mt, branch] = main_term({FamilyKind::Hg, 3, 3}, 4, T8);
    CHECK(branch == "even:n<2g");
    CHECK(mt == Rational(BigInt(T8.pi[2]) * 2, 10) - 9);
  }
}

TEST_CASE("rmt reference values") {
  CHECK(rmt_value(2, 1) == -1);
  CHECK(rmt_value(3, 5) == 0);
  CHECK(rmt_value(4, 1) == 0);  // n = 2g+2 > 2g
  CHECK(rmt_value(4, 2) == -1);
  CHECK(rmt_value(2 * 7 + 2, 7) == 0);
}

TEST_CASE("worker count does not change sums") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(6, F);
  for (unsigned w : {1u, 2u, 5u, 8u}) {
    ScanOptions opt;
    opt.workers = w;
    FamilyAverage A = avg_trace_brute({FamilyKind::Hg, 3, 2}, 4, T, opt);
    CHECK(A.avg_scaled == avg_trace_brute({FamilyKind::Hg, 3, 2}, 4, T).avg_scaled);
  }
}

TEST_CASE("cross-check stride catches nothing on honest scans and runs") {
  FieldCtx F(3);
  IrreducibleTable T = build_irreducible_table(4, F);
  ScanOptions opt;
  opt.check_stride = 1;  // cross-check everything
  FamilyAverage A = avg_trace_brute({FamilyKind::Hg, 3, 1}, 3, T, opt);
  CHECK(A.curves == 144);
}
