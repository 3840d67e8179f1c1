#pragma once

// Verification suites behind `verify`: every invariant the library promises,
// runnable at a configured (q, g).  Each suite counts cases and failures.
// The oracles here are deliberately independent of the code paths they
// check: the symbol oracle exponentiates in the quotient ring instead of
// running the reciprocity loop, the square tables are filled by brute
// enumeration, and the affine count loops over y instead of using the
// character formula.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperzeta/charsum.hpp"
#include "hyperzeta/curve.hpp"
#include "hyperzeta/ensemble.hpp"
#include "hyperzeta/ext_field.hpp"
#include "hyperzeta/irreducible_table.hpp"

namespace hz {

struct SuiteResult {
  std::string suite;
  uint64_t cases = 0;
  uint64_t failures = 0;
  double seconds = 0;
};

namespace oracle {

// (D/P) for irreducible P by the Euler criterion: D^{(|P|-1)/2} mod P
inline int euler_symbol(const Poly& D, const Poly& P, const FieldCtx& F) {
  Poly r = poly_mod(D, P, F);
  if (r.is_zero()) return 0;
  uint64_t e = 1;
  for (int i = 0; i < P.deg(); ++i) e *= F.q;
  e = (e - 1) / 2;
  Poly acc = poly_one(), b = r;
  while (e) {
    if (e & 1) acc = poly_mod(poly_mul(acc, b, F), P, F);
    b = poly_mod(poly_mul(b, b, F), P, F);
    e >>= 1;
  }
  if (acc == poly_one()) return 1;
  if (acc.deg() == 0 && acc.c[0] == F.q - 1) return -1;
  return 2;  // not +-1: flags a broken oracle input
}

// affine solutions of y^2 = Q(x) over F_{q^n} counted by the double loop
inline uint64_t affine_count(const Poly& Q, const ExtFieldCtx& E) {
  uint64_t cnt = 0;
  for (uint64_t x = 0; x < E.card; ++x) {
    uint64_t v = eval_ext(Q, x, E);
    for (uint64_t y = 0; y < E.card; ++y)
      if (E.mul(y, y) == v) ++cnt;
  }
  return cnt;
}

// points at infinity on the smooth model
inline uint64_t infinity_count(const Curve& C) { return uint64_t(C.lambda + 1); }

}  // namespace oracle

namespace suites {

using Clock = std::chrono::steady_clock;

template <class Fn>
inline SuiteResult timed(const std::string& name, Fn&& fn) {
  SuiteResult r;
  r.suite = name;
  auto t0 = Clock::now();
  fn(r);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

inline void check(SuiteResult& r, bool ok) {
  ++r.cases;
  if (!ok) ++r.failures;
}

// chi multiplicativity and the square/non-square balance
inline SuiteResult ff_character(uint32_t q) {
  return timed("ff.character", [&](SuiteResult& r) {
    FieldCtx F(q);
    int plus = 0, minus = 0;
    for (uint32_t a = 1; a < q; ++a) {
      (chi_base(a, F) == 1 ? plus : minus)++;
      check(r, chi_base(a, F) * chi_base(a, F) == 1);
      for (uint32_t b = 1; b < q; ++b) check(r, chi_base(F.mul(a, b), F) == chi_base(a, F) * chi_base(b, F));
    }
    check(r, plus == int((q - 1) / 2) && minus == int((q - 1) / 2));
  });
}

// chi on F_{q^n}: table vs Euler powering, and the embedded base field
inline SuiteResult ff_extension(uint32_t q, uint32_t n_hi = 4) {
  return timed("ff.extension", [&](SuiteResult& r) {
    FieldCtx F(q);
    for (uint32_t n = 1; n <= n_hi; ++n) {
      ExtFieldCtx E = build_extension(n, F);
      ExtFieldCtx E2 = build_extension(n, F);
      check(r, E.modulus == E2.modulus);  // deterministic construction
      for (uint64_t z = 0; z < E.card; ++z) check(r, chi_ext(ext_unpack(z, E), E) == E.chi_tab[z]);
      for (uint32_t a = 1; a < q; ++a) {
        int expect = n % 2 == 0 ? 1 : chi_base(a, F);
        check(r, E.chi_tab[E.embed(a)] == expect);
      }
    }
  });
}

// squarefree counts (1-1/q) q^d and the Mobius sieve identity
inline SuiteResult poly_squarefree(uint32_t q, uint32_t d_hi = 6) {
  return timed("poly.squarefree", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(d_hi, F);
    for (uint32_t d = 1; d <= d_hi; ++d) {
      uint64_t cnt = 0;
      for_each_monic(d, F, [&](const Poly& f) { cnt += is_squarefree(f, F); });
      check(r, cnt == squarefree_count(d, q));
    }
    // sum of mu(A) over A^2 | Q detects squarefreeness
    for (uint32_t d = 1; d <= d_hi; ++d) {
      for_each_monic(d, F, [&](const Poly& Q) {
        int64_t s = 0;
        for (uint32_t alpha = 0; 2 * alpha <= d; ++alpha) {
          for_each_monic(alpha, F, [&](const Poly& A) {
            Poly A2 = poly_mul(A, A, F);
            if (poly_mod(Q, A2, F).is_zero()) s += mobius(A, T);
          });
        }
        check(r, s == (is_squarefree(Q, F) ? 1 : 0));
      });
    }
  });
}

// pi_q(n) against the divisor identity and the Prime Polynomial bound
inline SuiteResult poly_pi(uint32_t q, uint32_t n_hi = 8) {
  return timed("poly.pi", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(n_hi, F);
    for (uint32_t n = 1; n <= n_hi; ++n) {
      BigInt lhs = 0;
      for (uint32_t d = 1; d <= n; ++d)
        if (n % d == 0) lhs += BigInt(d) * T.pi[d];
      check(r, lhs == boost::multiprecision::pow(BigInt(q), n));
      if (n >= 2) {
        // |pi - q^n/n| <= 2 q^{n/2}/n, squared to stay integral
        BigInt diff = BigInt(T.pi[n]) * n - boost::multiprecision::pow(BigInt(q), n);
        check(r, diff * diff <= 4 * boost::multiprecision::pow(BigInt(q), n));
      }
    }
  });
}

// the reciprocity-loop symbol vs the Euler-criterion oracle, all D up to
// degree d_hi (monic or not, zero included) against all irreducible P
inline SuiteResult symbol_euler(uint32_t q, uint32_t d_hi = 4, uint32_t p_hi = 3) {
  return timed("symbol.euler", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(p_hi, F);
    std::vector<Poly> all_D;
    all_D.push_back(Poly());
    for (uint32_t d = 0; d <= d_hi; ++d)
      for_each_monic(d, F, [&](const Poly& M) {
        for (uint32_t a = 1; a < q; ++a) all_D.push_back(poly_scale(M, a, F));
      });
    for (uint32_t dp = 1; dp <= p_hi; ++dp)
      for (uint32_t lex : T.irr[dp]) {
        Poly P = monic_from_lex(dp, lex, F);
        for (const Poly& D : all_D) check(r, residue_symbol(D, P, F) == oracle::euler_symbol(D, P, F));
      }
  });
}

// monic reciprocity, multiplicativity, and the A^2 B reduction
inline SuiteResult symbol_reciprocity(uint32_t q, uint32_t d_hi = 4) {
  return timed("symbol.reciprocity", [&](SuiteResult& r) {
    FieldCtx F(q);
    const bool half_odd = ((q - 1) / 2) & 1;
    for (uint32_t da = 1; da <= d_hi; ++da)
      for (uint32_t db = 1; db <= d_hi; ++db) {
        if (monic_count(da, F) * monic_count(db, F) > 100000) continue;
        for_each_monic(da, F, [&](const Poly& A) {
          for_each_monic(db, F, [&](const Poly& B) {
            if (poly_gcd(A, B, F).deg() != 0) return;
            int sign = (half_odd && (da & 1) && (db & 1)) ? -1 : 1;
            check(r, residue_symbol(A, B, F) == sign * residue_symbol(B, A, F));
          });
        });
      }
    // (A^2 B / f) = (B/f) on coprime A, else 0
    for_each_monic(2, F, [&](const Poly& A) {
      for_each_monic(2, F, [&](const Poly& B) {
        for_each_monic(2, F, [&](const Poly& f) {
          Poly D = poly_mul(poly_mul(A, A, F), B, F);
          int lhs = residue_symbol(D, f, F);
          int rhs = poly_gcd(A, f, F).deg() == 0 ? residue_symbol(B, f, F) : 0;
          check(r, lhs == rhs);
        });
      });
    });
  });
}

// both trace routes on every curve of H_g, n = 1..2g+2
inline SuiteResult curve_routes(uint32_t q, uint32_t g, uint64_t budget = 10'000'000) {
  return timed("curve.routes", [&](SuiteResult& r) {
    FieldCtx F(q);
    uint32_t n_hi = 2 * g + 2;
    IrreducibleTable T = build_irreducible_table(n_hi, F);
    std::vector<ExtFieldCtx> exts;
    for (uint32_t n = 1; n <= n_hi; ++n) exts.push_back(build_extension(n, F, n_hi));
    for_each_curve({FamilyKind::Hg, q, g}, F, budget, [&](const Curve& C) {
      std::vector<int64_t> t = traces_character_sum(C, n_hi, T);
      for (uint32_t n = 1; n <= n_hi; ++n)
        check(r, t[n] == scaled_trace_from_count(count_points(C, n, exts[n - 1]), n, F));
    });
  });
}

// functional equation, Weil bound, root radii and the L-series identity
inline SuiteResult curve_lpoly(uint32_t q, uint32_t g, uint64_t budget = 10'000'000) {
  return timed("curve.lpoly", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(2 * g + 2, F);
    std::vector<ExtFieldCtx> exts;
    for (uint32_t n = 1; n <= 2 * g; ++n) exts.push_back(build_extension(n, F, 2 * g + 2));
    for_each_curve({FamilyKind::Hg, q, g}, F, budget, [&](const Curve& C) {
      std::vector<int64_t> t(2 * g + 1, 0);
      for (uint32_t n = 1; n <= 2 * g; ++n)
        t[n] = scaled_trace_from_count(count_points(C, n, exts[n - 1]), n, F);
      FrobeniusData full = lpoly_from_full_counts(C, t);
      check(r, fe_symmetric(full.lcoeffs, q, g));
      check(r, full.lcoeffs == lpoly_from_counts(C, std::vector<int64_t>(t.begin(), t.begin() + g + 1)).lcoeffs);
      std::vector<int64_t> ext_t = full.traces(4 * g);
      bool weil = true;
      for (uint32_t n = 1; n <= 4 * g; ++n) {
        BigInt lhs = BigInt(ext_t[n]) * ext_t[n];
        if (lhs > BigInt(4) * g * g * boost::multiprecision::pow(BigInt(q), n)) weil = false;
      }
      check(r, weil);
      check(r, weil_max_radius_error(full) < 1e-9);
      check(r, lseries_matches(C, full, lfunc_coeffs(C, T)));
      check(r, dirichlet_coeff(C.Q, uint32_t(C.Q.deg()), F) == 0);
    });
  });
}

// Lemma identities for sigma, at one modulus per prime degree plus an
// exhaustive small sweep over all irreducibles
inline SuiteResult charsum_sigma(uint32_t q, uint32_t n_hi = 5, uint32_t alpha_hi = 10) {
  return timed("charsum.sigma", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(alpha_hi, F);
    for (uint32_t n = 1; n <= n_hi; ++n) {
      Poly P = monic_from_lex(n, T.irr[n][0], F);
      Poly P2 = poly_mul(P, P, F);
      for (uint32_t alpha = 0; alpha <= alpha_hi; ++alpha) {
        int64_t closed = sigma_closed(n, alpha, q);
        check(r, sigma_brute(P, alpha, T) == closed);
        if (alpha <= 6) check(r, sigma_brute(P2, alpha, T) == closed);  // sigma depends only on P
      }
    }
    for (uint32_t n = 1; n <= std::min(n_hi, 3u); ++n)
      for (uint32_t lex : T.irr[n]) {
        Poly P = monic_from_lex(n, lex, F);
        for (uint32_t alpha = 0; alpha <= 5; ++alpha)
          check(r, sigma_brute(P, alpha, T) == sigma_closed(n, alpha, q));
      }
  });
}

// S(beta;n): vanishing for beta >= n, dualities, endpoint values
inline SuiteResult charsum_S(uint32_t q, uint32_t n_hi) {
  return timed("charsum.S", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(n_hi + 2, F);
    for (uint32_t n = 1; n <= n_hi; ++n) {
      check(r, S_brute(0, n, T) == int64_t(T.pi[n]));
      for (uint32_t beta = n; beta <= n + 2; ++beta) check(r, S_brute(beta, n, T) == 0);
      for (uint32_t beta = 0; beta < n; ++beta) check(r, S_dual_check(beta, n, T));
      Rational endpoint(S_brute(n - 1, n, T));
      if (n % 2 == 1)
        check(r, endpoint == Rational(int64_t(T.pi[n])) * rational_pow(q, int(n - 1) / 2));
      else
        check(r, endpoint == Rational(-int64_t(T.pi[n])) * rational_pow(q, (int(n) - 2) / 2));
    }
  });
}

// quadratic reciprocity transfer: S(beta;n) vs the Dirichlet coefficients of
// the prime characters
inline SuiteResult charsum_transfer(uint32_t q, uint32_t n_hi = 4, uint32_t beta_hi = 3) {
  return timed("charsum.transfer", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(n_hi, F);
    const bool half_odd = ((q - 1) / 2) & 1;
    for (uint32_t n = 1; n <= n_hi; ++n)
      for (uint32_t beta = 0; beta <= beta_hi; ++beta) {
        int64_t rhs = 0;
        for (uint32_t lex : T.irr[n]) rhs += dirichlet_coeff(monic_from_lex(n, lex, F), beta, F);
        int sign = (half_odd && (beta & 1) && (n & 1)) ? -1 : 1;
        check(r, S_brute(beta, n, T) == sign * rhs);
      }
  });
}

// sieve average against the enumerated mean for every prime power
inline SuiteResult ensemble_sieve(uint32_t q, uint32_t g, uint32_t deg_hi, uint64_t budget = 10'000'000) {
  return timed("ensemble.sieve", [&](SuiteResult& r) {
    FieldCtx F(q);
    IrreducibleTable T = build_irreducible_table(deg_hi, F);
    // prime powers f = P^k of degree <= deg_hi
    std::vector<Poly> fs;
    for (uint32_t d = 1; d <= deg_hi; ++d)
      for (uint32_t lex : T.irr[d]) {
        Poly P = monic_from_lex(d, lex, F);
        Poly f = P;
        while (f.deg() <= int(deg_hi)) {
          fs.push_back(f);
          f = poly_mul(f, P, F);
        }
      }
    for (FamilyKind kind : {FamilyKind::FOdd, FamilyKind::FEven, FamilyKind::Union, FamilyKind::Hg,
                            FamilyKind::HgMonic}) {
      FamilySpec spec{kind, q, g};
      // per-curve symbols once, means for every prime power from them
      std::vector<BigInt> sums(fs.size(), 0);
      uint64_t curves = 0;
      for_each_curve(spec, F, budget, [&](const Curve& C) {
        ++curves;
        for (size_t i = 0; i < fs.size(); ++i) sums[i] += residue_symbol(C.Q, fs[i], F);
      });
      for (size_t i = 0; i < fs.size(); ++i)
        check(r, avg_chi_sieve(fs[i], spec, T) == Rational(sums[i], BigInt(curves)));
    }
  });
}

// odd-n exact vanishing over H_g and the point-count corollary
inline SuiteResult ensemble_odd(uint32_t q, uint32_t g, uint64_t budget = 10'000'000) {
  return timed("ensemble.odd", [&](SuiteResult& r) {
    FieldCtx F(q);
    uint32_t n_hi = std::min(2 * g + 2, 5u);
    IrreducibleTable T = build_irreducible_table(std::max(n_hi, 5u), F);
    ScanOptions opt;
    opt.budget = budget;
    for (uint32_t n : {1u, 3u, 5u}) {
      FamilyAverage A = avg_trace_brute({FamilyKind::Hg, q, g}, n, T, opt);
      check(r, A.avg_scaled == 0);
      check(r, avg_point_count({FamilyKind::Hg, q, g}, n, T, opt) == rational_pow(q, int(n)) + 1);
    }
  });
}

// union average as the cardinality-weighted mixture, hg vs hg-monic, and the
// sieve decomposition resumming to the brute average
inline SuiteResult ensemble_structure(uint32_t q, uint32_t g, uint64_t budget = 10'000'000) {
  return timed("ensemble.structure", [&](SuiteResult& r) {
    FieldCtx F(q);
    uint32_t n_hi = 2 * g + 2;
    IrreducibleTable T = build_irreducible_table(n_hi, F);
    ScanOptions opt;
    opt.budget = budget;
    for (uint32_t n = 1; n <= n_hi; ++n) {
      FamilyAverage odd = avg_trace_brute({FamilyKind::FOdd, q, g}, n, T, opt);
      FamilyAverage even = avg_trace_brute({FamilyKind::FEven, q, g}, n, T, opt);
      FamilyAverage uni = avg_trace_brute({FamilyKind::Union, q, g}, n, T, opt);
      FamilyAverage hg = avg_trace_brute({FamilyKind::Hg, q, g}, n, T, opt);
      FamilyAverage hgm = avg_trace_brute({FamilyKind::HgMonic, q, g}, n, T, opt);
      Rational w = Rational(BigInt(odd.curves) * odd.avg_scaled + BigInt(even.curves) * even.avg_scaled,
                            BigInt(odd.curves + even.curves));
      check(r, uni.avg_scaled == w);
      check(r, hgm.avg_scaled == uni.avg_scaled);
      if (n % 2 == 0)
        check(r, hg.avg_scaled == hgm.avg_scaled);
      else
        check(r, hg.avg_scaled == 0);
      TraceDecomposition D = decompose_avg({FamilyKind::Hg, q, g}, n, T);
      check(r, D.total() == hg.avg_scaled);
      if (n % 2 == 1) check(r, D.square_part == 0);
    }
  });
}

}  // namespace suites

// the full battery at a configured (q, g); degree ranges follow the
// documented invariants and stay within the budget
inline std::vector<SuiteResult> run_verify(uint32_t q, uint32_t g, uint64_t budget = 10'000'000) {
  std::vector<SuiteResult> out;
  out.push_back(suites::ff_character(q));
  out.push_back(suites::ff_extension(q));
  out.push_back(suites::poly_squarefree(q, q <= 3 ? 6 : 5));
  out.push_back(suites::poly_pi(q));
  out.push_back(suites::symbol_euler(q, 4, 3));
  out.push_back(suites::symbol_reciprocity(q, q <= 3 ? 4 : 3));
  out.push_back(suites::curve_routes(q, g, budget));
  out.push_back(suites::curve_lpoly(q, g, budget));
  out.push_back(suites::charsum_sigma(q, 5, q <= 3 ? 10 : 8));
  out.push_back(suites::charsum_S(q, q <= 3 ? 5 : 4));
  out.push_back(suites::charsum_transfer(q, q <= 3 ? 4 : 3, 3));
  out.push_back(suites::ensemble_sieve(q, g, std::min(2 * g + 2, 6u), budget));
  out.push_back(suites::ensemble_odd(q, g, budget));
  out.push_back(suites::ensemble_structure(q, g, budget));
  return out;
}

}  // namespace hz
