#pragma once

// Families of curves and their exact trace statistics.
//
//   f-odd     monic squarefree Q of degree 2g+1
//   f-even    monic squarefree Q of degree 2g+2
//   union     monic squarefree Q of degree 2g+1 or 2g+2
//   hg        squarefree Q of degree 2g+1 or 2g+2, any nonzero leading coeff
//   hg-monic  the monic slice of hg (same set as union, reported separately)
//
// Averages of the scaled trace t_n are exact rationals; the same expectation
// is also computed by the Mobius sieve without enumerating squarefree Q, and
// the two must agree bit-exactly.  Enumeration order: degree ascending, then
// monic polynomials in lex order, then the leading scalar 1..q-1 for hg.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperzeta/charsum.hpp"
#include "hyperzeta/curve.hpp"
#include "hyperzeta/ext_field.hpp"
#include "hyperzeta/irreducible_table.hpp"
#include "hyperzeta/parallel.hpp"
#include "hyperzeta/poly.hpp"
#include "hyperzeta/rational.hpp"

namespace hz {

struct BudgetError : std::runtime_error {
  explicit BudgetError(const std::string& m) : std::runtime_error(m) {}
};

enum class FamilyKind { FOdd, FEven, Union, Hg, HgMonic };

inline const char* family_label(FamilyKind k) {
  switch (k) {
    case FamilyKind::FOdd: return "f-odd";
    case FamilyKind::FEven: return "f-even";
    case FamilyKind::Union: return "union";
    case FamilyKind::Hg: return "hg";
    case FamilyKind::HgMonic: return "hg-monic";
  }
  return "?";
}

struct FamilySpec {
  FamilyKind kind;
  uint32_t q;
  uint32_t g;
};

inline std::vector<uint32_t> family_degrees(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKind::FOdd: return {2 * s.g + 1};
    case FamilyKind::FEven: return {2 * s.g + 2};
    default: return {2 * s.g + 1, 2 * s.g + 2};
  }
}

inline bool family_all_leads(const FamilySpec& s) { return s.kind == FamilyKind::Hg; }

inline uint64_t family_size(const FamilySpec& s) {
  uint64_t n = 0;
  for (uint32_t d : family_degrees(s)) n += squarefree_count(d, s.q);
  if (family_all_leads(s)) n *= (s.q - 1);
  return n;
}

// monic candidates scanned (times q-1 leading scalars for hg)
inline uint64_t candidate_count(const FamilySpec& s) {
  uint64_t n = 0;
  FieldCtx F(s.q);
  for (uint32_t d : family_degrees(s)) n += monic_count(d, F);
  if (family_all_leads(s)) n *= (s.q - 1);
  return n;
}

inline void check_budget(const FamilySpec& s, uint64_t budget) {
  uint64_t c = candidate_count(s);
  if (c > budget)
    throw BudgetError("family scan of " + std::to_string(c) + " candidates exceeds budget " +
                      std::to_string(budget) + " (" + family_label(s.kind) + ", q=" + std::to_string(s.q) +
                      ", g=" + std::to_string(s.g) + ")");
}

// visit every curve of the family once, deterministic order
template <class Fn>
inline void for_each_curve(const FamilySpec& s, const FieldCtx& F, uint64_t budget, Fn&& fn) {
  check_budget(s, budget);
  const uint32_t leads = family_all_leads(s) ? F.q - 1 : 1;
  for (uint32_t d : family_degrees(s)) {
    for_each_monic(d, F, [&](const Poly& M) {
      if (!is_squarefree(M, F)) return;
      for (uint32_t a = 1; a <= leads; ++a) {
        Curve C;
        C.q = F.q;
        C.g = s.g;
        C.Q = (a == 1) ? M : poly_scale(M, a, F);
        C.lambda = (d % 2 == 1) ? 0 : chi_base(a, F);
        fn(static_cast<const Curve&>(C));
      }
    });
  }
}

inline std::vector<Curve> enumerate_family(const FamilySpec& s, const FieldCtx& F, uint64_t budget = 10'000'000) {
  std::vector<Curve> out;
  out.reserve(family_size(s));
  for_each_curve(s, F, budget, [&](const Curve& C) { out.push_back(C); });
  return out;
}

// ---- brute-force family averages ------------------------------------------

struct ScanOptions {
  unsigned workers = 1;
  uint64_t budget = 10'000'000;
  uint32_t check_stride = 97;  // 0 disables the count-route cross-check
};

struct TraceSums {
  std::vector<BigInt> acc;  // index n
  uint64_t curves = 0;
};

// sums of t_n over the family for all n <= n_max, partitioned over workers by
// monic candidate index; the per-curve route is the character sum, with every
// check_stride-th curve cross-checked against an independent point count
inline TraceSums family_trace_sums(const FamilySpec& s, uint32_t n_max, const IrreducibleTable& T,
                                   const ScanOptions& opt) {
  check_budget(s, opt.budget);
  const FieldCtx& F = T.F;
  if (n_max > T.max_degree) throw std::out_of_range("family_trace_sums: n_max exceeds table");

  // extension contexts for the cross-check route
  std::vector<ExtFieldCtx> exts;
  uint32_t check_n_max = 0;
  if (opt.check_stride > 0) {
    check_n_max = std::min(n_max, 2 * s.g + 2);
    uint64_t sz = 1;
    for (uint32_t n = 1; n <= check_n_max; ++n) {
      if (sz > (uint64_t(1) << 22) / F.q) {
        check_n_max = n - 1;
        break;
      }
      sz *= F.q;
    }
    exts.reserve(check_n_max);
    for (uint32_t n = 1; n <= check_n_max; ++n) exts.push_back(build_extension(n, F, 2 * s.g + 2));
  }

  const std::vector<uint32_t> degs = family_degrees(s);
  std::vector<uint64_t> deg_base(degs.size() + 1, 0);
  for (size_t i = 0; i < degs.size(); ++i) deg_base[i + 1] = deg_base[i] + monic_count(degs[i], F);
  const uint64_t total = deg_base.back();
  const uint32_t leads = family_all_leads(s) ? F.q - 1 : 1;

  struct Local {
    std::vector<int64_t> acc;
    uint64_t curves = 0;
  };
  auto chunk = [&](uint64_t lo, uint64_t hi) {
    Local L;
    L.acc.assign(n_max + 1, 0);
    for (uint64_t idx = lo; idx < hi; ++idx) {
      size_t di = 0;
      while (idx >= deg_base[di + 1]) ++di;
      uint32_t d = degs[di];
      Poly M = monic_from_lex(d, idx - deg_base[di], F);
      if (!is_squarefree(M, F)) continue;
      for (uint32_t a = 1; a <= leads; ++a) {
        Curve C;
        C.q = F.q;
        C.g = s.g;
        C.Q = (a == 1) ? M : poly_scale(M, a, F);
        C.lambda = (d % 2 == 1) ? 0 : chi_base(a, F);
        std::vector<int64_t> t = traces_character_sum(C, n_max, T);
        for (uint32_t n = 1; n <= n_max; ++n) L.acc[n] += t[n];
        ++L.curves;
        if (opt.check_stride > 0 && (idx * leads + (a - 1)) % opt.check_stride == 0) {
          for (uint32_t n = 1; n <= check_n_max; ++n) {
            int64_t tc = scaled_trace_from_count(count_points(C, n, exts[n - 1]), n, F);
            if (tc != t[n])
              throw std::logic_error("family scan cross-check failed at Q=" + poly_to_string(C.Q) +
                                     " n=" + std::to_string(n));
          }
        }
      }
    }
    return L;
  };
  Local merged = parallel_reduce<Local>(
      total, opt.workers, chunk, [&](Local& a, const Local& b) {
        for (uint32_t n = 0; n <= n_max; ++n) a.acc[n] += b.acc[n];
        a.curves += b.curves;
      });

  TraceSums R;
  R.acc.assign(n_max + 1, BigInt(0));
  for (uint32_t n = 0; n <= n_max; ++n) R.acc[n] = merged.acc[n];
  R.curves = merged.curves;
  if (R.curves != family_size(s)) throw std::logic_error("family scan produced wrong cardinality");
  return R;
}

struct FamilyAverage {
  FamilySpec spec;
  uint32_t n = 0;
  Rational avg_scaled;  // exact mean of t_n over the family
  uint64_t curves = 0;
};

inline FamilyAverage avg_trace_brute(const FamilySpec& s, uint32_t n, const IrreducibleTable& T,
                                     const ScanOptions& opt = {}) {
  TraceSums sums = family_trace_sums(s, n, T, opt);
  FamilyAverage A;
  A.spec = s;
  A.n = n;
  A.curves = sums.curves;
  A.avg_scaled = Rational(sums.acc[n], BigInt(sums.curves));
  return A;
}

// mean point count over the family: q^n + 1 - <t_n>
inline Rational avg_point_count(const FamilySpec& s, uint32_t n, const IrreducibleTable& T,
                                const ScanOptions& opt = {}) {
  FamilyAverage A = avg_trace_brute(s, n, T, opt);
  return rational_pow(s.q, int(n)) + 1 - A.avg_scaled;
}

// ---- Mobius-sieve averages -------------------------------------------------

namespace detail {
// factor a prime power f = P^k; throws if f is not one
inline std::pair<Poly, uint32_t> prime_power_split(const Poly& f, const IrreducibleTable& T) {
  if (!f.is_monic() || f.deg() < 1) throw std::invalid_argument("prime power expected (monic, degree >= 1)");
  uint64_t id = T.global_id(f);
  Poly P = T.poly_from_id(T.spf_tab[id]);
  Poly g = f;
  uint32_t k = 0;
  while (g.deg() > 0) {
    auto [quo, rem] = poly_divrem(g, P, T.F);
    if (!rem.is_zero()) throw std::invalid_argument("avg_chi_sieve: f is not a prime power");
    g = quo;
    ++k;
  }
  return {P, k};
}

// sum of (B/P)^k over monic B of degree beta
inline int64_t b_symbol_sum(const Poly& P, uint32_t k, uint32_t beta, const FieldCtx& F) {
  uint32_t bb[kSymCap], pb[kSymCap];
  if (int(beta) >= kSymCap) throw std::invalid_argument("b_symbol_sum: beta exceeds buffer");
  int64_t acc = 0;
  const int pn = P.deg() + 1;
  for_each_monic(beta, F, [&](const Poly& B) {
    for (uint32_t i = 0; i <= beta; ++i) bb[i] = B.c[i];
    for (int i = 0; i < pn; ++i) pb[i] = P.c[i];
    int s = residue_symbol_loop(bb, int(beta) + 1, pb, pn, F);
    acc += (k & 1) ? s : (s ? 1 : 0);
  });
  return acc;
}
}  // namespace detail

// <chi_Q(f)> over the family, computed by the squarefree sieve instead of
// enumerating Q: sum over 2 alpha + beta = d of sigma(f;alpha) times the
// B-side character sum, with the extra factor sum over leading scalars
// (a/f) = q-1 or 0 by the parity of deg f when all leads are allowed
inline Rational avg_chi_sieve(const Poly& f, const FamilySpec& s, const IrreducibleTable& T) {
  auto [P, k] = detail::prime_power_split(f, T);
  const uint32_t q = T.F.q;
  if (family_all_leads(s) && f.deg() % 2 == 1) return Rational(0);
  BigInt acc = 0;
  for (uint32_t d : family_degrees(s)) {
    for (uint32_t alpha = 0; 2 * alpha <= d; ++alpha) {
      int64_t sig = sigma_closed(uint32_t(P.deg()), alpha, q);
      if (sig == 0) continue;
      uint32_t beta = d - 2 * alpha;
      acc += BigInt(sig) * detail::b_symbol_sum(P, k, beta, T.F);
    }
  }
  if (family_all_leads(s)) acc *= (q - 1);
  return Rational(acc, BigInt(family_size(s)));
}

// mean of lambda_Q^n over the family, in closed form
inline Rational avg_lambda_pow(const FamilySpec& s, uint32_t n) {
  const uint32_t q = s.q;
  switch (s.kind) {
    case FamilyKind::FOdd: return Rational(0);
    case FamilyKind::FEven: return Rational(1);
    case FamilyKind::Union:
    case FamilyKind::HgMonic: return Rational(q, q + 1);
    case FamilyKind::Hg: return n % 2 == 0 ? Rational(q, q + 1) : Rational(0);
  }
  return Rational(0);
}

struct TraceDecomposition {
  Rational lambda_part;  // -<lambda^n>
  Rational prime_part;   // f = P, deg P = n
  Rational square_part;  // f = P^k, k even
  Rational higher_part;  // f = P^k, k odd >= 3
  Rational total() const { return lambda_part + prime_part + square_part + higher_part; }
};

// exact decomposition of <t_n> into the lambda term and the prime, even
// prime-power and higher odd prime-power contributions, all via the sieve
inline TraceDecomposition decompose_avg(const FamilySpec& s, uint32_t n, const IrreducibleTable& T) {
  if (n < 1 || n > T.max_degree) throw std::out_of_range("decompose_avg: n exceeds table");
  TraceDecomposition D;
  D.lambda_part = -avg_lambda_pow(s, n);
  for (uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    uint32_t k = n / d;
    Rational bucket(0);
    for (size_t p = 0; p < T.irr[d].size(); ++p) {
      Poly P = monic_from_lex(d, T.irr[d][p], T.F);
      Poly f = poly_one();
      for (uint32_t i = 0; i < k; ++i) f = poly_mul(f, P, T.F);
      bucket -= Rational(int64_t(d)) * avg_chi_sieve(f, s, T);
    }
    if (k == 1)
      D.prime_part += bucket;
    else if (k % 2 == 0)
      D.square_part += bucket;
    else
      D.higher_part += bucket;
  }
  return D;
}

// ---- theorem main terms and the RMT reference ------------------------------

// sum over monic irreducible P with deg P | n/2 (optionally excluding
// deg P = 1) of deg P / (|P| + 1), exact
inline Rational prime_sum_term(uint32_t n, bool exclude_deg1, const IrreducibleTable& T) {
  if (n % 2) return Rational(0);
  Rational acc(0);
  for (uint32_t d = 1; d <= n / 2; ++d) {
    if ((n / 2) % d) continue;
    if (exclude_deg1 && d == 1) continue;
    if (d > T.max_degree) throw std::out_of_range("prime_sum_term: table too small");
    BigInt card = boost::multiprecision::pow(BigInt(T.F.q), d);
    acc += Rational(BigInt(T.pi[d]) * d, card + 1);
  }
  return acc;
}

// the applicable theorem's non-error terms for <t_n> (scaled units), with a
// label naming the case branch
inline std::pair<Rational, std::string> main_term(const FamilySpec& s, uint32_t n, const IrreducibleTable& T) {
  const uint32_t q = s.q, g = s.g;
  const bool even = n % 2 == 0;
  Rational qn2 = even ? rational_pow(q, int(n) / 2) : Rational(0);  // used by even branches only
  switch (s.kind) {
    case FamilyKind::FOdd: {
      Rational r = even ? prime_sum_term(n, false, T) : Rational(0);
      if (n < 2 * g) return {r - (even ? qn2 : Rational(0)), even ? "even:n<2g" : "odd:n<2g"};
      if (n == 2 * g) return {r - rational_pow(q, int(n) / 2) * Rational(q, q - 1), "n=2g"};
      return {r, even ? "even:n>2g" : "odd:n>2g"};
    }
    case FamilyKind::FEven: {
      Rational r = Rational(-1) + (even ? prime_sum_term(n, false, T) : Rational(0));
      if (n < 2 * g + 1) return {r - (even ? qn2 : Rational(0)), even ? "even:n<2g+1" : "odd:n<2g+1"};
      if (n == 2 * g + 1) return {r + rational_pow(q, (int(n) + 1) / 2) / Rational(int64_t(q) - 1), "n=2g+1"};
      return {r, even ? "even:n>2g+1" : "odd:n>2g+1"};
    }
    case FamilyKind::Union:
    case FamilyKind::HgMonic: {
      Rational r = Rational(-int64_t(q), q + 1) + (even ? prime_sum_term(n, false, T) : Rational(0));
      if (n < 2 * g) return {r - (even ? qn2 : Rational(0)), even ? "even:n<2g" : "odd:n<2g"};
      if (n == 2 * g)
        return {r - rational_pow(q, int(n) / 2) * Rational(BigInt(q) * q, BigInt(q) * q - 1), "n=2g"};
      if (n == 2 * g + 1)
        return {r + rational_pow(q, (int(n) + 3) / 2) / Rational(BigInt(q) * q - 1), "n=2g+1"};
      return {r, even ? "even:n>2g+1" : "odd:n>2g+1"};
    }
    case FamilyKind::Hg: {
      if (!even) return {Rational(0), "odd-exact"};
      Rational r = prime_sum_term(n, true, T);
      if (n < 2 * g) return {r - qn2, "even:n<2g"};
      if (n == 2 * g) return {r - qn2 * Rational(BigInt(q) * q, BigInt(q) * q - 1), "even:n=2g"};
      return {r, "even:n>2g"};
    }
  }
  return {Rational(0), "?"};
}

// Haar expectation of tr(U^n) over USp(2g)
inline int rmt_value(uint32_t n, uint32_t g) { return (n % 2 == 0 && n <= 2 * g) ? -1 : 0; }

}  // namespace hz
