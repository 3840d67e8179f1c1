#pragma once

// The standalone character sums: sigma(f;alpha), its closed form for prime
// powers, the double sums S(beta;n) over irreducibles and monic B, their
// exact dualities, and the main-term evaluators.  Only exact identities are
// asserted anywhere; asymptotic statements surface as residual reports.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperzeta/irreducible_table.hpp"
#include "hyperzeta/poly.hpp"
#include "hyperzeta/rational.hpp"
#include "hyperzeta/residue_symbol.hpp"

namespace hz {

// sum of mu(A) over monic A of degree alpha coprime to f
inline int64_t sigma_brute(const Poly& f, uint32_t alpha, const IrreducibleTable& T) {
  if (alpha > T.max_degree) throw std::out_of_range("sigma_brute: alpha exceeds table");
  if (alpha == 0) return 1;
  int64_t acc = 0;
  uint64_t base = T.offset[alpha];
  uint64_t idx = 0;
  for_each_monic(alpha, T.F, [&](const Poly& A) {
    int8_t m = T.mu_tab[base + idx];
    ++idx;
    if (m == 0) return;
    if (poly_gcd(A, f, T.F).deg() > 0) return;
    acc += m;
  });
  return acc;
}

// sigma_n(alpha) for a prime-power modulus whose prime has degree n
inline int64_t sigma_closed(uint32_t n, uint32_t alpha, uint32_t q) {
  if (n < 1) throw std::invalid_argument("sigma_closed: n must be >= 1");
  if (n == 1) return alpha == 0 ? 1 : 1 - int64_t(q);
  if (alpha % n == 0) return 1;
  if (alpha % n == 1) return -int64_t(q);
  return 0;
}

// S(beta;n) = sum over irreducible P of degree n and monic B of degree beta
// of (B/P)
inline int64_t S_brute(uint32_t beta, uint32_t n, const IrreducibleTable& T) {
  if (n < 1 || n > T.max_degree) throw std::out_of_range("S_brute: n exceeds table");
  uint32_t bb[detail::kSymCap], pb[detail::kSymCap];
  if (int(beta) >= detail::kSymCap) throw std::invalid_argument("S_brute: beta exceeds buffer");
  int64_t acc = 0;
  const auto& coeffs = T.irr_coeffs[n];
  for (size_t p = 0; p < T.irr[n].size(); ++p) {
    for_each_monic(beta, T.F, [&](const Poly& B) {
      for (uint32_t i = 0; i <= beta; ++i) bb[i] = B.c[i];
      for (uint32_t i = 0; i < n; ++i) pb[i] = coeffs[p * n + i];
      pb[n] = 1;
      acc += detail::residue_symbol_loop(bb, int(beta) + 1, pb, int(n) + 1, T.F);
    });
  }
  return acc;
}

// exact duality: for n odd S(beta;n) = q^{beta-(n-1)/2} S(n-1-beta;n); for n
// even S(beta;n) = q^{beta-n/2} (-S(n-1-beta;n) + (q-1) sum_{j<=n-beta-2} S(j;n))
inline bool S_dual_check(uint32_t beta, uint32_t n, const IrreducibleTable& T) {
  if (beta > n - 1) throw std::out_of_range("S_dual_check: beta out of range");
  Rational lhs(S_brute(beta, n, T));
  if (n % 2 == 1) {
    Rational rhs = rational_pow(T.F.q, int(beta) - int(n - 1) / 2) * S_brute(n - 1 - beta, n, T);
    return lhs == rhs;
  }
  Rational inner(-S_brute(n - 1 - beta, n, T));
  for (uint32_t j = 0; j + beta + 2 <= n; ++j) inner += Rational(int64_t(T.F.q) - 1) * S_brute(j, n, T);
  return lhs == rational_pow(T.F.q, int(beta) - int(n) / 2) * inner;
}

// main term of S(beta;n) for beta < n: pi_q(n) q^{beta/2} for even beta
// (minus eta_n q^{beta-n/2} pi_q(n)), zero for odd beta
inline Rational S_main_term(uint32_t beta, uint32_t n, const IrreducibleTable& T) {
  if (beta >= n) throw std::out_of_range("S_main_term: requires beta < n");
  if (n > T.max_degree) throw std::out_of_range("S_main_term: n exceeds table");
  if (beta % 2 == 1) return Rational(0);
  Rational pi(int64_t(T.pi[n]));
  if (beta == 0) return pi;
  Rational main = pi * rational_pow(T.F.q, int(beta) / 2);
  if (n % 2 == 0) main -= pi * rational_pow(T.F.q, int(beta) - int(n) / 2);
  return main;
}

struct CharSumRecord {
  uint32_t q = 0;
  uint32_t n = 0;
  uint32_t beta = 0;
  int64_t value = 0;
  Rational main_term;
  int eta_n = 0;
  int eta_beta = 0;
};

inline CharSumRecord charsum_record(uint32_t beta, uint32_t n, const IrreducibleTable& T) {
  CharSumRecord r;
  r.q = T.F.q;
  r.n = n;
  r.beta = beta;
  r.value = S_brute(beta, n, T);
  r.main_term = beta < n ? S_main_term(beta, n, T) : Rational(0);
  r.eta_n = n % 2 == 0;
  r.eta_beta = beta % 2 == 0;
  return r;
}

}  // namespace hz
