#pragma once

// Sieve over all monic polynomials of degree <= D: smallest irreducible
// factor and Mobius value for every one of them, plus per-degree lists of
// the monic irreducibles (so pi_q(n) comes for free).  Built once, then
// immutable; every query is a table lookup or a short division walk.
//
// Global ids enumerate monic polynomials degree-major, lex within a degree:
// id = offset[d] + lex_index.  The unit polynomial has id 0.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperzeta/ff.hpp"
#include "hyperzeta/poly.hpp"

namespace hz {

struct IrreducibleTable {
  FieldCtx F;
  uint32_t max_degree = 0;
  std::vector<uint64_t> offset;               // offset[d], d = 0..D+1
  std::vector<std::vector<uint32_t>> irr;     // lex indices of irreducibles per degree
  std::vector<std::vector<uint32_t>> irr_coeffs;  // flat coefficient arrays, stride d (monic implied)
  std::vector<uint64_t> pi;                   // pi[d] = number of monic irreducibles of degree d
  std::vector<int8_t> mu_tab;                 // by global id
  std::vector<uint32_t> spf_tab;              // global id of the smallest irreducible factor; 0 = none/unit

  uint64_t global_id(const Poly& f) const {
    if (!f.is_monic()) throw std::invalid_argument("global_id: polynomial must be monic");
    if (f.deg() > int(max_degree)) throw std::out_of_range("global_id: degree exceeds table");
    return offset[f.deg()] + lex_index(f, F);
  }
  Poly poly_from_id(uint64_t id) const {
    uint32_t d = 0;
    while (d + 1 <= max_degree && offset[d + 1] <= id) ++d;
    return monic_from_lex(d, id - offset[d], F);
  }
  uint32_t degree_of_id(uint64_t id) const {
    uint32_t d = 0;
    while (d + 1 <= max_degree && offset[d + 1] <= id) ++d;
    return d;
  }
};

inline IrreducibleTable build_irreducible_table(uint32_t D, const FieldCtx& F,
                                                uint64_t id_cap = 60'000'000) {
  if (D < 1) throw std::invalid_argument("build_irreducible_table: D must be >= 1");
  IrreducibleTable T{F};
  T.max_degree = D;
  T.offset.assign(D + 2, 0);
  for (uint32_t d = 0; d <= D; ++d) {
    uint64_t cnt = monic_count(d, F);
    T.offset[d + 1] = T.offset[d] + cnt;
    if (T.offset[d + 1] > id_cap) throw std::length_error("build_irreducible_table: table exceeds id cap");
  }
  const uint64_t total = T.offset[D + 1];
  if (total > 0xFFFFFFFFull) throw std::length_error("build_irreducible_table: ids exceed 32 bits");
  T.irr.assign(D + 1, {});
  T.irr_coeffs.assign(D + 1, {});
  T.pi.assign(D + 1, 0);
  T.mu_tab.assign(total, 0);
  T.spf_tab.assign(total, 0);
  T.mu_tab[0] = 1;  // mu(1) = 1

  std::vector<uint32_t> irr_ids;  // all irreducible ids, ascending
  std::vector<uint32_t> digits(D + 1);
  std::vector<uint32_t> pdig(D + 1);
  std::vector<uint64_t> conv(2 * D + 1);

  for (uint64_t m = 1; m < total; ++m) {
    uint32_t dm = T.degree_of_id(m);
    if (T.spf_tab[m] == 0) {  // untouched by any smaller factor: irreducible
      T.spf_tab[m] = uint32_t(m);
      T.mu_tab[m] = -1;
      uint32_t lex = uint32_t(m - T.offset[dm]);
      T.irr[dm].push_back(lex);
      Poly P = monic_from_lex(dm, lex, F);
      for (uint32_t i = 0; i < dm; ++i) T.irr_coeffs[dm].push_back(P.c[i]);
      irr_ids.push_back(uint32_t(m));
    }
    // mark P*m for every irreducible P <= spf(m); each composite is hit once
    {
      uint64_t mlex = m - T.offset[dm];
      for (uint32_t i = 0; i < dm; ++i) {
        digits[dm - 1 - i] = uint32_t(mlex % F.q);
        mlex /= F.q;
      }
      digits[dm] = 1;
      for (uint32_t pid : irr_ids) {
        if (pid > T.spf_tab[m]) break;
        uint32_t dp = T.degree_of_id(pid);
        if (dp + dm > D) break;  // irr_ids ascends degree-major, nothing later fits either
        uint64_t plex = pid - T.offset[dp];
        for (uint32_t i = 0; i < dp; ++i) {
          pdig[dp - 1 - i] = uint32_t(plex % F.q);
          plex /= F.q;
        }
        pdig[dp] = 1;
        uint32_t dn = dp + dm;
        for (uint32_t i = 0; i <= dn; ++i) conv[i] = 0;
        for (uint32_t i = 0; i <= dp; ++i)
          if (pdig[i])
            for (uint32_t j = 0; j <= dm; ++j) conv[i + j] += uint64_t(pdig[i]) * digits[j];
        uint64_t nlex = 0;
        for (uint32_t i = 0; i < dn; ++i) nlex = nlex * F.q + uint32_t(conv[i] % F.q);
        uint64_t nid = T.offset[dn] + nlex;
        T.spf_tab[nid] = pid;
        T.mu_tab[nid] = (pid == T.spf_tab[m]) ? 0 : int8_t(-T.mu_tab[m]);
      }
    }
  }
  for (uint32_t d = 1; d <= D; ++d) T.pi[d] = T.irr[d].size();
  return T;
}

// Mobius function of a monic polynomial
inline int mobius(const Poly& f, const IrreducibleTable& T) {
  return T.mu_tab[T.global_id(f)];
}

// von Mangoldt: deg P when f = P^k, else 0
inline uint32_t von_mangoldt(const Poly& f, const IrreducibleTable& T) {
  uint64_t id = T.global_id(f);
  if (id == 0) return 0;
  uint64_t pid = T.spf_tab[id];
  Poly P = T.poly_from_id(pid);
  Poly g = f;
  while (g.deg() > 0) {
    auto [quo, rem] = poly_divrem(g, P, T.F);
    if (!rem.is_zero()) return 0;
    g = quo;
  }
  return uint32_t(P.deg());
}

// number of monic B of degree beta with P not dividing B, times (q-1) when
// not-necessarily-monic B are wanted
inline uint64_t count_coprime_B(uint32_t beta, const Poly& P, bool monic, const FieldCtx& F) {
  uint64_t cnt = monic_count(beta, F);
  if (P.deg() >= 1 && uint32_t(P.deg()) <= beta) cnt -= monic_count(beta - P.deg(), F);
  return monic ? cnt : cnt * (F.q - 1);
}

}  // namespace hz
