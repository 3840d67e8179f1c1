#pragma once

// Jacobi-style quadratic residue symbol (D/f) for F_q[x], f monic of
// positive degree, D arbitrary (not necessarily monic, possibly constant or
// zero).  Computed without factoring either argument:
//
//   * reduce D mod f,
//   * peel the leading coefficient c with (c/f) = chi_base(c)^{deg f},
//   * swap by monic reciprocity (A/B) = (-1)^{((q-1)/2) deg A deg B} (B/A).
//
// The loop returns 0 exactly when gcd(D,f) has positive degree.

#include <cstdint>
#include <stdexcept>

#include "hyperzeta/ff.hpp"
#include "hyperzeta/poly.hpp"

namespace hz {

namespace detail {
constexpr int kSymCap = 64;  // max coefficients per operand

// lengths are deg+1; both buffers are clobbered
inline int residue_symbol_loop(uint32_t* D, int dn, uint32_t* f, int fn, const FieldCtx& F) {
  int sign = 1;
  const bool half_odd = ((F.q - 1) / 2) & 1;
  for (;;) {
    // D mod f (f monic)
    for (int i = dn - 1; i >= fn - 1; --i) {
      uint32_t c = D[i];
      if (!c) continue;
      D[i] = 0;
      for (int j = 0; j < fn - 1; ++j) D[i - fn + 1 + j] = F.sub(D[i - fn + 1 + j], F.mul(c, f[j]));
    }
    if (dn > fn - 1) dn = fn - 1;
    while (dn > 0 && D[dn - 1] == 0) --dn;
    if (dn == 0) return 0;

    uint32_t lead = D[dn - 1];
    if ((fn - 1) & 1) sign *= F.chi[lead];
    if (dn == 1) return sign;
    if (lead != 1) {
      uint32_t linv = F.inv[lead];
      for (int i = 0; i < dn; ++i) D[i] = F.mul(D[i], linv);
    }
    if (half_odd && ((dn - 1) & 1) && ((fn - 1) & 1)) sign = -sign;
    uint32_t* tp = D;
    D = f;
    f = tp;
    int tn = dn;
    dn = fn;
    fn = tn;
  }
}
}  // namespace detail

inline int residue_symbol(const Poly& D, const Poly& f, const FieldCtx& F) {
  if (!f.is_monic() || f.deg() < 1)
    throw std::invalid_argument("residue_symbol: lower argument must be monic of degree >= 1");
  if (D.deg() >= detail::kSymCap || f.deg() >= detail::kSymCap)
    throw std::invalid_argument("residue_symbol: degree exceeds buffer");
  if (D.is_zero()) return 0;
  uint32_t db[detail::kSymCap], fb[detail::kSymCap];
  int dn = D.deg() + 1, fn = f.deg() + 1;
  for (int i = 0; i < dn; ++i) db[i] = D.c[i];
  for (int i = 0; i < fn; ++i) fb[i] = f.c[i];
  return detail::residue_symbol_loop(db, dn, fb, fn, F);
}

}  // namespace hz
