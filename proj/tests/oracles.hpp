#pragma once

// Brute-force oracles for the tests.  Everything here works on Poly
// representatives with the plain ring operations, independent of the packed
// extension-field arithmetic, the sieve tables and the reciprocity loop that
// the library uses.

#include <cstdint>
#include <map>
#include <vector>

#include "hyperzeta/ext_field.hpp"
#include "hyperzeta/ff.hpp"
#include "hyperzeta/poly.hpp"

namespace oracles {

using namespace hz;

// all residues mod m of degree < deg m, in lex-index order
inline std::vector<Poly> residues_mod(const Poly& m, const FieldCtx& F) {
  uint32_t d = uint32_t(m.deg());
  uint64_t total = 1;
  for (uint32_t i = 0; i < d; ++i) total *= F.q;
  std::vector<Poly> out;
  out.reserve(total);
  for (uint64_t idx = 0; idx < total; ++idx) {
    std::vector<uint32_t> c(d, 0);
    uint64_t v = idx;
    for (uint32_t i = 0; i < d; ++i) {
      c[i] = uint32_t(v % F.q);
      v /= F.q;
    }
    out.emplace_back(std::move(c));
  }
  return out;
}

// chi on F_q[x]/(m) by enumerating squares with plain poly arithmetic
inline std::map<std::vector<uint32_t>, int> ext_chi_by_squares(const Poly& m, const FieldCtx& F) {
  std::map<std::vector<uint32_t>, int> chi;
  auto key = [&](const Poly& p) {
    std::vector<uint32_t> k(m.deg(), 0);
    for (int i = 0; i <= p.deg(); ++i) k[i] = p.c[i];
    return k;
  };
  for (const Poly& z : residues_mod(m, F)) chi[key(z)] = z.is_zero() ? 0 : -1;
  for (const Poly& z : residues_mod(m, F)) {
    if (z.is_zero()) continue;
    chi[key(poly_mod(poly_mul(z, z, F), m, F))] = 1;
  }
  return chi;
}

// Q evaluated at a residue class, all mod m
inline Poly poly_eval_poly(const Poly& Q, const Poly& x, const Poly& m, const FieldCtx& F) {
  Poly acc;
  for (size_t i = Q.c.size(); i-- > 0;) {
    acc = poly_mod(poly_mul(acc, x, F), m, F);
    acc = poly_add(acc, Poly({Q.c[i]}), F);
  }
  return acc;
}

// affine solutions of y^2 = Q(x) over F_q[x]/(m) by the double loop
inline uint64_t affine_count_slow(const Poly& Q, const Poly& m, const FieldCtx& F) {
  std::vector<Poly> elems = residues_mod(m, F);
  uint64_t cnt = 0;
  for (const Poly& x : elems) {
    Poly qx = poly_eval_poly(Q, x, m, F);
    for (const Poly& y : elems)
      if (poly_mod(poly_mul(y, y, F), m, F) == qx) ++cnt;
  }
  return cnt;
}

// monic irreducibility by trial division over every monic of degree <= d/2
inline bool irreducible_slow(const Poly& f, const FieldCtx& F) {
  if (f.deg() < 1) return false;
  for (uint32_t d = 1; 2 * d <= uint32_t(f.deg()); ++d) {
    bool divisible = false;
    for_each_monic(d, F, [&](const Poly& g) {
      if (!divisible && poly_mod(f, g, F).is_zero()) divisible = true;
    });
    if (divisible) return false;
  }
  return true;
}

// simple deterministic generator for property-style sampling
struct XorShift {
  uint64_t s;
  explicit XorShift(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  uint64_t below(uint64_t n) { return next() % n; }
};

}  // namespace oracles
