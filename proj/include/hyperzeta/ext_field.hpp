#pragma once

// Extension fields F_{q^n} = F_q[x]/(m) with a deterministic modulus: the
// lexicographically smallest monic irreducible of degree n (for n = 1 this
// is x).  Elements are stored packed as base-q integers, digit i holding the
// coefficient of x^i in the degree-<n representative.
//
// Construction also builds the tables the point-counting scans live on:
//   * the quadratic-character table over all of F_{q^n} (filled by marking
//     squares, so it is an independent check on chi_ext's Euler powering),
//   * Frobenius orbits of F_{q^n} under z -> z^q, with one representative
//     and the orbit size (a polynomial with F_q coefficients takes the same
//     character value on a whole orbit),
//   * powers rep^k, k <= max_power, for fast evaluation of small curves.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hyperzeta/ff.hpp"
#include "hyperzeta/poly.hpp"

namespace hz {

struct ExtElem {
  std::vector<uint32_t> coeffs;  // length n, entries in [0,q)
};

namespace detail {
constexpr int kMaxExtDeg = 16;

// monic irreducibles of degree <= m, by trial division bootstrap
inline std::vector<Poly> small_irreducibles(uint32_t m, const FieldCtx& F) {
  std::vector<Poly> irr;
  for (uint32_t d = 1; d <= m; ++d) {
    for_each_monic(d, F, [&](const Poly& p) {
      for (const Poly& P : irr) {
        if (uint32_t(P.deg()) * 2 > d) break;
        if (poly_mod(p, P, F).is_zero()) return;
      }
      irr.push_back(p);
    });
  }
  return irr;
}
}  // namespace detail

struct ExtFieldCtx {
  FieldCtx base;
  uint32_t n = 0;
  Poly modulus;    // monic irreducible of degree n
  uint64_t card = 0;  // q^n
  uint32_t max_power = 0;

  std::vector<int8_t> chi_tab;  // quadratic character by packed index
  struct Orbit {
    uint32_t rep;
    uint32_t size;
  };
  std::vector<Orbit> orbits;
  std::vector<uint32_t> rep_pow;  // digits of rep^k: [(orbit*(max_power+1)+k)*n + digit]

  ExtFieldCtx(const FieldCtx& F, uint32_t n_, uint32_t max_power_, uint64_t table_cap);

  // packed-index arithmetic
  void unpack(uint64_t idx, uint32_t* d) const {
    for (uint32_t i = 0; i < n; ++i) {
      d[i] = uint32_t(idx % base.q);
      idx /= base.q;
    }
  }
  uint64_t pack(const uint32_t* d) const {
    uint64_t idx = 0;
    for (uint32_t i = n; i-- > 0;) idx = idx * base.q + d[i];
    return idx;
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint32_t x[detail::kMaxExtDeg], y[detail::kMaxExtDeg];
    unpack(a, x);
    unpack(b, y);
    for (uint32_t i = 0; i < n; ++i) x[i] = base.add(x[i], y[i]);
    return pack(x);
  }
  uint64_t mul(uint64_t a, uint64_t b) const {
    uint32_t x[detail::kMaxExtDeg], y[detail::kMaxExtDeg], z[detail::kMaxExtDeg];
    unpack(a, x);
    unpack(b, y);
    mul_digits(x, y, z);
    return pack(z);
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = embed(1), b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  uint64_t embed(uint32_t a) const { return a; }  // digit 0 carries the base element

  // z = x*y mod modulus, all as digit arrays of length n
  void mul_digits(const uint32_t* x, const uint32_t* y, uint32_t* z) const {
    uint64_t acc[2 * detail::kMaxExtDeg] = {0};
    for (uint32_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (uint32_t j = 0; j < n; ++j) acc[i + j] += uint64_t(x[i]) * y[j];
    }
    // fold x^{n+j} via precomputed reductions
    for (uint32_t j = 2 * n - 2; j >= n && j < 2 * n; --j) {
      uint64_t hi = acc[j] % base.q;
      if (hi) {
        const uint32_t* red = &red_[(j - n) * n];
        for (uint32_t i = 0; i < n; ++i) acc[i] += hi * red[i];
      }
      if (j == n) break;
    }
    for (uint32_t i = 0; i < n; ++i) z[i] = uint32_t(acc[i] % base.q);
  }

 private:
  std::vector<uint32_t> red_;  // digits of x^{n+j} mod modulus, j = 0..n-2
};

inline ExtFieldCtx::ExtFieldCtx(const FieldCtx& F, uint32_t n_, uint32_t max_power_, uint64_t table_cap)
    : base(F), n(n_), max_power(max_power_) {
  if (n < 1) throw std::invalid_argument("ExtFieldCtx: extension degree must be >= 1");
  if (n > uint32_t(detail::kMaxExtDeg)) throw std::invalid_argument("ExtFieldCtx: extension degree too large");
  card = 1;
  for (uint32_t i = 0; i < n; ++i) {
    if (card > table_cap / base.q) throw std::length_error("ExtFieldCtx: q^n exceeds table cap");
    card *= base.q;
  }

  // lexicographically smallest monic irreducible of degree n
  if (n == 1) {
    modulus = poly_x();
  } else {
    std::vector<Poly> small = detail::small_irreducibles(n / 2, base);
    bool found = false;
    for (uint64_t idx = 0; idx < monic_count(n, base) && !found; ++idx) {
      Poly cand = monic_from_lex(n, idx, base);
      bool ok = true;
      for (const Poly& P : small)
        if (poly_mod(cand, P, base).is_zero()) {
          ok = false;
          break;
        }
      if (ok) {
        modulus = cand;
        found = true;
      }
    }
    if (!found) throw std::logic_error("ExtFieldCtx: no irreducible found");  // cannot happen
  }

  // reductions x^{n+j} mod modulus
  if (n >= 2) {
    red_.assign((n - 1) * n, 0);
    Poly xn = poly_mod(Poly([&] {
                         std::vector<uint32_t> c(n + 1, 0);
                         c[n] = 1;
                         return c;
                       }()),
                       modulus, base);
    Poly cur = xn;
    for (uint32_t j = 0; j + 1 < n; ++j) {
      for (int i = 0; i <= cur.deg(); ++i) red_[j * n + i] = cur.c[i];
      if (j + 2 < n) {
        cur = poly_mul(cur, poly_x(), base);
        cur = poly_mod(cur, modulus, base);
      }
    }
  }

  // character table by marking squares
  chi_tab.assign(card, -1);
  chi_tab[0] = 0;
  for (uint64_t z = 1; z < card; ++z) chi_tab[mul(z, z)] = 1;

  // Frobenius orbits: images of the basis under z -> z^q, then a sweep
  std::vector<uint64_t> frob_basis(n);
  uint64_t t = n == 1 ? 0 : base.q;  // packed index of x (degree-1 class); for n=1 the class of x is 0
  uint64_t tq = pow(t, base.q);
  frob_basis[0] = embed(1);
  for (uint32_t i = 1; i < n; ++i) frob_basis[i] = (i == 1) ? tq : mul(frob_basis[i - 1], tq);
  std::vector<uint32_t> frob(card);
  {
    uint32_t d[detail::kMaxExtDeg];
    for (uint64_t z = 0; z < card; ++z) {
      unpack(z, d);
      uint64_t img = 0;
      for (uint32_t i = 0; i < n; ++i)
        if (d[i]) {
          // scalar multiple of a basis image: digitwise
          uint32_t bd[detail::kMaxExtDeg];
          unpack(frob_basis[i], bd);
          uint32_t sd[detail::kMaxExtDeg];
          unpack(img, sd);
          for (uint32_t k = 0; k < n; ++k) sd[k] = base.add(sd[k], base.mul(d[i], bd[k]));
          img = pack(sd);
        }
      frob[z] = uint32_t(img);
    }
  }
  std::vector<bool> seen(card, false);
  for (uint64_t z = 0; z < card; ++z) {
    if (seen[z]) continue;
    uint32_t size = 0;
    uint64_t w = z;
    do {
      seen[w] = true;
      ++size;
      w = frob[w];
    } while (w != z);
    orbits.push_back({uint32_t(z), size});
  }

  // powers of each representative for curve evaluation
  rep_pow.assign(orbits.size() * (max_power + 1) * n, 0);
  for (size_t o = 0; o < orbits.size(); ++o) {
    uint64_t p = embed(1);
    for (uint32_t k = 0; k <= max_power; ++k) {
      unpack(p, &rep_pow[(o * (max_power + 1) + k) * n]);
      if (k < max_power) p = mul(p, orbits[o].rep);
    }
  }
}

// deterministic extension context with the default table sizes
inline ExtFieldCtx build_extension(uint32_t n, const FieldCtx& F, uint32_t max_power = 8,
                                   uint64_t table_cap = uint64_t(1) << 22) {
  return ExtFieldCtx(F, n, max_power, table_cap);
}

inline uint64_t ext_pack(const ExtElem& a, const ExtFieldCtx& E) {
  if (a.coeffs.size() != E.n) throw std::invalid_argument("ext element has wrong length");
  for (uint32_t v : a.coeffs)
    if (v >= E.base.q) throw std::invalid_argument("ext element entry out of range");
  return E.pack(a.coeffs.data());
}

inline ExtElem ext_unpack(uint64_t idx, const ExtFieldCtx& E) {
  ExtElem a;
  a.coeffs.resize(E.n);
  E.unpack(idx, a.coeffs.data());
  return a;
}

// quadratic character of F_{q^n} by the Euler criterion alpha^{(q^n-1)/2}
inline int chi_ext(const ExtElem& alpha, const ExtFieldCtx& E) {
  uint64_t z = ext_pack(alpha, E);
  if (z == 0) return 0;
  uint64_t r = E.pow(z, (E.card - 1) / 2);
  if (r == E.embed(1)) return 1;
  if (r == E.embed(E.base.q - 1)) return -1;
  throw std::logic_error("chi_ext: Euler power is not +-1");
}

// evaluate a polynomial with F_q coefficients at a point of F_{q^n}
inline uint64_t eval_ext(const Poly& f, uint64_t x_idx, const ExtFieldCtx& E) {
  uint64_t acc = 0;
  for (size_t i = f.c.size(); i-- > 0;) {
    acc = E.mul(acc, x_idx);
    acc = E.add(acc, E.embed(f.c[i]));
  }
  return acc;
}

}  // namespace hz
