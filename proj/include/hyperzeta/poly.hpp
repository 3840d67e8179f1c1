#pragma once

// Dense polynomials over F_q, lowest coefficient first.  The stored form is
// canonical: no trailing zero coefficients, so the zero polynomial has an
// empty coefficient vector and degree -1 (sentinel for -infinity).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperzeta/ff.hpp"

namespace hz {

struct Poly {
  std::vector<uint32_t> c;  // c[i] multiplies x^i

  Poly() = default;
  explicit Poly(std::vector<uint32_t> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_monic() const { return !c.empty() && c.back() == 1; }
  uint32_t lead() const { return c.empty() ? 0 : c.back(); }
  uint32_t coeff(size_t i) const { return i < c.size() ? c[i] : 0; }

  bool operator==(const Poly& o) const { return c == o.c; }
  bool operator!=(const Poly& o) const { return c != o.c; }
};

inline Poly poly_one() { return Poly({1}); }
inline Poly poly_x() { return Poly({0, 1}); }

inline Poly poly_add(const Poly& a, const Poly& b, const FieldCtx& F) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b, const FieldCtx& F) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.sub(a.coeff(i), b.coeff(i));
  r.trim();
  return r;
}

inline Poly poly_scale(const Poly& a, uint32_t s, const FieldCtx& F) {
  Poly r = a;
  for (auto& x : r.c) x = F.mul(x, s);
  r.trim();
  return r;
}

inline Poly poly_mul(const Poly& a, const Poly& b, const FieldCtx& F) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<uint64_t> acc(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) acc[i + j] += uint64_t(a.c[i]) * b.c[j];
  Poly r;
  r.c.resize(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r.c[i] = uint32_t(acc[i] % F.q);
  r.trim();
  return r;
}

// quotient and remainder; divisor must be nonzero
inline std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b, const FieldCtx& F) {
  if (b.is_zero()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
  if (a.deg() < b.deg()) return {Poly(), a};
  std::vector<uint32_t> rem = a.c;
  std::vector<uint32_t> quot(a.deg() - b.deg() + 1, 0);
  uint32_t linv = F.inv[b.lead()];
  for (int i = a.deg(); i >= b.deg(); --i) {
    uint32_t f = F.mul(rem[i], linv);
    if (f == 0) continue;
    quot[i - b.deg()] = f;
    for (int j = 0; j <= b.deg(); ++j) rem[i - b.deg() + j] = F.sub(rem[i - b.deg() + j], F.mul(f, b.c[j]));
  }
  Poly q2(std::move(quot)), r2(std::move(rem));
  return {q2, r2};
}

inline Poly poly_mod(const Poly& a, const Poly& b, const FieldCtx& F) { return poly_divrem(a, b, F).second; }

inline Poly poly_monic(const Poly& a, const FieldCtx& F) {
  if (a.is_zero()) return a;
  return poly_scale(a, F.inv[a.lead()], F);
}

// monic gcd; gcd(0,0) is rejected
inline Poly poly_gcd(Poly a, Poly b, const FieldCtx& F) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("poly_gcd: gcd(0,0)");
  while (!b.is_zero()) {
    Poly r = poly_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, F);
}

inline Poly poly_derivative(const Poly& a, const FieldCtx& F) {
  Poly r;
  if (a.deg() < 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = F.mul(a.c[i], uint32_t(i % F.q));
  r.trim();
  return r;
}

inline uint32_t poly_eval(const Poly& a, uint32_t x, const FieldCtx& F) {
  uint32_t acc = 0;
  for (size_t i = a.c.size(); i-- > 0;) acc = F.add(F.mul(acc, x), a.c[i]);
  return acc;
}

// squarefree test; in characteristic p a vanishing derivative of a
// nonconstant f means f is a p-th power, hence not squarefree
inline bool is_squarefree(const Poly& f, const FieldCtx& F) {
  if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  if (f.deg() < 1) return true;
  Poly d = poly_derivative(f, F);
  if (d.is_zero()) return false;
  return poly_gcd(f, d, F).deg() == 0;
}

// ---- enumeration of monic polynomials -----------------------------------
//
// Monic polynomials of degree d are ordered lexicographically by their
// coefficient vector (c_0, ..., c_{d-1}) compared low-to-high, so c_0 is the
// most significant position.  lex_index is the rank in that order.

inline uint64_t monic_count(uint32_t d, const FieldCtx& F) {
  uint64_t n = 1;
  for (uint32_t i = 0; i < d; ++i) {
    if (n > (uint64_t(1) << 62) / F.q) throw std::overflow_error("monic_count: q^d overflow");
    n *= F.q;
  }
  return n;
}

// number of monic squarefree polynomials of degree d: q for d = 1 and
// (1 - 1/q) q^d from d = 2 on
inline uint64_t squarefree_count(uint32_t d, uint32_t q) {
  if (d == 0) return 1;
  if (d == 1) return q;
  uint64_t p = 1;
  for (uint32_t i = 0; i + 1 < d; ++i) p *= q;
  return (q - 1) * p;
}

inline Poly monic_from_lex(uint32_t d, uint64_t idx, const FieldCtx& F) {
  Poly p;
  p.c.assign(d + 1, 0);
  p.c[d] = 1;
  for (uint32_t i = d; i-- > 0;) {  // c_{d-1} varies fastest
    p.c[i] = uint32_t(idx % F.q);
    idx /= F.q;
  }
  return p;
}

inline uint64_t lex_index(const Poly& f, const FieldCtx& F) {
  if (!f.is_monic()) throw std::invalid_argument("lex_index: polynomial must be monic");
  uint64_t idx = 0;
  for (int i = 0; i < f.deg(); ++i) idx = idx * F.q + f.c[i];
  return idx;
}

template <class Fn>
inline void for_each_monic(uint32_t d, const FieldCtx& F, Fn&& fn) {
  Poly p;
  p.c.assign(d + 1, 0);
  p.c[d] = 1;
  if (d == 0) {
    fn(static_cast<const Poly&>(p));
    return;
  }
  for (;;) {
    fn(static_cast<const Poly&>(p));
    uint32_t i = d;  // odometer, last coefficient first
    while (i-- > 0) {
      if (++p.c[i] < F.q) break;
      p.c[i] = 0;
      if (i == 0) return;
    }
  }
}

inline std::vector<Poly> enumerate_monic(uint32_t d, const FieldCtx& F, uint64_t budget = 10'000'000) {
  uint64_t n = monic_count(d, F);
  if (n > budget) throw std::length_error("enumerate_monic: q^d exceeds budget");
  std::vector<Poly> out;
  out.reserve(n);
  for_each_monic(d, F, [&](const Poly& p) { out.push_back(p); });
  return out;
}

// ---- parsing / printing ---------------------------------------------------

inline std::string poly_to_string(const Poly& f) {
  std::string s;
  for (size_t i = 0; i < f.c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.c[i]);
  }
  return s.empty() ? "0" : s;
}

// comma-separated coefficients, low degree first; values reduced mod q
inline Poly poly_from_string(const std::string& s, const FieldCtx& F) {
  std::vector<uint32_t> c;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    long long v;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("poly_from_string: bad coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw std::invalid_argument("poly_from_string: bad coefficient '" + tok + "'");
    long long r = v % static_cast<long long>(F.q);
    if (r < 0) r += F.q;
    c.push_back(uint32_t(r));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Poly(std::move(c));
}

}  // namespace hz
