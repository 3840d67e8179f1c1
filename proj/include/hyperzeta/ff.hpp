#pragma once

// Arithmetic in the prime field F_q, q an odd prime.  A FieldCtx is
// immutable after construction and safe to share across threads.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hz {

inline bool is_odd_prime(uint32_t q) {
  if (q < 3 || q % 2 == 0) return false;
  for (uint32_t d = 3; d * d <= q; d += 2)
    if (q % d == 0) return false;
  return true;
}

struct FieldCtx {
  uint32_t q = 0;
  std::vector<int8_t> chi;    // chi[a] in {0,+1,-1}, Euler criterion
  std::vector<uint32_t> inv;  // inv[a] = a^{-1} mod q, inv[0] = 0

  explicit FieldCtx(uint32_t q_);

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= q ? s - q : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + q - b; }
  uint32_t mul(uint32_t a, uint32_t b) const { return (a * b) % q; }
  uint32_t neg(uint32_t a) const { return a ? q - a : 0; }
};

// a^e mod q with 0^0 = 1
inline uint32_t fq_pow(uint32_t a, uint64_t e, const FieldCtx& F) {
  if (a >= F.q) throw std::invalid_argument("fq_pow: residue out of range");
  uint32_t r = 1, b = a;
  while (e) {
    if (e & 1) r = F.mul(r, b);
    b = F.mul(b, b);
    e >>= 1;
  }
  return r;
}

// quadratic character of F_q: 0 at zero, +1 on squares, -1 otherwise
inline int chi_base(uint32_t a, const FieldCtx& F) {
  if (a >= F.q) throw std::invalid_argument("chi_base: residue out of range");
  return F.chi[a];
}

inline FieldCtx::FieldCtx(uint32_t q_) : q(q_) {
  if (!is_odd_prime(q)) throw std::invalid_argument("FieldCtx: q must be an odd prime, got " + std::to_string(q));
  if (q > (1u << 15)) throw std::invalid_argument("FieldCtx: q too large for this build");
  chi.assign(q, 0);
  inv.assign(q, 0);
  for (uint32_t a = 1; a < q; ++a) {
    uint32_t e = fq_pow(a, (q - 1) / 2, *this);
    chi[a] = (e == 1) ? 1 : -1;
    inv[a] = fq_pow(a, q - 2, *this);
  }
}

}  // namespace hz
