#pragma once

// Hyperelliptic curves y^2 = Q(x) with Q squarefree of degree 2g+1 or 2g+2,
// their point counts over F_{q^n}, and the numerator L*(u) = det(I - u sqrt(q) Theta)
// of the zeta function.  Every trace is carried as the integer
// t_n = q^{n/2} tr(Theta^n) = q^n + 1 - #C(F_{q^n}); sqrt(q) never appears.
//
// Two independent routes produce t_n:
//   * point counts over P^1(F_{q^n}) through the quadratic character of the
//     extension field,
//   * the von Mangoldt / residue-symbol sum over monic f of degree n.
// Their agreement is the master consistency check of the whole build.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperzeta/ext_field.hpp"
#include "hyperzeta/ff.hpp"
#include "hyperzeta/irreducible_table.hpp"
#include "hyperzeta/poly.hpp"
#include "hyperzeta/rational.hpp"
#include "hyperzeta/residue_symbol.hpp"

namespace hz {

struct CurveError : std::domain_error {
  explicit CurveError(const std::string& msg) : std::domain_error(msg) {}
};

struct Curve {
  Poly Q;
  uint32_t q = 0;
  uint32_t g = 0;
  int lambda = 0;  // -1/0/+1: degree parity and squareness of the leading coefficient
};

inline Curve make_curve(Poly Q, const FieldCtx& F) {
  if (Q.deg() < 3) throw CurveError("curve: deg Q must be at least 3 (genus >= 1), got degree " + std::to_string(Q.deg()));
  if (!is_squarefree(Q, F)) {
    Poly d = poly_derivative(Q, F);
    Poly gc = d.is_zero() ? poly_monic(Q, F) : poly_gcd(Q, d, F);
    throw CurveError("curve: Q is not squarefree, repeated part gcd(Q,Q') = " + poly_to_string(gc));
  }
  Curve C;
  C.q = F.q;
  C.g = uint32_t((Q.deg() - 1) / 2);
  C.lambda = (Q.deg() % 2 == 1) ? 0 : chi_base(Q.lead(), F);
  C.Q = std::move(Q);
  return C;
}

inline int lambda_pow(int lambda, uint32_t n) {
  if (lambda == 0) return 0;
  return (lambda == 1 || n % 2 == 0) ? 1 : -1;
}

// #C(F_{q^n}) counted over P^1: q^n + 1 + sum over x0 of chi_n(Q(x0)), the
// point at infinity contributing chi_n of the coefficient of x^{2g+2}.
// Sums over one representative per Frobenius orbit.
inline int64_t count_points(const Curve& C, uint32_t n, const ExtFieldCtx& E) {
  if (E.base.q != C.q || E.n != n) throw std::invalid_argument("count_points: mismatched field contexts");
  const uint32_t nd = E.n;
  int64_t sum = 0;
  if (C.Q.deg() <= int(E.max_power)) {
    const uint32_t stride = (E.max_power + 1) * nd;
    std::vector<uint32_t> digits(nd);
    for (size_t o = 0; o < E.orbits.size(); ++o) {
      const uint32_t* pw = &E.rep_pow[o * stride];
      for (uint32_t j = 0; j < nd; ++j) {
        uint64_t acc = 0;
        for (size_t k = 0; k < C.Q.c.size(); ++k) acc += uint64_t(C.Q.c[k]) * pw[k * nd + j];
        digits[j] = uint32_t(acc % C.q);
      }
      sum += int64_t(E.orbits[o].size) * E.chi_tab[E.pack(digits.data())];
    }
  } else {
    for (const auto& orb : E.orbits) sum += int64_t(orb.size) * E.chi_tab[eval_ext(C.Q, orb.rep, E)];
  }
  uint32_t inf_coeff = C.Q.deg() == int(2 * C.g + 2) ? C.Q.lead() : 0;
  sum += E.chi_tab[E.embed(inf_coeff)];
  return int64_t(E.card) + 1 + sum;
}

inline int64_t scaled_trace_from_count(int64_t count, uint32_t n, const FieldCtx& F) {
  int64_t qn = 1;
  for (uint32_t i = 0; i < n; ++i) qn *= F.q;
  return qn + 1 - count;
}

// t_n = -lambda^n - sum over monic f of degree n of Lambda(f) (Q/f),
// grouped as f = P^k with deg P = d, k = n/d; for even k the symbol is the
// coprimality indicator.
inline int64_t trace_via_character_sum(const Curve& C, uint32_t n, const IrreducibleTable& T) {
  if (n < 1 || n > T.max_degree) throw std::out_of_range("trace_via_character_sum: n exceeds table");
  if (T.F.q != C.q) throw std::invalid_argument("trace_via_character_sum: mismatched field");
  uint32_t qb[detail::kSymCap], fb[detail::kSymCap];
  int qn = C.Q.deg() + 1;
  int64_t acc = 0;
  for (uint32_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    uint32_t k = n / d;
    const auto& coeffs = T.irr_coeffs[d];
    for (size_t p = 0; p < T.irr[d].size(); ++p) {
      for (int i = 0; i < qn; ++i) qb[i] = C.Q.c[i];
      for (uint32_t i = 0; i < d; ++i) fb[i] = coeffs[p * d + i];
      fb[d] = 1;
      int s = detail::residue_symbol_loop(qb, qn, fb, int(d) + 1, T.F);
      acc += int64_t(d) * ((k & 1) ? s : (s ? 1 : 0));
    }
  }
  return -int64_t(lambda_pow(C.lambda, n)) - acc;
}

// all of t_1..t_n_max in one pass, evaluating each symbol (Q/P) once
inline std::vector<int64_t> traces_character_sum(const Curve& C, uint32_t n_max, const IrreducibleTable& T) {
  if (n_max < 1 || n_max > T.max_degree) throw std::out_of_range("traces_character_sum: n_max exceeds table");
  uint32_t qb[detail::kSymCap], fb[detail::kSymCap];
  int qn = C.Q.deg() + 1;
  std::vector<int64_t> acc(n_max + 1, 0);
  for (uint32_t d = 1; d <= n_max; ++d) {
    const auto& coeffs = T.irr_coeffs[d];
    for (size_t p = 0; p < T.irr[d].size(); ++p) {
      for (int i = 0; i < qn; ++i) qb[i] = C.Q.c[i];
      for (uint32_t i = 0; i < d; ++i) fb[i] = coeffs[p * d + i];
      fb[d] = 1;
      int s = detail::residue_symbol_loop(qb, qn, fb, int(d) + 1, T.F);
      for (uint32_t k = 1; k * d <= n_max; ++k) acc[k * d] += int64_t(d) * ((k & 1) ? s : (s ? 1 : 0));
    }
  }
  std::vector<int64_t> t(n_max + 1, 0);
  for (uint32_t n = 1; n <= n_max; ++n) t[n] = -int64_t(lambda_pow(C.lambda, n)) - acc[n];
  return t;  // t[0] unused
}

// ---- L-polynomial reconstruction -----------------------------------------

struct FrobeniusData {
  uint32_t q = 0;
  uint32_t g = 0;
  std::vector<int64_t> lcoeffs;  // c_0..c_{2g} of L*(u), c_0 = 1

  // scaled traces t_1..t_n (index 0 unused), extended by the power-sum
  // recurrence of the degree-2g polynomial
  std::vector<int64_t> traces(uint32_t n_max) const {
    std::vector<int64_t> t(n_max + 1, 0);
    for (uint32_t n = 1; n <= n_max; ++n) {
      int64_t s = 0;
      uint32_t top = std::min(n - 1, 2 * g);
      for (uint32_t i = 1; i <= top; ++i) s += lcoeffs[i] * t[n - i];
      if (n <= 2 * g) s += int64_t(n) * lcoeffs[n];
      t[n] = -s;
    }
    return t;
  }
};

namespace detail {
// Newton's identities: k c_k = -(t_1 c_{k-1} + ... + t_k c_0), exact over Z
inline std::vector<int64_t> newton_coeffs(const std::vector<int64_t>& t, uint32_t upto) {
  std::vector<int64_t> c(upto + 1, 0);
  c[0] = 1;
  for (uint32_t k = 1; k <= upto; ++k) {
    int64_t s = 0;
    for (uint32_t i = 1; i <= k; ++i) s += t[i] * c[k - i];
    if (s % int64_t(k) != 0)
      throw std::logic_error("newton_coeffs: non-exact division at k=" + std::to_string(k) +
                             " (inconsistent point counts)");
    c[k] = -s / int64_t(k);
  }
  return c;
}
}  // namespace detail

// reconstruct L* from t_1..t_g and the functional equation c_{2g-k} = q^{g-k} c_k
inline FrobeniusData lpoly_from_counts(const Curve& C, const std::vector<int64_t>& t) {
  if (t.size() < C.g + 1) throw std::invalid_argument("lpoly_from_counts: need t_1..t_g");
  FrobeniusData R;
  R.q = C.q;
  R.g = C.g;
  std::vector<int64_t> low = detail::newton_coeffs(t, C.g);
  R.lcoeffs.assign(2 * C.g + 1, 0);
  for (uint32_t k = 0; k <= C.g; ++k) R.lcoeffs[k] = low[k];
  for (uint32_t k = 0; k < C.g; ++k) {
    int64_t f = 1;
    for (uint32_t i = 0; i < C.g - k; ++i) f *= C.q;
    R.lcoeffs[2 * C.g - k] = f * low[k];
  }
  return R;
}

// full reconstruction from t_1..t_{2g}; no functional equation used, so the
// symmetry of the result is a genuine check
inline FrobeniusData lpoly_from_full_counts(const Curve& C, const std::vector<int64_t>& t) {
  if (t.size() < 2 * C.g + 1) throw std::invalid_argument("lpoly_from_full_counts: need t_1..t_2g");
  FrobeniusData R;
  R.q = C.q;
  R.g = C.g;
  R.lcoeffs = detail::newton_coeffs(t, 2 * C.g);
  return R;
}

inline bool fe_symmetric(const std::vector<int64_t>& lcoeffs, uint32_t q, uint32_t g) {
  if (lcoeffs.size() != 2 * g + 1 || lcoeffs[0] != 1) return false;
  for (uint32_t k = 0; k <= g; ++k) {
    int64_t f = 1;
    for (uint32_t i = 0; i < g - k; ++i) f *= q;
    if (lcoeffs[2 * g - k] != f * lcoeffs[k]) return false;
  }
  return true;
}

// ---- Dirichlet coefficients A_Q(beta) -------------------------------------

// sum of (D/B) over monic B of degree beta
inline int64_t dirichlet_coeff(const Poly& D, uint32_t beta, const FieldCtx& F) {
  if (beta == 0) return D.is_zero() ? 0 : 1;
  if (D.deg() >= detail::kSymCap || int(beta) >= detail::kSymCap)
    throw std::invalid_argument("dirichlet_coeff: degree exceeds buffer");
  uint32_t db[detail::kSymCap], fb[detail::kSymCap];
  int dn = D.deg() + 1;
  int64_t acc = 0;
  for_each_monic(beta, F, [&](const Poly& B) {
    for (int i = 0; i < dn; ++i) db[i] = D.c[i];
    for (uint32_t i = 0; i <= beta; ++i) fb[i] = B.c[i];
    acc += detail::residue_symbol_loop(db, dn, fb, int(beta) + 1, F);
  });
  return acc;
}

// A_Q(0..deg Q - 1); A_Q vanishes from deg Q on (spot-checked in the tests)
inline std::vector<int64_t> lfunc_coeffs(const Curve& C, const IrreducibleTable& T) {
  if (C.Q.deg() - 1 > int(T.max_degree)) throw std::out_of_range("lfunc_coeffs: deg Q - 1 exceeds table");
  std::vector<int64_t> A(C.Q.deg());
  for (int beta = 0; beta < C.Q.deg(); ++beta) A[beta] = dirichlet_coeff(C.Q, uint32_t(beta), T.F);
  return A;
}

// coefficientwise check of L(u,chi_Q) = (1 - lambda u) L*(u,chi_Q)
inline bool lseries_matches(const Curve& C, const FrobeniusData& R, const std::vector<int64_t>& A) {
  for (size_t beta = 0; beta < A.size(); ++beta) {
    int64_t c = beta < R.lcoeffs.size() ? R.lcoeffs[beta] : 0;
    int64_t cm1 = (beta >= 1 && beta - 1 < R.lcoeffs.size()) ? R.lcoeffs[beta - 1] : 0;
    if (A[beta] != c - int64_t(C.lambda) * cm1) return false;
  }
  return true;
}

// ---- numeric roots of L* ---------------------------------------------------

namespace detail {
// exact squarefree part over Q, so the root finder only ever sees simple roots
inline std::vector<Rational> squarefree_part(const std::vector<int64_t>& ic) {
  std::vector<Rational> a(ic.begin(), ic.end());
  while (!a.empty() && a.back() == 0) a.pop_back();
  auto deriv = [](const std::vector<Rational>& p) {
    std::vector<Rational> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * int(i));
    return d;
  };
  auto rem = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  };
  std::vector<Rational> u = a, v = deriv(a);
  while (!v.empty()) {
    auto r = rem(u, v);
    u = std::move(v);
    v = std::move(r);
  }
  if (u.size() <= 1) return a;  // already squarefree
  // exact division a / u
  std::vector<Rational> quot(a.size() - u.size() + 1);
  std::vector<Rational> r = a;
  for (size_t i = quot.size(); i-- > 0;) {
    Rational f = r[i + u.size() - 1] / u.back();
    quot[i] = f;
    for (size_t j = 0; j < u.size(); ++j) r[i + j] -= f * u[j];
  }
  return quot;
}

// Durand-Kerner on a polynomial with simple roots
inline std::vector<std::complex<double>> roots_dk(const std::vector<double>& coeffs) {
  size_t d = coeffs.size() - 1;
  std::vector<std::complex<double>> z(d);
  double r = std::pow(std::abs(coeffs[0] / coeffs[d]), 1.0 / double(d));
  for (size_t i = 0; i < d; ++i) {
    double th = 2.0 * 3.14159265358979323846 * double(i) / double(d) + 0.4;
    z[i] = std::polar(r, th);
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
    return acc;
  };
  for (int it = 0; it < 2000; ++it) {
    double worst = 0;
    for (size_t i = 0; i < d; ++i) {
      std::complex<double> den = coeffs[d];
      for (size_t j = 0; j < d; ++j)
        if (j != i) den *= (z[i] - z[j]);
      std::complex<double> dz = eval(z[i]) / den;
      z[i] -= dz;
      worst = std::max(worst, std::abs(dz));
    }
    if (worst < 1e-14) break;
  }
  return z;
}
}  // namespace detail

// distinct complex roots u of L*(u)
inline std::vector<std::complex<double>> lpoly_roots(const std::vector<int64_t>& lcoeffs) {
  std::vector<Rational> sf = detail::squarefree_part(lcoeffs);
  std::vector<double> c(sf.size());
  for (size_t i = 0; i < sf.size(); ++i) c[i] = to_double(sf[i]);
  if (c.size() <= 1) return {};
  return detail::roots_dk(c);
}

// max over roots of | |u| - q^{-1/2} |
inline double weil_max_radius_error(const FrobeniusData& R) {
  double target = 1.0 / std::sqrt(double(R.q));
  double worst = 0;
  for (const auto& u : lpoly_roots(R.lcoeffs)) worst = std::max(worst, std::abs(std::abs(u) - target));
  return worst;
}

}  // namespace hz
