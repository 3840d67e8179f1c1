#pragma once

// Exact rational scalars for the ensemble statistics.  Floats appear only
// when rendering reports; every aggregation is done on these.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdio>
#include <string>

namespace hz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string num_str(const Rational& r) { return numerator(r).str(); }
inline std::string den_str(const Rational& r) { return denominator(r).str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// q^e as an exact rational, e of either sign
inline Rational rational_pow(uint32_t q, int e) {
  BigInt p = boost::multiprecision::pow(BigInt(q), unsigned(e < 0 ? -e : e));
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// scaled value divided by q^{n/2}, as a double (rendering only)
inline double trace_units(const Rational& scaled, uint32_t q, uint32_t n) {
  return to_double(scaled) / std::pow(double(q), double(n) / 2.0);
}

// 12 significant digits, C locale
inline std::string fmt_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::string(buf);
}

}  // namespace hz
