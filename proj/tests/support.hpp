#pragma once

// Hand-rolled random generators and small independent oracles shared by the
// test files.

#include "qproj/verify.hpp"

#include <doctest.h>

#include <map>
#include <random>

namespace qtest {

using namespace qproj;

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(0x5eed1234);
  return r;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Laurent polynomial with up to `terms` terms, exponents in [-span, span],
/// coefficients in [-9, 9].
inline LaurentPoly random_poly(int terms = 5, long span = 4) {
  LaurentPoly p;
  long n = uniform(0, terms);
  for (long i = 0; i < n; ++i) p += LaurentPoly::monomial(uniform(-9, 9), uniform(-span, span));
  return p;
}

inline LaurentPoly random_nonzero_poly(int terms = 5, long span = 4) {
  while (true) {
    LaurentPoly p = random_poly(terms, span);
    if (!p.is_zero()) return p;
  }
}

/// Coefficient map of a polynomial; the oracles below work on these maps.
using CoeffMap = std::map<long, Integer>;

inline CoeffMap coeff_map(const LaurentPoly& p) {
  CoeffMap m;
  if (p.is_zero()) return m;
  for (long e = p.valuation(); e <= p.degree(); ++e)
    if (p.coeff(e) != 0) m[e] = p.coeff(e);
  return m;
}

inline CoeffMap naive_product(const CoeffMap& a, const CoeffMap& b) {
  CoeffMap r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

/// Value at a rational q (q != 0).
inline Rational eval_at(const LaurentPoly& p, const Rational& q) {
  Rational v = 0;
  for (const auto& [e, c] : coeff_map(p)) {
    Rational term = c;
    for (long i = 0; i < std::abs(e); ++i) term = e > 0 ? Rational(term * q) : Rational(term / q);
    v += term;
  }
  return v;
}

inline Rational random_rational(long num = 40, long den = 25) {
  Rational r(uniform(-num, num), uniform(1, den));
  r.canonicalize();
  return r;
}

inline GroupWord random_word(int max_len = 6) {
  Corpus c(rng()());
  return c.word(max_len);
}

}  // namespace qtest
