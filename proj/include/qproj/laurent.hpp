#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qproj {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Z[q, q^-1].
///
/// Stored as a lowest exponent plus a dense coefficient vector whose first
/// and last entries are non-zero (the zero polynomial has no coefficients).
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}
  LaurentPoly(long c) : LaurentPoly(Integer(c)) {}
  explicit LaurentPoly(const Integer& c);

  /// c * q^e.
  static LaurentPoly monomial(const Integer& c, long e);
  /// q^e.
  static LaurentPoly qpow(long e) { return monomial(1, e); }
  /// sum_i coeffs[i] q^(valuation + i); zeros at either end are trimmed.
  static LaurentPoly from_coeffs(long valuation, std::vector<Integer> coeffs);
  /// (q^n - 1)/(q - 1) for any integer n: 1 + q + ... + q^(n-1) for n > 0,
  /// 0 for n = 0 and -(q^-1 + ... + q^n) for n < 0.
  static LaurentPoly qint(long n);
  /// t = q^2 - q + 1.
  static LaurentPoly t();

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest exponent with a non-zero coefficient.  Throws ZeroPolynomial.
  long valuation() const;
  /// Highest exponent with a non-zero coefficient.  Throws ZeroPolynomial.
  long degree() const;
  /// Coefficient of q^e (zero outside the support).
  Integer coeff(long e) const;
  /// Coefficient at the highest exponent.  Throws ZeroPolynomial.
  const Integer& leading() const;
  /// Coefficient at the lowest exponent.  Throws ZeroPolynomial.
  const Integer& trailing() const;
  /// Dense coefficients starting at valuation().
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::size_t term_count() const;
  bool is_monomial() const { return coeffs_.size() == 1; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
  }

  /// q^k * this.
  LaurentPoly shifted(long k) const;
  /// c * this.
  LaurentPoly scaled(const Integer& c) const;
  /// this^n for n >= 0.
  LaurentPoly pow(unsigned n) const;
  /// The substitution q -> q^-1.
  LaurentPoly reversed() const;
  /// Value at q = 1.
  Integer eval_at_one() const;
  /// Positive gcd of the coefficients (0 for the zero polynomial).
  Integer content() const;
  /// True when every coefficient is >= 0 (the zero polynomial qualifies).
  bool is_nonnegative() const;
  /// True when a(q) = q^k a(q^-1) for some k (zero counts as palindromic).
  bool is_palindromic() const;
  /// valuation() + degree(), i.e. twice the centre of symmetry.
  long palindrome_center2() const;

  /// Human-readable form in increasing exponent order, e.g.
  /// "1 + q + 2q^2 - q^-1" is printed as "-q^-1 + 1 + q + 2q^2".
  std::string to_string() const;
  /// Parses the output of to_string(); also accepts "c*q^e" and spaces.
  static LaurentPoly parse(std::string_view text);

private:
  void normalize();

  long val_ = 0;
  std::vector<Integer> coeffs_;
};

/// a / b if b divides a in Z[q, q^-1], otherwise std::nullopt.  b != 0.
std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b);
/// a / b; throws NotDivisible when the division is not exact.
LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);
/// Greatest common divisor in Z[q, q^-1], normalized to valuation 0 and a
/// positive leading coefficient.  gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
/// Square root with positive leading coefficient, if a is a perfect square.
std::optional<LaurentPoly> try_sqrt(const LaurentPoly& a);
/// Number of times t divides a (a != 0).
long t_multiplicity(const LaurentPoly& a);

std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

}  // namespace qproj
