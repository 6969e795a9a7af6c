#pragma once

#include "qproj/qrat.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <string>
#include <vector>

namespace qproj {

/// Truncated Laurent series sum_{k < precision} c_k q^k + O(q^precision) with
/// exact rational coefficients.  Only the stretch between the first and last
/// non-zero known coefficient is stored.  A precision of kExact marks a
/// finite series known exactly (a polynomial).
class QSeries {
public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  /// O(q^precision).
  static QSeries zero(long precision);
  static QSeries from_poly(const LaurentPoly& p, long precision = kExact);
  /// Coefficients of q^low, q^(low+1), ...; all later coefficients below
  /// `precision` are zero.
  static QSeries from_coeffs(long low, std::vector<Rational> coeffs, long precision);

  long precision() const { return prec_; }
  bool is_exact() const { return prec_ >= kExact; }
  /// Lowest exponent with a known non-zero coefficient (nullopt when every
  /// known coefficient is zero).
  std::optional<long> valuation() const;
  /// valuation(), or precision() when no coefficient is known to be non-zero
  /// (the series is then O(q^precision)).
  long valuation_bound() const;
  /// Coefficient of q^e; throws OutOfRange for e >= precision().
  Rational coeff(long e) const;
  bool is_integral() const;
  /// The known part as a Laurent polynomial; throws NonIntegerOutput.
  LaurentPoly to_poly() const;
  /// Non-zero known coefficients (exponent, coefficient) in increasing order.
  std::vector<std::pair<long, Rational>> terms() const;
  /// Same series with precision lowered to min(precision(), n).
  QSeries truncated(long n) const;

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& f, const QSeries& g);
  friend QSeries operator-(const QSeries& f, const QSeries& g) { return f + (-g); }
  friend QSeries operator*(const QSeries& f, const QSeries& g);
  /// 1/f to the precision the data supports, never beyond `cap`.  Throws
  /// ZeroLeading when no coefficient of f is known to be non-zero and
  /// OutOfRange when an exact series would need an infinite expansion
  /// without a cap.
  QSeries inverse(long cap = kExact) const;
  /// f/g, never beyond `cap`.
  static QSeries divide(const QSeries& f, const QSeries& g, long cap = kExact);

  /// Coefficient-wise equality up to min of both precisions.
  bool agrees_below(const QSeries& o, long n) const;
  /// First exponent below min(precision) where the series differ.
  std::optional<long> first_difference(const QSeries& o) const;
  /// Exact equality of known data (same precision and coefficients).
  friend bool operator==(const QSeries& f, const QSeries& g);

  /// e.g. "q^3 - q^5 + 2q^8 + O(q^33)".
  std::string to_string() const;

private:
  void normalize();

  long low_ = 0;
  long prec_ = 0;
  std::vector<Rational> c_;
};

/// Expansion of num/den to precision n.
QSeries taylor(const LaurentPoly& num, const LaurentPoly& den, long n);
/// Expansion of a finite projective point to precision n; throws
/// ZeroLeading for the point at infinity.
QSeries taylor(const ProjPoint& x, long n);

/// (a f + b)/(c f + d) with precision propagated from f.
QSeries mobius_series(const QMatrix& m, const QSeries& f);
/// mobius_series, then asserts integral coefficients (NonIntegerOutput).
QSeries mobius_series_integral(const QMatrix& m, const QSeries& f);

/// Producer of continued-fraction digits a0; a1, a2, ... (ai >= 1 for i >= 1).
class DigitStream {
public:
  virtual ~DigitStream() = default;
  /// Next digit, or nullopt once a finite stream is exhausted.
  virtual std::optional<long> next() = 0;
  /// Whether the stream describes an irrational number (never ends).
  virtual bool irrational() const = 0;
};

/// Digits from a list.  With `irrational` set, running out of digits is an
/// error (the list is a truncation of an infinite expansion).
class ListDigits : public DigitStream {
public:
  explicit ListDigits(std::vector<long> digits, bool irrational = false)
      : digits_(std::move(digits)), irrational_(irrational) {}
  std::optional<long> next() override;
  bool irrational() const override { return irrational_; }

private:
  std::vector<long> digits_;
  bool irrational_;
  std::size_t pos_ = 0;
};

/// prefix followed by period repeated forever (quadratic irrationals).
class PeriodicDigits : public DigitStream {
public:
  PeriodicDigits(std::vector<long> prefix, std::vector<long> period);
  std::optional<long> next() override;
  bool irrational() const override { return true; }

private:
  std::vector<long> prefix_, period_;
  std::size_t pos_ = 0;
};

/// Digits produced by a callback.
class FunctionDigits : public DigitStream {
public:
  FunctionDigits(std::function<std::optional<long>()> f, bool irrational)
      : f_(std::move(f)), irrational_(irrational) {}
  std::optional<long> next() override { return f_(); }
  bool irrational() const override { return irrational_; }

private:
  std::function<std::optional<long>()> f_;
  bool irrational_;
};

/// Valuation bound for the gap between the two quantizations of the
/// rational with positive expansion [a0; a1, ..., an]: a0 + a1 + ... + an - 1.
long gap_bound(const std::vector<long>& digits);

struct QRealResult {
  QSeries series;
  /// Digits consumed from the stream.
  std::vector<long> digits;
  /// gap_bound of the consumed digits at the stopping point.
  long bound = 0;
  /// The stream ended: the series is the exact expansion of a rational.
  bool exact = false;
};

/// Quantized real number from a digit stream, to precision n.  Successive
/// convergents are quantized and expanded; the loop stops once the gap
/// bound exceeds n and two consecutive expansions agree below n.  Finite
/// streams give the expansion of the exact q-rational.
QRealResult quantize_real_detailed(DigitStream& s, long n, Flavor flavor = Flavor::sharp);
QSeries quantize_real(DigitStream& s, long n, Flavor flavor = Flavor::sharp);

/// The series [x]^sharp - [x]^flat with its valuation and the bound.
struct GapReport {
  Rational x;
  QSeries gap;
  std::optional<long> valuation;
  long bound = 0;
  bool ok = false;
};
GapReport left_right_gap(const Rational& x, long n);

/// Outcome of recovering continued-fraction digits from a series.
struct DecodeResult {
  std::vector<long> digits;
  /// The last residual agreed with 1/(1-q) to its full precision and the
  /// exact q-rational of `digits` reproduces f to f's full precision.  At
  /// finite precision this cannot be told apart from a next digit beyond
  /// the remaining precision, so it reads "consistent with a q-rational".
  bool terminated = false;
  /// Flavor of the exact q-rational when terminated.
  Flavor flavor = Flavor::sharp;
  /// Depth below which the re-encoded digits were checked against the input.
  long verified_below = 0;
};

/// Greedy digit recovery: at each step the digit a in [-bound, bound] (a >= 1
/// after the first) such that J_q R_q^-a applied to the current series has
/// valuation 0, leading coefficient 1 and integral coefficients.  The result
/// is re-encoded and compared with f.  Throws DecodeFailed when nothing
/// verifies and AmbiguityDetected when two different values verify.
DecodeResult decode_cf(const QSeries& f, long digit_bound, std::size_t max_digits);

}  // namespace qproj
