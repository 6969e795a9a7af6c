#pragma once

#include "qproj/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qproj {

/// A unit of the ring Z[q, q^-1, t^-1]: sign * q^qpow * t^tpow.
struct LambdaUnit {
  int sign = 1;
  long qpow = 0;
  long tpow = 0;

  static LambdaUnit one() { return {}; }
  friend LambdaUnit operator*(const LambdaUnit& a, const LambdaUnit& b) {
    return {a.sign * b.sign, a.qpow + b.qpow, a.tpow + b.tpow};
  }
  friend bool operator==(const LambdaUnit&, const LambdaUnit&) = default;
  LambdaUnit inverse() const { return {sign, -qpow, -tpow}; }
  /// Image under q -> q^-1 (t maps to q^-2 t).
  LambdaUnit reversed() const { return {sign, -qpow - 2 * tpow, tpow}; }
  LambdaUnit pow(long n) const { return {(n % 2 != 0) ? sign : 1, qpow * n, tpow * n}; }
  bool is_one() const { return sign == 1 && qpow == 0 && tpow == 0; }
  /// The unit as a Laurent polynomial; requires tpow >= 0.
  LaurentPoly to_poly() const;
  /// e.g. "-q^-1 t", "t^2", "1".
  std::string to_string() const;
};

/// Writes p as a unit, if it is one (p = ±q^a t^b with b >= 0).
std::optional<LambdaUnit> as_unit(const LaurentPoly& p);

/// u * p.  Throws NotDivisible if u has a negative t-power not cancelled by p.
LaurentPoly apply_unit(const LambdaUnit& u, const LaurentPoly& p);

/// 2x2 matrix over Z[q, q^-1, t^-1], stored as scale * [[a, b], [c, d]] with
/// Laurent-polynomial entries.  Inverses keep the determinant's t-power in
/// the scale, so everything stays exact.
struct QMatrix {
  LambdaUnit scale;
  LaurentPoly a{1}, b{0}, c{0}, d{1};

  QMatrix() = default;
  QMatrix(LaurentPoly a_, LaurentPoly b_, LaurentPoly c_, LaurentPoly d_, LambdaUnit s = {})
      : scale(s), a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static QMatrix identity() { return {}; }
  /// u * Id.
  static QMatrix scalar(const LambdaUnit& u) { return {1, 0, 0, 1, u}; }

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  /// Exact equality of the represented matrices (not of the storage).
  friend bool operator==(const QMatrix& x, const QMatrix& y);

  /// Determinant of the entry matrix (without the scale).
  LaurentPoly entry_det() const;
  /// Determinant of the represented matrix as a unit; throws NotInvertible.
  LambdaUnit det() const;
  /// Exact inverse; throws NotInvertible when det is not a unit.
  QMatrix inverse() const;
  /// this^n for any integer n.
  QMatrix pow(long n) const;
  /// Image under q -> q^-1 applied entrywise.
  QMatrix reversed() const;
  /// Moves common factors t^k and q^m of the entries into the scale and
  /// makes the (a, d) trace representative well defined up to sign*q^m.
  QMatrix stripped() const;
  /// Sign of the classical determinant at q = 1 of the entry matrix.
  int classical_det_sign() const;

  std::string to_string() const;
};

/// u with x = u * y, if x and y are proportional by a unit.
std::optional<LambdaUnit> proportionality(const QMatrix& x, const QMatrix& y);
/// x and y define the same element of PGL2.
bool proj_equal(const QMatrix& x, const QMatrix& y);

/// Point of the projective line over Q(q), in canonical form: numerator and
/// denominator coprime, denominator of valuation 0 with positive leading
/// coefficient; infinity is 1/0 and zero is 0/1.
class ProjPoint {
public:
  /// Canonical point num/den; throws BothZero for 0/0.
  static ProjPoint make(const LaurentPoly& num, const LaurentPoly& den);
  static ProjPoint infinity() { return make(1, 0); }
  static ProjPoint zero() { return make(0, 1); }
  static ProjPoint parse(std::string_view text);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_infinity() const { return den_.is_zero(); }
  /// Image under q -> q^-1.
  ProjPoint reversed() const { return make(num_.reversed(), den_.reversed()); }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  /// "NUM" when the denominator is 1, otherwise "(NUM)/(DEN)" with the
  /// parentheses omitted around single terms.
  std::string to_string() const;

private:
  LaurentPoly num_, den_;
};

/// (a x + b) / (c x + d) in canonical form; throws Indeterminate on 0/0.
ProjPoint mobius(const QMatrix& m, const ProjPoint& x);

/// All points of the projective line fixed by m (solutions of the binary
/// quadratic form -c h^2 + (a - d) h g + b g^2 = 0 over Z[q, q^-1]).  Throws
/// OutOfRange when m is scalar (every point is fixed) and returns an empty
/// list when the form has no roots over Q(q).
std::vector<ProjPoint> fixed_points(const QMatrix& m);
/// m x == x.
bool is_fixed(const QMatrix& m, const ProjPoint& x);

}  // namespace qproj
