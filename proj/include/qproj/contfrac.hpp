#pragma once

#include "qproj/qgroup.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qproj {

enum class CFKind { positive, negative };
enum class Parity { even, odd };

/// Positive expansion [a1, ..., an] = a1 + 1/(a2 + ...), a1 in Z, ai >= 1;
/// negative (Hirzebruch-Jung) expansion [[c1, ..., ck]] = c1 - 1/(c2 - ...),
/// c1 in Z, ci >= 2.
struct CFExpansion {
  CFKind kind = CFKind::positive;
  std::vector<long> digits;

  friend bool operator==(const CFExpansion&, const CFExpansion&) = default;
  /// Checks the digit constraints of the kind; throws ShapeMismatch.
  void validate() const;
  /// "1,2,2" or "neg:2,2,3".
  std::string to_string() const;
  static CFExpansion parse(std::string_view text);
};

/// Positive expansion of the requested length parity (unique).
CFExpansion positive_cf(const Rational& x, Parity parity);
/// Negative (Hirzebruch-Jung) expansion: c = ceil(x), then 1/(c - x).
CFExpansion negative_cf(const Rational& x);
/// Classical value of an expansion.
Rational evaluate(const CFExpansion& cf);

/// Positive: (R^a1 J)(R^a2 J)...; negative: (R^c1 S)(R^c2 S)..., optionally
/// prefixed by N.  Classically the word sends infinity to the value.
GroupWord cf_to_word(const CFExpansion& cf, bool n_prefix = false);

/// The quantized product of a continued fraction word, factored as
/// unit * [[p U, p' U'], [p V, p' V']] where U/V quantizes the value and
/// U'/V' the previous convergent:
///  - even positive [a1..a2m]: unit q^min(0,a1) t^m, p = q, p' = 1, sharp
///    quantizations;
///  - odd positive [a1..a2m+1] (m >= 1): the same unit with t^m, flat
///    quantizations;
///  - negative [[c1..ck]] prefixed by N: unit q^(min(0,c1) - 1), p = 1,
///    p' = -q^(ck - 1), flat quantizations of -value and of -[[c1..ck-1]].
struct ShapeReport {
  GroupWord word;
  QMatrix product;
  LambdaUnit unit;
  /// product / unit.
  QMatrix matrix;
  LaurentPoly U, V, U_prev, V_prev;
  /// Canonical points built from the columns.
  ProjPoint value = ProjPoint::zero(), previous = ProjPoint::zero();
  /// The same quantities computed independently from the convergents.
  ProjPoint expected_value = ProjPoint::zero(), expected_previous = ProjPoint::zero();
  /// Columns agree with the independent quantizations as points.
  bool columns_match = false;
  /// Column polynomials are literally the canonical numerators/denominators.
  bool columns_exact = false;
};

/// Throws ShapeMismatch if the predicted unit or column factor does not
/// divide the product, or the expansion is outside the supported form.
ShapeReport factorization_shape(const CFExpansion& cf);

}  // namespace qproj
