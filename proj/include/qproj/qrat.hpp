#pragma once

#include "qproj/contfrac.hpp"

#include <string>
#include <string_view>

namespace qproj {

enum class Flavor { sharp, flat };

inline Flavor opposite(Flavor f) { return f == Flavor::sharp ? Flavor::flat : Flavor::sharp; }
const char* flavor_name(Flavor f);
Flavor flavor_from_name(std::string_view name);  // throws ParseError

/// A rational number or infinity.
struct ExtRational {
  bool infinite = false;
  Rational value;

  ExtRational() = default;
  ExtRational(const Rational& r) : value(r) {}
  ExtRational(long n) : value(n) {}
  static ExtRational infinity() {
    ExtRational x;
    x.infinite = true;
    return x;
  }
  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  /// "7/5", "-3", "inf".
  std::string to_string() const;
  /// Accepts "p/q", "n", "inf" / "oo" / "1/0".
  static ExtRational parse(std::string_view text);
};

/// Classical Möbius action of an integer matrix on the extended rationals.
ExtRational classical_mobius(const IntMatrix& m, const ExtRational& x);
/// Value at q = 1; throws Indeterminate when both sides vanish.
ExtRational eval_at_one(const ProjPoint& x);

/// [x]^sharp or [x]^flat together with its classical value.
struct QRational {
  ExtRational value;
  Flavor flavor = Flavor::sharp;
  ProjPoint point = ProjPoint::infinity();
  friend bool operator==(const QRational&, const QRational&) = default;
};

/// The base points [inf]^sharp = 1/0 and [inf]^flat = 1/(1-q).
ProjPoint infinity_point(Flavor f);

/// Quantizes x: the even positive expansion word applied to 1/0 (sharp) or
/// the odd one applied to 1/0 (flat); the alternative word (other parity
/// applied to 1/(1-q)) is evaluated too and must agree.
QRational quantize(const ExtRational& x, Flavor flavor);

/// M_q applied to [x]; the flavor flips iff det M = -1.
QRational act(const GroupWord& w, const QRational& x);
/// The twisted operator M_q I_q tau applied to [x]; the flavor flips iff
/// det M = +1.
QRational act_twisted(const GroupWord& w, const QRational& x);
/// [-x] of the same flavor: -q^-1 [x](q^-1), cross-checked against N_q
/// applied to the opposite flavor.
QRational negate(const QRational& x);
/// [1/x] of the same flavor: 1/[x](q^-1), cross-checked against J_q applied
/// to the opposite flavor.
QRational invert(const QRational& x);

/// Both ways of passing between the two flavors of x:
///  - the tau-transition [x]^sharp = ([x]^flat(q^-1) + q - 1) /
///    ((1 - q)[x]^flat(q^-1) + q);
///  - for finite x, the convergent combination q U_2m + (1 - q) U_2m-1 =
///    U^flat (and the same for V) on the even expansion.
struct FlatSharpReport {
  ExtRational x;
  ProjPoint sharp = ProjPoint::zero(), flat = ProjPoint::zero();
  ProjPoint sharp_from_flat = ProjPoint::zero();
  ProjPoint flat_from_sharp = ProjPoint::zero();
  bool transition_ok = false;
  /// Present for finite x.
  bool has_combination = false;
  LaurentPoly U_sharp, V_sharp, U_prev_sharp, V_prev_sharp, U_comb, V_comb;
  ProjPoint combination = ProjPoint::zero();
  bool combination_ok = false;
  bool ok() const { return transition_ok && (!has_combination || combination_ok); }
};
FlatSharpReport flat_from_sharp(const ExtRational& x);

}  // namespace qproj
