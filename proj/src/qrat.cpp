#include "qproj/qrat.hpp"

#include "qproj/error.hpp"

namespace qproj {

const char* flavor_name(Flavor f) { return f == Flavor::sharp ? "sharp" : "flat"; }

Flavor flavor_from_name(std::string_view name) {
  if (name == "sharp" || name == "right") return Flavor::sharp;
  if (name == "flat" || name == "left") return Flavor::flat;
  throw ParseError("unknown flavor '" + std::string(name) + "' (expected sharp or flat)");
}

std::string ExtRational::to_string() const { return infinite ? "inf" : value.get_str(); }

ExtRational ExtRational::parse(std::string_view text) {
  std::string s(text);
  if (s == "inf" || s == "oo" || s == "infinity") return infinity();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer p(s.substr(0, slash)), q(s.substr(slash + 1));
    if (q == 0) {
      if (p == 0) throw ParseError("0/0 is not a rational number");
      return infinity();
    }
    Rational r(p, q);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

ExtRational classical_mobius(const IntMatrix& m, const ExtRational& x) {
  if (x.infinite) {
    if (m.c == 0) return ExtRational::infinity();
    Rational r(m.a, m.c);
    r.canonicalize();
    return r;
  }
  Rational num = Rational(m.a) * x.value + Rational(m.b);
  Rational den = Rational(m.c) * x.value + Rational(m.d);
  if (den == 0) return ExtRational::infinity();
  return Rational(num / den);
}

ExtRational eval_at_one(const ProjPoint& x) {
  Integer n = x.num().eval_at_one(), d = x.den().eval_at_one();
  if (n == 0 && d == 0) throw Indeterminate(x.to_string() + " at q = 1");
  if (d == 0) return ExtRational::infinity();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

ProjPoint infinity_point(Flavor f) {
  return f == Flavor::sharp ? ProjPoint::infinity() : ProjPoint::make(1, 1 - LaurentPoly::qpow(1));
}

namespace {

ProjPoint word_image(const Rational& x, Parity parity, const ProjPoint& base) {
  return mobius(eval_word(cf_to_word(positive_cf(x, parity))), base);
}

const TwistedOp& bar_identity() {
  static const TwistedOp op = twisted(GroupWord{});
  return op;
}

}  // namespace

QRational quantize(const ExtRational& x, Flavor flavor) {
  QRational r;
  r.value = x;
  r.flavor = flavor;
  if (x.infinite) {
    r.point = infinity_point(flavor);
    return r;
  }
  const ProjPoint inf = ProjPoint::infinity(), inf_flat = infinity_point(Flavor::flat);
  if (flavor == Flavor::sharp) {
    r.point = word_image(x.value, Parity::even, inf);
    if (word_image(x.value, Parity::odd, inf_flat) != r.point)
      throw RelationViolated("even and odd words disagree on [" + x.to_string() + "]^sharp");
  } else {
    r.point = word_image(x.value, Parity::odd, inf);
    if (word_image(x.value, Parity::even, inf_flat) != r.point)
      throw RelationViolated("even and odd words disagree on [" + x.to_string() + "]^flat");
  }
  return r;
}

QRational act(const GroupWord& w, const QRational& x) {
  QRational r;
  r.point = mobius(eval_word(w), x.point);
  r.flavor = word_det(w) < 0 ? opposite(x.flavor) : x.flavor;
  r.value = classical_mobius(classical_matrix(w), x.value);
  return r;
}

QRational act_twisted(const GroupWord& w, const QRational& x) {
  QRational r;
  r.point = apply_op(twisted(w), x.point);
  r.flavor = word_det(w) > 0 ? opposite(x.flavor) : x.flavor;
  r.value = classical_mobius(classical_matrix(w), x.value);
  return r;
}

QRational negate(const QRational& x) {
  const ProjPoint& p = x.point;
  ProjPoint by_reversal = ProjPoint::make(-p.num().reversed().shifted(-1), p.den().reversed());
  ProjPoint other = apply_op(bar_identity(), p);
  ProjPoint by_n = mobius(generator(Gen::N), other);
  if (by_reversal != by_n)
    throw RelationViolated("negation forms disagree: " + by_reversal.to_string() + " vs " + by_n.to_string());
  QRational r;
  r.point = by_reversal;
  r.flavor = x.flavor;
  r.value = x.value.infinite ? x.value : ExtRational(Rational(-x.value.value));
  return r;
}

QRational invert(const QRational& x) {
  const ProjPoint& p = x.point;
  ProjPoint by_reversal = ProjPoint::make(p.den().reversed(), p.num().reversed());
  ProjPoint other = apply_op(bar_identity(), p);
  ProjPoint by_j = mobius(generator(Gen::J), other);
  if (by_reversal != by_j)
    throw RelationViolated("inversion forms disagree: " + by_reversal.to_string() + " vs " + by_j.to_string());
  QRational r;
  r.point = by_reversal;
  r.flavor = x.flavor;
  if (x.value.infinite) r.value = Rational(0);
  else if (x.value.value == 0) r.value = ExtRational::infinity();
  else r.value = Rational(1 / x.value.value);
  return r;
}

FlatSharpReport flat_from_sharp(const ExtRational& x) {
  FlatSharpReport rep;
  rep.x = x;
  rep.sharp = quantize(x, Flavor::sharp).point;
  rep.flat = quantize(x, Flavor::flat).point;
  rep.sharp_from_flat = apply_op(bar_identity(), rep.flat);
  rep.flat_from_sharp = apply_op(bar_identity(), rep.sharp);
  rep.transition_ok = rep.sharp_from_flat == rep.sharp && rep.flat_from_sharp == rep.flat;
  if (!x.infinite) {
    rep.has_combination = true;
    ShapeReport shape = factorization_shape(positive_cf(x.value, Parity::even));
    const LaurentPoly q = LaurentPoly::qpow(1);
    rep.U_sharp = shape.U;
    rep.V_sharp = shape.V;
    rep.U_prev_sharp = shape.U_prev;
    rep.V_prev_sharp = shape.V_prev;
    rep.U_comb = q * shape.U + (1 - q) * shape.U_prev;
    rep.V_comb = q * shape.V + (1 - q) * shape.V_prev;
    rep.combination = ProjPoint::make(rep.U_comb, rep.V_comb);
    rep.combination_ok = rep.combination == rep.flat;
  }
  return rep;
}

}  // namespace qproj
