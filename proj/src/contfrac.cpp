#include "qproj/contfrac.hpp"

#include "qproj/error.hpp"

#include <sstream>

namespace qproj {

namespace {

Integer floor_q(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& x) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw OutOfRange("continued-fraction digit " + z.get_str() + " too large");
  return z.get_si();
}

}  // namespace

void CFExpansion::validate() const {
  if (digits.empty()) throw ShapeMismatch("empty continued fraction");
  long lower = kind == CFKind::positive ? 1 : 2;
  for (std::size_t i = 1; i < digits.size(); ++i)
    if (digits[i] < lower)
      throw ShapeMismatch("digit " + std::to_string(digits[i]) + " at position " + std::to_string(i + 1) +
                          " in " + to_string());
}

std::string CFExpansion::to_string() const {
  std::ostringstream os;
  if (kind == CFKind::negative) os << "neg:";
  for (std::size_t i = 0; i < digits.size(); ++i) os << (i ? "," : "") << digits[i];
  return os.str();
}

CFExpansion CFExpansion::parse(std::string_view text) {
  CFExpansion cf;
  std::string s(text);
  if (s.rfind("neg:", 0) == 0) {
    cf.kind = CFKind::negative;
    s = s.substr(4);
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long v = std::stol(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      cf.digits.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad digit '" + item + "' in '" + std::string(text) + "'");
    }
  }
  cf.validate();
  return cf;
}

CFExpansion positive_cf(const Rational& x, Parity parity) {
  CFExpansion cf;
  Rational y = x;
  while (true) {
    Integer a = floor_q(y);
    cf.digits.push_back(to_long(a));
    Rational frac = y - Rational(a);
    if (frac == 0) break;
    y = 1 / frac;
  }
  bool even = cf.digits.size() % 2 == 0;
  if (even != (parity == Parity::even)) {
    // Euclid's expansion ends with a digit >= 2 unless it has length one.
    if (cf.digits.size() >= 2 && cf.digits.back() == 1) {
      cf.digits.pop_back();
      cf.digits.back() += 1;
    } else {
      cf.digits.back() -= 1;
      cf.digits.push_back(1);
    }
  }
  return cf;
}

CFExpansion negative_cf(const Rational& x) {
  CFExpansion cf;
  cf.kind = CFKind::negative;
  Rational y = x;
  while (true) {
    Integer c = ceil_q(y);
    cf.digits.push_back(to_long(c));
    Rational rest = Rational(c) - y;
    if (rest == 0) break;
    y = 1 / rest;
  }
  return cf;
}

Rational evaluate(const CFExpansion& cf) {
  cf.validate();
  Rational v = cf.digits.back();
  for (std::size_t i = cf.digits.size() - 1; i-- > 0;) {
    if (v == 0) throw ShapeMismatch("division by zero evaluating " + cf.to_string());
    Rational inv = 1 / v;
    v = cf.kind == CFKind::positive ? Rational(cf.digits[i] + inv) : Rational(cf.digits[i] - inv);
  }
  return v;
}

GroupWord cf_to_word(const CFExpansion& cf, bool n_prefix) {
  std::vector<Letter> ls;
  if (n_prefix) ls.push_back({Gen::N, 1});
  Gen tail = cf.kind == CFKind::positive ? Gen::J : Gen::S;
  for (long d : cf.digits) {
    ls.push_back({Gen::R, d});  // exponent 0 is dropped by GroupWord
    ls.push_back({tail, 1});
  }
  return GroupWord(std::move(ls));
}

namespace {

const ProjPoint& flat_base() {
  static const ProjPoint p = ProjPoint::make(1, 1 - LaurentPoly::qpow(1));
  return p;
}

// Quantization of y read off a positive expansion of the given parity:
// sharp is even-word(1/0) or odd-word(1/(1-q)); flat the other way round.
ProjPoint quantize_via(const Rational& y, bool sharp, Parity parity) {
  CFExpansion cf = positive_cf(y, parity);
  bool even = parity == Parity::even;
  ProjPoint base = (even == sharp) ? ProjPoint::infinity() : flat_base();
  return mobius(eval_word(cf_to_word(cf)), base);
}

LaurentPoly divide_or_mismatch(const LaurentPoly& a, const LaurentPoly& b, const std::string& what) {
  auto r = try_div_exact(a, b);
  if (!r) throw ShapeMismatch(what);
  return *r;
}

}  // namespace

ShapeReport factorization_shape(const CFExpansion& cf) {
  cf.validate();
  ShapeReport rep;
  const std::size_t n = cf.digits.size();
  const LaurentPoly q = LaurentPoly::qpow(1);
  LaurentPoly col1_factor, col2_factor;
  if (cf.kind == CFKind::positive) {
    if (n % 2 == 1 && n < 3) throw ShapeMismatch("odd expansion needs at least three digits");
    rep.word = cf_to_word(cf);
    rep.unit = {1, std::min(0L, cf.digits[0]), static_cast<long>(n / 2)};
    col1_factor = q;
    col2_factor = 1;
  } else {
    rep.word = cf_to_word(cf, true);
    rep.unit = {1, std::min(0L, cf.digits[0]) - 1, 0};
    col1_factor = 1;
    col2_factor = -LaurentPoly::qpow(cf.digits.back() - 1);
  }
  rep.product = eval_word(rep.word);
  // Divide the represented matrix by the unit; the scale of the product is
  // folded in so the entries become the displayed polynomials.
  LambdaUnit rest = rep.product.scale * rep.unit.inverse();
  auto entry = [&](const LaurentPoly& e) {
    try {
      return apply_unit(rest, e);
    } catch (const NotDivisible&) {
      throw ShapeMismatch("unit " + rep.unit.to_string() + " does not divide " + rep.product.to_string());
    }
  };
  rep.matrix = {entry(rep.product.a), entry(rep.product.b), entry(rep.product.c), entry(rep.product.d)};
  const std::string ctx = " in the factorization of " + cf.to_string();
  rep.U = divide_or_mismatch(rep.matrix.a, col1_factor, "column factor" + ctx);
  rep.V = divide_or_mismatch(rep.matrix.c, col1_factor, "column factor" + ctx);
  rep.U_prev = divide_or_mismatch(rep.matrix.b, col2_factor, "column factor" + ctx);
  rep.V_prev = divide_or_mismatch(rep.matrix.d, col2_factor, "column factor" + ctx);
  rep.value = ProjPoint::make(rep.U, rep.V);
  rep.previous = ProjPoint::make(rep.U_prev, rep.V_prev);

  CFExpansion prefix = cf;
  prefix.digits.pop_back();
  if (cf.kind == CFKind::positive) {
    bool sharp = n % 2 == 0;
    Rational x = evaluate(cf), x_prev = evaluate(prefix);
    // The other parity's word gives an independent computation.
    rep.expected_value = quantize_via(x, sharp, n % 2 == 0 ? Parity::odd : Parity::even);
    rep.expected_previous = quantize_via(x_prev, sharp, Parity::even);
  } else {
    Rational x = evaluate(cf);
    rep.expected_value = quantize_via(-x, false, Parity::odd);
    rep.expected_previous = prefix.digits.empty() ? flat_base() : quantize_via(-evaluate(prefix), false, Parity::odd);
  }
  rep.columns_match = rep.value == rep.expected_value && rep.previous == rep.expected_previous;
  rep.columns_exact = rep.columns_match && rep.U == rep.expected_value.num() &&
                      rep.V == rep.expected_value.den() && rep.U_prev == rep.expected_previous.num() &&
                      rep.V_prev == rep.expected_previous.den();
  return rep;
}

}  // namespace qproj
