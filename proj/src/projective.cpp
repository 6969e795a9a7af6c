#include "qproj/projective.hpp"

#include "qproj/error.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qproj {

LaurentPoly LambdaUnit::to_poly() const {
  if (tpow < 0) throw NotDivisible("unit " + to_string() + " is not a Laurent polynomial");
  return LaurentPoly::t().pow(static_cast<unsigned>(tpow)).shifted(qpow).scaled(sign);
}

std::string LambdaUnit::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << '-';
  bool any = false;
  if (qpow != 0) {
    os << 'q';
    if (qpow != 1) os << '^' << qpow;
    any = true;
  }
  if (tpow != 0) {
    if (any) os << ' ';
    os << 't';
    if (tpow != 1) os << '^' << tpow;
    any = true;
  }
  if (!any) os << '1';
  return os.str();
}

std::optional<LambdaUnit> as_unit(const LaurentPoly& p) {
  if (p.is_zero()) return std::nullopt;
  long k = t_multiplicity(p);
  LaurentPoly rest = div_exact(p, LaurentPoly::t().pow(static_cast<unsigned>(k)));
  if (!rest.is_monomial() || abs(rest.leading()) != 1) return std::nullopt;
  return LambdaUnit{rest.leading() > 0 ? 1 : -1, rest.valuation(), k};
}

LaurentPoly apply_unit(const LambdaUnit& u, const LaurentPoly& p) {
  LaurentPoly r = p.shifted(u.qpow).scaled(u.sign);
  if (u.tpow >= 0) return r * LaurentPoly::t().pow(static_cast<unsigned>(u.tpow));
  return div_exact(r, LaurentPoly::t().pow(static_cast<unsigned>(-u.tpow)));
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d, x.scale * y.scale};
}

bool operator==(const QMatrix& x, const QMatrix& y) {
  auto u = proportionality(x, y);
  return u && u->is_one();
}

LaurentPoly QMatrix::entry_det() const { return a * d - b * c; }

LambdaUnit QMatrix::det() const {
  auto u = as_unit(entry_det());
  if (!u) throw NotInvertible("determinant " + entry_det().to_string() + " is not a unit");
  return scale * scale * *u;
}

QMatrix QMatrix::inverse() const {
  auto u = as_unit(entry_det());
  if (!u) throw NotInvertible("determinant " + entry_det().to_string() + " is not a unit");
  return {d, -b, -c, a, scale.inverse() * u->inverse()};
}

QMatrix QMatrix::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QMatrix result, base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

QMatrix QMatrix::reversed() const {
  return {a.reversed(), b.reversed(), c.reversed(), d.reversed(), scale.reversed()};
}

QMatrix QMatrix::stripped() const {
  std::array<const LaurentPoly*, 4> es{&a, &b, &c, &d};
  long k = -1, m = 0;
  bool first = true;
  for (auto* e : es) {
    if (e->is_zero()) continue;
    long tk = t_multiplicity(*e);
    k = (k < 0) ? tk : std::min(k, tk);
    m = first ? e->valuation() : std::min(m, e->valuation());
    first = false;
  }
  if (first) return *this;  // zero matrix
  LaurentPoly tk = LaurentPoly::t().pow(static_cast<unsigned>(k));
  auto strip = [&](const LaurentPoly& e) { return div_exact(e, tk).shifted(-m); };
  return {strip(a), strip(b), strip(c), strip(d), scale * LambdaUnit{1, m, k}};
}

int QMatrix::classical_det_sign() const {
  Integer v = entry_det().eval_at_one();
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  if (!scale.is_one()) os << scale.to_string() << " * ";
  os << "[[" << a.to_string() << ", " << b.to_string() << "], [" << c.to_string() << ", "
     << d.to_string() << "]]";
  return os.str();
}

std::optional<LambdaUnit> proportionality(const QMatrix& x, const QMatrix& y) {
  std::array<const LaurentPoly*, 4> xs{&x.a, &x.b, &x.c, &x.d};
  std::array<const LaurentPoly*, 4> ys{&y.a, &y.b, &y.c, &y.d};
  std::optional<LambdaUnit> w;
  for (std::size_t i = 0; i < 4 && !w; ++i) {
    if (xs[i]->is_zero() != ys[i]->is_zero()) return std::nullopt;
    if (xs[i]->is_zero()) continue;
    if (auto g = try_div_exact(*xs[i], *ys[i])) {
      w = as_unit(*g);
    } else if (auto h = try_div_exact(*ys[i], *xs[i])) {
      if (auto v = as_unit(*h)) w = v->inverse();
    }
    if (!w) return std::nullopt;
  }
  if (!w) return std::nullopt;  // both zero matrices
  // Verify every entry: x_j = w * y_j, cross-multiplied to stay polynomial.
  LambdaUnit num{w->sign, w->qpow, std::max(w->tpow, 0L)};
  LambdaUnit den{1, 0, std::max(-w->tpow, 0L)};
  for (std::size_t j = 0; j < 4; ++j)
    if (apply_unit(den, *xs[j]) != apply_unit(num, *ys[j])) return std::nullopt;
  return x.scale * *w * y.scale.inverse();
}

bool proj_equal(const QMatrix& x, const QMatrix& y) { return proportionality(x, y).has_value(); }

ProjPoint ProjPoint::make(const LaurentPoly& num, const LaurentPoly& den) {
  ProjPoint p;
  if (num.is_zero() && den.is_zero()) throw BothZero("0/0 is not a projective point");
  if (den.is_zero()) {
    p.num_ = 1;
    return p;
  }
  if (num.is_zero()) {
    p.den_ = 1;
    return p;
  }
  LaurentPoly g = gcd(num, den);
  LaurentPoly n = div_exact(num, g), d = div_exact(den, g);
  long shift = -d.valuation();
  n = n.shifted(shift);
  d = d.shifted(shift);
  if (d.leading() < 0) {
    n = -n;
    d = -d;
  }
  p.num_ = std::move(n);
  p.den_ = std::move(d);
  return p;
}

namespace {

std::string strip_parens(std::string s) {
  auto b = s.find_first_not_of(' ');
  auto e = s.find_last_not_of(' ');
  if (b == std::string::npos) return {};
  s = s.substr(b, e - b + 1);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  return s;
}

std::string side(const LaurentPoly& p) {
  return p.term_count() > 1 ? "(" + p.to_string() + ")" : p.to_string();
}

}  // namespace

ProjPoint ProjPoint::parse(std::string_view text) {
  std::string s(text);
  int depth = 0;
  std::size_t slash = std::string::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')') --depth;
    else if (s[i] == '/' && depth == 0) {
      if (slash != std::string::npos) throw ParseError("more than one '/' in '" + s + "'");
      slash = i;
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses in '" + s + "'");
  if (slash == std::string::npos) return make(LaurentPoly::parse(strip_parens(s)), 1);
  return make(LaurentPoly::parse(strip_parens(s.substr(0, slash))),
              LaurentPoly::parse(strip_parens(s.substr(slash + 1))));
}

std::string ProjPoint::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string();
  return side(num_) + "/" + side(den_);
}

ProjPoint mobius(const QMatrix& m, const ProjPoint& x) {
  LaurentPoly n = m.a * x.num() + m.b * x.den();
  LaurentPoly d = m.c * x.num() + m.d * x.den();
  if (n.is_zero() && d.is_zero())
    throw Indeterminate("image of " + x.to_string() + " under " + m.to_string() + " is 0/0");
  return ProjPoint::make(n, d);
}

std::vector<ProjPoint> fixed_points(const QMatrix& m) {
  const LaurentPoly A = m.a - m.d;
  const LaurentPoly& B = m.b;
  const LaurentPoly& C = m.c;
  if (A.is_zero() && B.is_zero() && C.is_zero())
    throw OutOfRange("scalar matrix fixes every point");
  std::vector<ProjPoint> out;
  auto add = [&](const ProjPoint& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  if (C.is_zero()) {
    // g * (A h + B g) = 0.
    add(ProjPoint::infinity());
    if (!A.is_zero()) add(ProjPoint::make(-B, A));
    return out;
  }
  auto s = try_sqrt(A * A + B * C.scaled(4));
  if (!s) return out;
  add(ProjPoint::make(A + *s, C.scaled(2)));
  add(ProjPoint::make(A - *s, C.scaled(2)));
  return out;
}

bool is_fixed(const QMatrix& m, const ProjPoint& x) { return mobius(m, x) == x; }

}  // namespace qproj
