#include "support.hpp"

#include "qproj/error.hpp"

using namespace qtest;

namespace {

QMatrix random_matrix() {
  QMatrix m(random_poly(3, 2), random_poly(3, 2), random_poly(3, 2), random_poly(3, 2));
  m.scale = {uniform(0, 1) ? 1 : -1, uniform(-2, 2), uniform(-1, 1)};
  return m;
}

// Entry of a represented matrix at a rational q, scale included.
Rational eval_entry(const QMatrix& m, const LaurentPoly& e, const Rational& q) {
  Rational s = m.scale.sign;
  Rational t = q * q - q + 1;
  for (long i = 0; i < std::abs(m.scale.qpow); ++i) s = m.scale.qpow > 0 ? Rational(s * q) : Rational(s / q);
  for (long i = 0; i < std::abs(m.scale.tpow); ++i) s = m.scale.tpow > 0 ? Rational(s * t) : Rational(s / t);
  return s * eval_at(e, q);
}

}  // namespace

TEST_CASE("units") {
  LambdaUnit u{-1, 2, 1};
  CHECK(u * u.inverse() == LambdaUnit::one());
  CHECK(u.to_poly() == -LaurentPoly::t().shifted(2));
  CHECK(*as_unit(-LaurentPoly::t().shifted(2)) == u);
  CHECK_FALSE(as_unit(LaurentPoly::qint(3)).has_value());
  CHECK(LambdaUnit{1, 0, 1}.reversed() == LambdaUnit{1, -2, 1});
  CHECK_THROWS_AS(apply_unit({1, 0, -1}, LaurentPoly::qint(3)), NotDivisible);
  CHECK(apply_unit({1, 0, -1}, LaurentPoly::t().shifted(1)) == LaurentPoly::qpow(1));
}

TEST_CASE("canonical points") {
  ProjPoint p = ProjPoint::make(LaurentPoly::t() * 2, LaurentPoly::t().shifted(3) * -4);
  CHECK(p.num() == -LaurentPoly::qpow(-3));
  CHECK(p.den() == LaurentPoly(2));
  CHECK(ProjPoint::make(5, 0) == ProjPoint::infinity());
  CHECK(ProjPoint::make(0, LaurentPoly::t()) == ProjPoint::zero());
  CHECK_THROWS_AS(ProjPoint::make(0, 0), BothZero);
  ProjPoint r = ProjPoint::parse("(1 + q)/(1 - q)");
  CHECK(r.den().valuation() == 0);
  CHECK(r.den().leading() > 0);
  CHECK(ProjPoint::parse(r.to_string()) == r);
}

TEST_CASE("property: matrix products agree with evaluation at rational q") {
  for (int i = 0; i < 200; ++i) {
    QMatrix x = random_matrix(), y = random_matrix();
    QMatrix p = x * y;
    for (Rational q : {Rational(2), Rational(1, 3), Rational(-5, 2)}) {
      Rational xa = eval_entry(x, x.a, q), xb = eval_entry(x, x.b, q), xc = eval_entry(x, x.c, q),
               xd = eval_entry(x, x.d, q);
      Rational ya = eval_entry(y, y.a, q), yb = eval_entry(y, y.b, q), yc = eval_entry(y, y.c, q),
               yd = eval_entry(y, y.d, q);
      CHECK(eval_entry(p, p.a, q) == xa * ya + xb * yc);
      CHECK(eval_entry(p, p.b, q) == xa * yb + xb * yd);
      CHECK(eval_entry(p, p.c, q) == xc * ya + xd * yc);
      CHECK(eval_entry(p, p.d, q) == xc * yb + xd * yd);
    }
  }
}

TEST_CASE("property: inverses of unit-determinant matrices") {
  for (int i = 0; i < 200; ++i) {
    GroupWord w = random_word();
    QMatrix m = eval_word(w);
    CHECK(m * m.inverse() == QMatrix::identity());
    CHECK(m.inverse() * m == QMatrix::identity());
    CHECK(m.pow(3) == m * m * m);
    CHECK(m.pow(-2) == m.inverse() * m.inverse());
  }
  CHECK_THROWS_AS(QMatrix(1, 1, 1, 1).inverse(), NotInvertible);
}

TEST_CASE("property: Moebius action is compatible with products") {
  for (int i = 0; i < 200; ++i) {
    QMatrix x = eval_word(random_word()), y = eval_word(random_word());
    ProjPoint p = ProjPoint::make(random_nonzero_poly(3, 2), random_nonzero_poly(3, 2));
    CHECK(mobius(x * y, p) == mobius(x, mobius(y, p)));
  }
}

TEST_CASE("property: stripping keeps the represented matrix") {
  for (int i = 0; i < 200; ++i) {
    QMatrix m = eval_word(random_word()) * QMatrix::scalar({1, uniform(-2, 2), uniform(0, 2)});
    CHECK(m.stripped() == m);
    CHECK(proj_equal(m, m.stripped()));
  }
}

TEST_CASE("proportionality") {
  QMatrix m = eval_word(GroupWord::parse("R^2 S"));
  auto u = proportionality(m * QMatrix::scalar({-1, 3, 2}), m);
  REQUIRE(u.has_value());
  CHECK(*u == LambdaUnit{-1, 3, 2});
  CHECK_FALSE(proportionality(m, eval_word(GroupWord::parse("R S"))).has_value());
}

TEST_CASE("fixed points") {
  QMatrix r = eval_word(GroupWord::parse("R"));
  auto pts = fixed_points(r);
  for (const auto& p : pts) CHECK(is_fixed(r, p));
  CHECK_THROWS_AS(fixed_points(QMatrix::identity()), OutOfRange);
}
