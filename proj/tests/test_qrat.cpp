#include "support.hpp"

#include "qproj/error.hpp"

using namespace qtest;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
ProjPoint pt(const char* num, const char* den) { return ProjPoint::make(P(num), P(den)); }

// Independent quantization from the two rules [x + 1] = q[x] + 1 and
// [-1/x] = -q^-1/[x], which hold for both flavors, seeded with
// [0]^sharp = 0 and [0]^flat = 1 - q^-1 (the image of 1/(1-q) under S).
std::pair<LaurentPoly, LaurentPoly> oracle(Rational x, Flavor f) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  long a = fl.get_si();
  Rational r = x - a;
  LaurentPoly num, den;
  if (r == 0) {
    num = f == Flavor::sharp ? LaurentPoly(0) : P("1 - q^-1");
    den = 1;
  } else {
    // r in (0,1): r = -1/y with y = -1/r < -1.
    auto [yn, yd] = oracle(Rational(-1 / r), f);
    num = -yd.shifted(-1);
    den = yn;
  }
  // shift by a: [x + a] = q^a [x] + [a]_q.
  return {num.shifted(a) + LaurentPoly::qint(a) * den, den};
}

ProjPoint oracle_point(const Rational& x, Flavor f) {
  auto [n, d] = oracle(x, f);
  return ProjPoint::make(n, d);
}
}  // namespace

TEST_CASE("integers") {
  CHECK(quantize(5, Flavor::sharp).point == ProjPoint::make(P("1 + q + q^2 + q^3 + q^4"), 1));
  CHECK(quantize(5, Flavor::flat).point == ProjPoint::make(P("1 + q + q^2 + q^3 + q^5"), 1));
  for (long n = 1; n <= 10; ++n) {
    CHECK(quantize(n, Flavor::sharp).point == ProjPoint::make(LaurentPoly::qint(n), 1));
    CHECK(quantize(n, Flavor::flat).point ==
          ProjPoint::make(LaurentPoly::qint(n) - LaurentPoly::qpow(n - 1) + LaurentPoly::qpow(n), 1));
  }
  CHECK(quantize(-3, Flavor::flat).point == ProjPoint::make(P("-q^-1 - q^-2 - q^-4"), 1));
}

TEST_CASE("rational examples") {
  CHECK(quantize(Rational(7, 5), Flavor::sharp).point == pt("1 + q + 2q^2 + 2q^3 + q^4", "1 + q + 2q^2 + q^3"));
  CHECK(quantize(Rational(7, 5), Flavor::flat).point ==
        pt("1 + q + q^2 + 2q^3 + q^4 + q^5", "1 + q + q^2 + q^3 + q^4"));
  CHECK(quantize(Rational(11, 3), Flavor::sharp).point ==
        pt("1 + 2q + 3q^2 + 2q^3 + 2q^4 + q^5", "1 + q + q^2"));
  CHECK(quantize(Rational(3, 2), Flavor::flat).point == pt("1 + q^2 + q^3", "1 + q^2"));
  CHECK(quantize(ExtRational::infinity(), Flavor::flat).point == pt("1", "1 - q"));
}

TEST_CASE("actions") {
  QRational three = quantize(3, Flavor::sharp);
  QRational r = act(GroupWord::parse("N"), three);
  CHECK(r.flavor == Flavor::flat);
  CHECK(r.value == ExtRational(-3));
  CHECK(r.point == quantize(-3, Flavor::flat).point);
  CHECK(act(GroupWord::parse("N"), quantize(3, Flavor::flat)).point ==
        ProjPoint::make(-LaurentPoly::qint(3).reversed().shifted(-1), 1));
  CHECK(act(GroupWord::parse("R"), quantize(Rational(7, 5), Flavor::sharp)).point ==
        quantize(Rational(12, 5), Flavor::sharp).point);
  CHECK(act(GroupWord::parse("R^3 J"), quantize(Rational(3, 2), Flavor::flat)).point ==
        pt("1 + 2q + 3q^2 + 2q^3 + 2q^4 + q^5", "1 + q + q^2"));
  CHECK(act_twisted(GroupWord::parse("J"), quantize(Rational(7, 5), Flavor::sharp)).point ==
        quantize(Rational(5, 7), Flavor::sharp).point);
  QRational r4 = act_twisted(GroupWord::parse("R"), quantize(4, Flavor::sharp));
  CHECK(r4.flavor == Flavor::flat);
  CHECK(r4.point == quantize(5, Flavor::flat).point);
  CHECK(act_twisted(GroupWord{}, quantize(Rational(3, 2), Flavor::flat)).point ==
        quantize(Rational(3, 2), Flavor::sharp).point);
}

TEST_CASE("negation and inversion") {
  CHECK(negate(quantize(1, Flavor::sharp)).point == ProjPoint::make(P("-q^-1"), 1));
  CHECK(negate(quantize(Rational(5, 2), Flavor::sharp)).point == quantize(Rational(-5, 2), Flavor::sharp).point);
  CHECK(negate(quantize(ExtRational::infinity(), Flavor::sharp)).point == ProjPoint::infinity());
  CHECK(invert(quantize(Rational(7, 5), Flavor::sharp)).point == quantize(Rational(5, 7), Flavor::sharp).point);
  CHECK(invert(quantize(1, Flavor::sharp)).point == quantize(1, Flavor::sharp).point);
  CHECK(invert(quantize(3, Flavor::sharp)).point == quantize(Rational(1, 3), Flavor::sharp).point);
}

TEST_CASE("passing between flavors") {
  FlatSharpReport r = flat_from_sharp(Rational(7, 5));
  CHECK(r.ok());
  CHECK(r.combination == pt("1 + q + q^2 + 2q^3 + q^4 + q^5", "1 + q + q^2 + q^3 + q^4"));
  CHECK(flat_from_sharp(ExtRational::infinity()).transition_ok);
  CHECK(flat_from_sharp(6).ok());
}

TEST_CASE("parsing") {
  CHECK(ExtRational::parse("14/10") == ExtRational(Rational(7, 5)));
  CHECK(ExtRational::parse("1/0") == ExtRational::infinity());
  CHECK_THROWS_AS(ExtRational::parse("0/0"), ParseError);
  CHECK_THROWS_AS(ExtRational::parse("seven"), ParseError);
  CHECK_THROWS_AS(flavor_from_name("middle"), ParseError);
}

TEST_CASE("property: quantization agrees with the translation/inversion oracle") {
  for (int i = 0; i < 400; ++i) {
    Rational x = random_rational();
    for (Flavor f : {Flavor::sharp, Flavor::flat}) {
      QRational r = quantize(x, f);
      CHECK(r.point == oracle_point(x, f));
      CHECK(eval_at_one(r.point) == ExtRational(x));
    }
  }
}

TEST_CASE("property: translation and inversion rules") {
  LaurentPoly q = LaurentPoly::qpow(1);
  for (int i = 0; i < 300; ++i) {
    Rational x = random_rational();
    for (Flavor f : {Flavor::sharp, Flavor::flat}) {
      ProjPoint p = quantize(x, f).point, p1 = quantize(Rational(x + 1), f).point;
      CHECK(p1 == ProjPoint::make(q * p.num() + p.den(), p.den()));
    }
    if (x != 0) {
      ProjPoint p = quantize(x, Flavor::sharp).point;
      CHECK(quantize(Rational(-1 / x), Flavor::sharp).point == ProjPoint::make(-p.den(), q * p.num()));
    }
  }
}

TEST_CASE("property: two words with the same classical matrix act the same way") {
  const GroupWord relators[] = {GroupWord::parse("S^2"), GroupWord::parse("R S R S R S"), GroupWord::parse("N^2"),
                                GroupWord::parse("N R N R"), GroupWord::parse("N S N S")};
  for (int i = 0; i < 200; ++i) {
    GroupWord u = random_word(4), v = random_word(4);
    GroupWord w1 = u * v, w2 = u * relators[uniform(0, 4)] * v;
    QRational x = quantize(random_rational(), uniform(0, 1) ? Flavor::sharp : Flavor::flat);
    CHECK(act(w1, x) == act(w2, x));
  }
}

TEST_CASE("property: nonnegative coefficients for x >= 1") {
  for (int i = 0; i < 300; ++i) {
    Rational x(uniform(25, 400), uniform(1, 25));
    x.canonicalize();
    if (x < 1) continue;
    for (Flavor f : {Flavor::sharp, Flavor::flat}) {
      ProjPoint p = quantize(x, f).point;
      CHECK(p.num().is_nonnegative());
      CHECK(p.den().is_nonnegative());
    }
  }
}

TEST_CASE("property: one lift per value at q = 1 among the flavors") {
  // Distinct rationals never share a quantization and the two flavors of a
  // finite x differ.
  for (int i = 0; i < 300; ++i) {
    Rational x = random_rational(), y = random_rational();
    if (x != y) CHECK(quantize(x, Flavor::sharp).point != quantize(y, Flavor::sharp).point);
    CHECK(quantize(x, Flavor::sharp).point != quantize(x, Flavor::flat).point);
  }
}

TEST_CASE("property: flavor flip rules") {
  Corpus c(99);
  for (int i = 0; i < 300; ++i) {
    GroupWord w = c.word();
    ExtRational x = c.rational();
    Flavor f = c.uniform(0, 1) ? Flavor::sharp : Flavor::flat;
    CHECK(flavor_rule_holds(w, x, f, false));
    CHECK(flavor_rule_holds(w, x, f, true));
  }
}
