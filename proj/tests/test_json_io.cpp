#include "support.hpp"

#include "qproj/error.hpp"

using namespace qtest;

TEST_CASE("scalars") {
  CHECK(integer_to_json(Integer(5)) == Json(5));
  Integer big("123456789012345678901234567890");
  CHECK(integer_to_json(big).is_string());
  CHECK(integer_from_json(integer_to_json(big)) == big);
  CHECK(rational_to_json(Rational(7, 5)) == Json("7/5"));
  CHECK(rational_from_json(Json("7/5")) == Rational(7, 5));
  CHECK(rational_from_json(Json(3)) == 3);
  CHECK_THROWS_AS(rational_from_json(Json("x/y")), ParseError);
}

TEST_CASE("polynomial layout") {
  Json j = to_json(LaurentPoly::parse("-q^-1 + 2q^3"));
  CHECK(j.dump() == "[[-1,-1],[3,2]]");
}

TEST_CASE("property: round trips") {
  for (int i = 0; i < 200; ++i) {
    LaurentPoly p = random_poly(6, 6);
    CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);

    LambdaUnit u{uniform(0, 1) ? 1 : -1, uniform(-5, 5), uniform(-3, 3)};
    CHECK(unit_from_json(to_json(u)) == u);

    QMatrix m = eval_word(random_word());
    QMatrix back = matrix_from_json(Json::parse(to_json(m).dump()));
    CHECK(back == m);
    CHECK(back.scale == m.scale);

    Flavor f = uniform(0, 1) ? Flavor::sharp : Flavor::flat;
    ExtRational x = uniform(0, 9) == 0 ? ExtRational::infinity() : ExtRational(random_rational());
    QRational q = quantize(x, f);
    CHECK(qrational_from_json(Json::parse(to_json(q).dump())) == q);
    CHECK(point_from_json(to_json(q.point)) == q.point);

    GroupWord w = random_word();
    CHECK(word_from_json(to_json(w)) == w);

    if (!x.infinite) {
      CFExpansion cf = positive_cf(x.value, Parity::even);
      CHECK(cf_from_json(to_json(cf)) == cf);
      CFExpansion neg = negative_cf(x.value);
      CHECK(cf_from_json(to_json(neg)) == neg);
      QSeries s = taylor(q.point.is_infinity() ? ProjPoint::zero() : q.point, uniform(1, 30));
      CHECK(series_from_json(Json::parse(to_json(s).dump())) == s);
    }
  }
  QSeries exact = QSeries::from_poly(LaurentPoly::parse("1 + q^4"));
  CHECK(to_json(exact)["precision"].is_null());
  CHECK(series_from_json(to_json(exact)) == exact);
  QSeries frac = QSeries::from_coeffs(-2, {Rational(1, 3), 0, Rational(-5, 2)}, 7);
  CHECK(series_from_json(to_json(frac)) == frac);
}

TEST_CASE("report shapes") {
  Json t = to_json(check_palindrome_det_neg(GroupWord::parse("N R^2 S R^2 S R^3 S")));
  CHECK(t["trace"] == "-(1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6)");
  CHECK(t["sign"] == "negative");
  CHECK(t["palindromic"] == true);
  Json v = to_json(quantized_vieta_deg4(5, 10));
  CHECK(v["ok"] == true);
  CHECK(v["roots"].size() == 4);
  CHECK(v["polynomial"] == "x^4 - 5x^2 + 1");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(poly_from_json(Json::parse("[[1]]")), ParseError);
  CHECK_THROWS_AS(qrational_from_json(Json::parse("{\"value\":\"1\"}")), ParseError);
}
