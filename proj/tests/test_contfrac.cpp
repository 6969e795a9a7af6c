#include "support.hpp"

#include "qproj/error.hpp"

using namespace qtest;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

// Classical value of a positive expansion, computed from the convergent
// recurrence p_k = a_k p_{k-1} + p_{k-2} rather than from the back.
Rational by_convergents(const std::vector<long>& a) {
  Integer p0 = 1, q0 = 0, p1 = a[0], q1 = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    Integer p2 = a[i] * p1 + p0, q2 = a[i] * q1 + q0;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
  }
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("expansions of 7/5 and integers") {
  CHECK(positive_cf(Rational(7, 5), Parity::even).digits == std::vector<long>{1, 2, 1, 1});
  CHECK(positive_cf(Rational(7, 5), Parity::odd).digits == std::vector<long>{1, 2, 2});
  CHECK(positive_cf(Rational(3), Parity::even).digits == std::vector<long>{2, 1});
  CHECK(positive_cf(Rational(3), Parity::odd).digits == std::vector<long>{3});
  CHECK(negative_cf(Rational(7, 5)).digits == std::vector<long>{2, 2, 3});
  CHECK(negative_cf(Rational(3)).digits == std::vector<long>{3});
  CHECK(negative_cf(Rational(-7, 5)).digits.front() == -1);
  CHECK(evaluate(negative_cf(Rational(-7, 5))) == Rational(-7, 5));
}

TEST_CASE("digit syntax") {
  CHECK(CFExpansion::parse("neg:2,2,3").kind == CFKind::negative);
  CHECK(CFExpansion::parse("1,2,2").to_string() == "1,2,2");
  CHECK_THROWS_AS(CFExpansion::parse("1,0,2"), ShapeMismatch);
  CHECK_THROWS_AS(CFExpansion::parse("neg:2,1"), ShapeMismatch);
  CHECK_THROWS_AS(CFExpansion::parse("1,x"), ParseError);
}

TEST_CASE("words of expansions") {
  CHECK(cf_to_word(CFExpansion::parse("1,2,2")).to_string() == "R J R^2 J R^2 J");
  GroupWord w = cf_to_word(CFExpansion::parse("neg:2,2,3"), true);
  CHECK(w.to_string() == "N R^2 S R^2 S R^3 S");
  CHECK(classical_matrix(w).proj_equal(IntMatrix{-7, 3, 5, -2}));
  CHECK(cf_to_word(CFExpansion::parse("0")).to_string() == "J");
}

TEST_CASE("factorization shapes of 7/5") {
  ShapeReport even = factorization_shape(CFExpansion::parse("1,2,1,1"));
  CHECK(even.unit == LambdaUnit{1, 0, 2});
  CHECK(even.value == ProjPoint::make(P("1 + q + 2q^2 + 2q^3 + q^4"), P("1 + q + 2q^2 + q^3")));
  CHECK(even.columns_exact);
  ShapeReport odd = factorization_shape(CFExpansion::parse("1,2,2"));
  CHECK(odd.unit == LambdaUnit{1, 0, 1});
  CHECK(odd.value == ProjPoint::make(P("1 + q + q^2 + 2q^3 + q^4 + q^5"), P("1 + q + q^2 + q^3 + q^4")));
  CHECK(odd.columns_exact);
  ShapeReport neg = factorization_shape(CFExpansion::parse("neg:2,2,3"));
  CHECK(neg.columns_match);
  CHECK(neg.unit == LambdaUnit{1, -1, 0});
}

TEST_CASE("property: expansions evaluate back") {
  for (int i = 0; i < 500; ++i) {
    Rational x = random_rational(200, 90);
    for (Parity par : {Parity::even, Parity::odd}) {
      CFExpansion cf = positive_cf(x, par);
      CHECK(cf.digits.size() % 2 == (par == Parity::even ? 0u : 1u));
      CHECK(by_convergents(cf.digits) == x);
      CHECK(evaluate(cf) == x);
    }
    CHECK(evaluate(negative_cf(x)) == x);
  }
}

TEST_CASE("property: the two parities differ by the tail rewrite") {
  for (int i = 0; i < 300; ++i) {
    Rational x = random_rational(200, 90);
    auto e = positive_cf(x, Parity::even).digits, o = positive_cf(x, Parity::odd).digits;
    auto& longer = e.size() > o.size() ? e : o;
    auto& shorter = e.size() > o.size() ? o : e;
    REQUIRE(longer.size() == shorter.size() + 1);
    CHECK(longer.back() == 1);
    CHECK(std::equal(shorter.begin(), shorter.end() - 1, longer.begin()));
    CHECK(longer[longer.size() - 2] + 1 == shorter.back());
  }
}

TEST_CASE("property: the expansion word sends infinity to x") {
  for (int i = 0; i < 300; ++i) {
    Rational x = random_rational();
    GroupWord w = cf_to_word(positive_cf(x, Parity::even));
    CHECK(classical_mobius(classical_matrix(w), ExtRational::infinity()) == ExtRational(x));
    CHECK(mobius(eval_word(w), ProjPoint::infinity()) == quantize(x, Flavor::sharp).point);
  }
}

TEST_CASE("property: factorization shapes match the convergents") {
  // Columns always give the quantized convergents as points; for a1 >= 0 the
  // column polynomials are literally the canonical numerators/denominators
  // (for a1 < 0 they carry an extra power of q).
  for (int i = 0; i < 200; ++i) {
    Rational x = random_rational();
    auto even = positive_cf(x, Parity::even);
    ShapeReport e = factorization_shape(even);
    CHECK(e.columns_match);
    if (even.digits[0] >= 0) CHECK(e.columns_exact);
    auto odd = positive_cf(x, Parity::odd);
    if (odd.digits.size() >= 3) {
      ShapeReport o = factorization_shape(odd);
      CHECK(o.columns_match);
      if (odd.digits[0] >= 0) CHECK(o.columns_exact);
    }
    CHECK(factorization_shape(negative_cf(x)).columns_match);
  }
}
