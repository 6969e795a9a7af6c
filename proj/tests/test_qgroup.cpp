#include "support.hpp"

#include "qproj/error.hpp"

using namespace qtest;

namespace {
LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_CASE("generator matrices") {
  CHECK(generator(Gen::R) == QMatrix(P("q"), 1, 0, 1));
  CHECK(generator(Gen::S) == QMatrix(0, P("-q^-1"), 1, 0));
  CHECK(generator(Gen::N) == QMatrix(-1, P("1 - q^-1"), P("q - 1"), 1));
  CHECK(generator(Gen::J) == QMatrix(P("q - 1"), 1, P("q"), P("1 - q")));
  CHECK(generator(Gen::L) == QMatrix(1, 0, 1, P("q^-1")));
  CHECK(generator(Gen::I) == QMatrix(1, P("q - 1"), P("1 - q"), P("q")));
  CHECK_THROWS_AS(generator("X"), UnknownGenerator);
}

TEST_CASE("word examples") {
  CHECK(eval_word(GroupWord::parse("R^3 J")) == QMatrix(P("q + q^2 + q^4"), 1, P("q"), P("1 - q")));
  // J_q = N_q S_q as elements of PGL2; the literal product carries q^-1.
  CHECK(*proportionality(eval_word(GroupWord::parse("N S")), generator(Gen::J)) == LambdaUnit{1, -1, 0});
  CHECK(proj_equal(eval_word(GroupWord::parse("R S R")), generator(Gen::L)));
  CHECK_THROWS_AS(GroupWord::parse("R^x"), ParseError);
  CHECK_THROWS_AS(GroupWord::parse("Q"), UnknownGenerator);
  CHECK(GroupWord::parse("R^3 J S^-1 N").to_string() == "R^3 J S^-1 N");
}

TEST_CASE("presentation relations as computed") {
  auto reps = check_presentation();
  auto find = [&](const std::string& prefix) {
    for (const auto& r : reps)
      if (r.name.rfind(prefix, 0) == 0) return r;
    FAIL("missing relation " << prefix);
    return reps.front();
  };
  CHECK(find("S^2").ok());
  CHECK(find("(RS)^3").ok());
  CHECK(find("(NR)^2").ok());
  CHECK(find("(NS)^2 = t Id [NS as J_q]").ok());
  CHECK(find("R^-1 J R J R^-1").ok());
  CHECK(find("J R J R^-1 J R").ok());
  CHECK(find("(I tau)^2").ok());
  // The exact units of N^2 and of the literal (N_q S_q)^2.
  CHECK(*find("N^2").unit == LambdaUnit{1, -1, 1});
  CHECK(*find("(NS)^2 = t Id [NS as N_q S_q]").unit == LambdaUnit{1, -2, 1});
  CHECK(twisted_square_unit() == LambdaUnit{1, -1, 1});
}

TEST_CASE("twisted generators") {
  CHECK(twisted(GroupWord::parse("R")).matrix == QMatrix(1, P("q^2"), P("1 - q"), P("q")));
  CHECK(*proportionality(twisted(GroupWord::parse("S")).matrix, QMatrix(P("q - 1"), P("-q"), P("q"), P("q^2 - q"))) ==
        LambdaUnit{1, -1, 0});
  CHECK(proj_equal(twisted(GroupWord::parse("N")).matrix, QMatrix(-1, 0, 0, P("q"))));
  CHECK(twisted(GroupWord{}).matrix == generator(Gen::I));
  CHECK(*proportionality(twisted(GroupWord::parse("J")).matrix, QMatrix(0, 1, 1, 0)) == LambdaUnit{1, 0, 1});
}

TEST_CASE("stabilizer of infinity under R") {
  for (const auto& f : stabilizer_fixed_points()) CHECK(is_fixed_by_R(f));
  CHECK(is_fixed_by_R(ProjPoint::infinity()));
  CHECK(is_fixed_by_R(ProjPoint::make(1, P("1 - q"))));
}

TEST_CASE("property: the classical limit of a quantized word") {
  for (int i = 0; i < 300; ++i) {
    GroupWord w = random_word();
    QMatrix m = eval_word(w).stripped();
    IntMatrix c = classical_matrix(w);
    // At q = 1 the unit becomes a sign and t becomes 1.
    IntMatrix at_one{m.a.eval_at_one(), m.b.eval_at_one(), m.c.eval_at_one(), m.d.eval_at_one()};
    CHECK(at_one.proj_equal(c));
    CHECK(word_det(w) == c.det());
  }
}

TEST_CASE("property: words and their inverses") {
  for (int i = 0; i < 200; ++i) {
    GroupWord w = random_word();
    CHECK(eval_word(w * w.inverse()) == QMatrix::identity());
    CHECK(eval_word(w.inverse()) == eval_word(w).inverse());
  }
}

TEST_CASE("property: the twisted operators compose like the group") {
  for (int i = 0; i < 150; ++i) {
    GroupWord u = random_word(4), v = random_word(4);
    ProjPoint x = quantize(random_rational(), Flavor::sharp).point;
    // M-bar N-bar = (MN)-bar up to a unit, as maps on the projective line.
    ProjPoint lhs = apply_op(twisted(u), apply_op(twisted(v), x));
    ProjPoint rhs = apply_op(untwisted(u * v), x);
    CHECK(lhs == rhs);
  }
}
