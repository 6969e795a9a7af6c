#include "qproj/qgroup.hpp"

#include "qproj/error.hpp"

#include <cctype>
#include <sstream>

namespace qproj {

char gen_name(Gen g) {
  switch (g) {
    case Gen::R: return 'R';
    case Gen::S: return 'S';
    case Gen::N: return 'N';
    case Gen::J: return 'J';
    case Gen::L: return 'L';
    case Gen::I: return 'I';
  }
  return '?';
}

Gen gen_from_name(char c) {
  switch (c) {
    case 'R': return Gen::R;
    case 'S': return Gen::S;
    case 'N': return Gen::N;
    case 'J': return Gen::J;
    case 'L': return Gen::L;
    case 'I': return Gen::I;
    default: throw UnknownGenerator(std::string("'") + c + "'");
  }
}

GroupWord::GroupWord(std::vector<Letter> ls) {
  for (const auto& l : ls) {
    if (l.gen == Gen::I) throw UnknownGenerator("I is not a word letter");
    if (l.exp != 0) letters.push_back(l);
  }
}

GroupWord GroupWord::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError("unexpected '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
    Gen g = gen_from_name(c);
    if (g == Gen::I) throw UnknownGenerator("I is not a word letter");
    ++i;
    long e = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      std::string digits(text.substr(start, i - start));
      if (digits.empty() || digits == "-" || digits == "+")
        throw ParseError("missing exponent in word '" + std::string(text) + "'");
      e = std::stol(digits);
    }
    out.push_back({g, e});
  }
  return GroupWord(std::move(out));
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  GroupWord w = u;
  w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->gen, -it->exp});
  return w;
}

std::string GroupWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ' ';
    os << gen_name(letters[i].gen);
    if (letters[i].exp != 1) os << '^' << letters[i].exp;
  }
  return os.str();
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool IntMatrix::proj_equal(const IntMatrix& o) const {
  return *this == o || (a == -o.a && b == -o.b && c == -o.c && d == -o.d);
}

QMatrix generator(Gen g) {
  const LaurentPoly q = LaurentPoly::qpow(1), qinv = LaurentPoly::qpow(-1);
  switch (g) {
    case Gen::R: return {q, 1, 0, 1};
    case Gen::S: return {0, -qinv, 1, 0};
    case Gen::N: return {-1, 1 - qinv, q - 1, 1};
    case Gen::J: return {q - 1, 1, q, 1 - q};
    case Gen::L: return {1, 0, 1, qinv};
    case Gen::I: return {1, q - 1, 1 - q, q};
  }
  throw UnknownGenerator("?");
}

QMatrix generator(std::string_view name) {
  if (name.size() != 1) throw UnknownGenerator("'" + std::string(name) + "'");
  return generator(gen_from_name(name[0]));
}

IntMatrix classical_generator(Gen g) {
  switch (g) {
    case Gen::R: return {1, 1, 0, 1};
    case Gen::S: return {0, -1, 1, 0};
    case Gen::N: return {-1, 0, 0, 1};
    case Gen::J: return {0, 1, 1, 0};
    case Gen::L: return {1, 0, 1, 1};
    case Gen::I: return {};
  }
  throw UnknownGenerator("?");
}

namespace {

QMatrix letter_matrix(const Letter& l) {
  if (l.gen == Gen::R) {
    // R_q^n = [[q^n, [n]], [0, 1]] for every integer n.
    return {LaurentPoly::qpow(l.exp), LaurentPoly::qint(l.exp), 0, 1};
  }
  return generator(l.gen).pow(l.exp);
}

IntMatrix int_pow(IntMatrix m, long n) {
  if (n < 0) {
    // Inverse of a determinant +-1 integer matrix.
    Integer det = m.det();
    m = {m.d * det, -m.b * det, -m.c * det, m.a * det};
    n = -n;
  }
  IntMatrix r;
  for (long i = 0; i < n; ++i) r = r * m;
  return r;
}

}  // namespace

QMatrix eval_word(const GroupWord& w) {
  QMatrix m;
  for (const auto& l : w.letters) m = m * letter_matrix(l);
  return m;
}

IntMatrix classical_matrix(const GroupWord& w) {
  IntMatrix m;
  for (const auto& l : w.letters) m = m * int_pow(classical_generator(l.gen), l.exp);
  return m;
}

int word_det(const GroupWord& w) {
  int s = 1;
  for (const auto& l : w.letters)
    if ((l.gen == Gen::N || l.gen == Gen::J) && l.exp % 2 != 0) s = -s;
  return s;
}

namespace {

RelationReport relation(std::string name, const QMatrix& lhs, const QMatrix& rhs,
                        std::optional<LambdaUnit> expected) {
  RelationReport r;
  r.name = std::move(name);
  r.unit = proportionality(lhs, rhs);
  r.expected = expected;
  r.projective = r.unit.has_value();
  r.exact = r.projective && (!expected || *r.unit == *expected);
  return r;
}

}  // namespace

std::vector<RelationReport> check_presentation() {
  const QMatrix R = generator(Gen::R), S = generator(Gen::S), N = generator(Gen::N),
                J = generator(Gen::J), I = generator(Gen::I);
  const QMatrix Id = QMatrix::identity();
  const LambdaUnit t{1, 0, 1};
  std::vector<RelationReport> out;
  out.push_back(relation("S^2 ~ Id", S * S, Id, std::nullopt));
  out.push_back(relation("(RS)^3 ~ Id", (R * S).pow(3), Id, std::nullopt));
  out.push_back(relation("N^2 = t Id", N * N, Id, t));
  out.push_back(relation("(NR)^2 = t Id", (N * R).pow(2), Id, t));
  out.push_back(relation("(NS)^2 = t Id [NS as J_q]", J * J, Id, t));
  out.push_back(relation("(NS)^2 = t Id [NS as N_q S_q]", (N * S).pow(2), Id, t));
  out.push_back(relation("R^-1 J R J R^-1 = t S", R.inverse() * J * R * J * R.inverse(), S, t));
  out.push_back(relation("J R J R^-1 J R = t q N", J * R * J * R.inverse() * J * R, N, LambdaUnit{1, 1, 1}));
  out.push_back(relation("(I tau)^2 = q^-1 t Id", I * I.reversed(), Id, LambdaUnit{1, -1, 1}));
  return out;
}

TwistedOp operator*(const TwistedOp& x, const TwistedOp& y) {
  return {x.matrix * (x.twisted ? y.matrix.reversed() : y.matrix), x.twisted != y.twisted};
}

TwistedOp twisted(const GroupWord& w) { return {eval_word(w) * generator(Gen::I), true}; }

TwistedOp untwisted(const GroupWord& w) { return {eval_word(w), false}; }

ProjPoint apply_op(const TwistedOp& op, const ProjPoint& x) {
  return mobius(op.matrix, op.twisted ? x.reversed() : x);
}

LambdaUnit twisted_square_unit() {
  TwistedOp bar_i = twisted(GroupWord{});
  TwistedOp sq = bar_i * bar_i;
  auto u = proportionality(sq.matrix, QMatrix::identity());
  if (sq.twisted || !u) throw RelationViolated("(I_q tau)^2 is not a scalar operator");
  return *u;
}

std::vector<ProjPoint> stabilizer_fixed_points() { return fixed_points(generator(Gen::R)); }

bool is_fixed_by_R(const ProjPoint& f) { return is_fixed(generator(Gen::R), f); }

}  // namespace qproj
