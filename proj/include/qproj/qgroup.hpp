#pragma once

#include "qproj/projective.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qproj {

/// Generators of PGL2(Z) used in words.  I (the identity, whose quantized
/// form I_q only makes sense together with the twist) is available through
/// generator() but is not a word letter.
enum class Gen { R, S, N, J, L, I };

char gen_name(Gen g);
Gen gen_from_name(char c);  // throws UnknownGenerator

struct Letter {
  Gen gen;
  long exp;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A word in R, S, N, J, L with non-zero integer exponents.
struct GroupWord {
  std::vector<Letter> letters;

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> ls);
  /// Parses "R^3 J S^-1 N" (whitespace separated, exponent optional).
  static GroupWord parse(std::string_view text);

  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  GroupWord inverse() const;
  bool empty() const { return letters.empty(); }
  std::string to_string() const;
};

/// Integer 2x2 matrix (classical PGL2(Z) element).
struct IntMatrix {
  Integer a = 1, b = 0, c = 0, d = 1;
  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  Integer det() const { return a * d - b * c; }
  /// Equal up to an overall sign.
  bool proj_equal(const IntMatrix& o) const;
};

/// The exact quantized generator R_q, S_q, N_q, J_q, L_q or I_q.
QMatrix generator(Gen g);
/// Looks up a generator by name ("R", "S", "N", "J", "L", "I"); throws
/// UnknownGenerator.
QMatrix generator(std::string_view name);
/// The classical matrix of a generator (I is the identity).
IntMatrix classical_generator(Gen g);

/// Product of the quantized generators, with exact unit-tracked inverses.
QMatrix eval_word(const GroupWord& w);
/// Product of the classical generators.
IntMatrix classical_matrix(const GroupWord& w);
/// Determinant (+1 or -1) of the classical matrix of w.
int word_det(const GroupWord& w);

/// One checked relation of the presentation of PGL2,q(Z).
struct RelationReport {
  std::string name;
  /// The computed unit u with (relation word) = u * (right-hand side).
  std::optional<LambdaUnit> unit;
  /// The unit the relation is asserted to have exactly, if any.
  std::optional<LambdaUnit> expected;
  /// Proportional by some unit.
  bool projective = false;
  /// Equal to the expected unit (true when no exact unit is asserted).
  bool exact = false;
  bool ok() const { return projective && exact; }
};

/// Checks S^2 and (RS)^3 projectively; N^2, (NR)^2, (NS)^2 = t Id exactly
/// (NS evaluated through the displayed J_q representative, and also as the
/// literal product N_q S_q); R^-1 J R J R^-1 = t S; J R J R^-1 J R = t q N and
/// (I_q tau)^2 = q^-1 t Id.
std::vector<RelationReport> check_presentation();

/// Operator x -> matrix * x (twisted = false) or x -> matrix * tau(x), where
/// tau substitutes q -> q^-1.
struct TwistedOp {
  QMatrix matrix;
  bool twisted = false;
  /// Composition (this after other).
  friend TwistedOp operator*(const TwistedOp& x, const TwistedOp& y);
};

/// The twisted quantization eval_word(w) * I_q followed by tau.
TwistedOp twisted(const GroupWord& w);
TwistedOp untwisted(const GroupWord& w);
ProjPoint apply_op(const TwistedOp& op, const ProjPoint& x);
/// The unit u with (I_q tau)^2 = u * Id, i.e. I_q * I_q(q^-1).
LambdaUnit twisted_square_unit();
/// The points fixed by R_q (solved from the fixed-point quadratic form).
std::vector<ProjPoint> stabilizer_fixed_points();
/// R_q f = f.
bool is_fixed_by_R(const ProjPoint& f);

}  // namespace qproj
