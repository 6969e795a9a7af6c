#pragma once

#include "qproj/qseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qproj {

/// Dense integer polynomial in x, coefficients in increasing degree.
struct IntPoly {
  std::vector<Integer> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly from_longs(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Rational eval(const Rational& x) const;
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  /// "x^4 - 7x^2 + 1".
  std::string to_string() const;
};

/// x^4 - b x^2 + 1.
IntPoly quartic(long b);
/// x^6 - 3x^5 - b x^4 + (2b + 5)x^3 - b x^2 - 3x + 1.
IntPoly sextic(long b);

/// A real root of an integer polynomial with an isolating interval
/// lo < root < hi (p(lo), p(hi) of opposite signs), or an exact rational
/// root when lo == hi.
class RealRoot {
public:
  RealRoot(IntPoly p, Rational lo, Rational hi);
  const IntPoly& poly() const { return p_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool exact() const { return lo_ == hi_; }
  /// Halves the interval.
  void refine();
  /// Midpoint as a double, for display only.
  double approx() const;

private:
  IntPoly p_;
  Rational lo_, hi_;
  int sign_lo_ = 0;
};

/// Isolating intervals for exactly `expected` real roots, in increasing
/// order, by sign-change counting on successively finer grids of the
/// Cauchy interval.  Throws PrecisionStall when the grid budget is
/// exhausted before `expected` sign changes are seen.
std::vector<RealRoot> isolate_real_roots(const IntPoly& p, int expected);

/// Factorization data for the two families.
struct RootIsolation {
  int degree = 0;
  long b = 0;
  IntPoly poly;
  /// Increasing order.
  std::vector<RealRoot> roots;
  bool reducible = false;
  std::vector<IntPoly> factors;
};
/// Degree 4 needs b > 2, degree 6 needs b >= 1 (OutOfRange otherwise).
RootIsolation isolate_roots(int degree, long b);

/// Continued-fraction digits of a real root, produced by refining its
/// interval until the next complete quotient has a determined floor.
class RootCFStream : public DigitStream {
public:
  explicit RootCFStream(RealRoot root, long budget = 200000);
  std::optional<long> next() override;
  bool irrational() const override { return !root_.exact(); }

private:
  RealRoot root_;
  long budget_;
  Integer a_ = 1, b_ = 0, c_ = 0, d_ = 1;
  std::vector<long> exact_digits_;
  std::size_t exact_pos_ = 0;
};

/// Index of the candidate root equal to T(x) for the classical Moebius map
/// T = [[a, b], [c, d]]; intervals are refined until exactly one candidate
/// overlaps the image.  Throws PrecisionStall.
std::size_t image_index(const IntMatrix& T, RealRoot& x, std::vector<RealRoot>& candidates);

/// One relation checked modulo q^order.
struct RelationCheck {
  std::string name;
  QSeries lhs, rhs;
  long order = 0;
  bool holds = false;
  std::optional<long> first_divergence;
};
RelationCheck check_relation(std::string name, const QSeries& lhs, const QSeries& rhs, long order);

/// Roots with their labels, quantizations and elementary symmetric series.
struct AlgebraicRootSystem {
  int degree = 0;
  long b = 0;
  long order = 0;
  RootIsolation isolation;
  /// roots[i] is x_{i+1} in the labelling described at root_system().
  std::vector<RealRoot> roots;
  std::vector<std::vector<long>> digits;
  std::vector<QSeries> X;
  /// sigma[k] = Sigma_k, sigma[0] = 1.
  std::vector<QSeries> sigma;
};

/// Labels the roots (degree 4: x1 largest, x2 = 1/x1, x3 = -1/x1,
/// x4 = -x1; degree 6: x1 largest, x5 = G x1, x3 = G x5, x2 = 1/x1,
/// x4 = 1/x5, x6 = 1/x3 with G(x) = (x - 1)/x) and quantizes them to
/// precision `precision`.
AlgebraicRootSystem root_system(int degree, long b, long precision, long order);

struct VietaReport {
  AlgebraicRootSystem system;
  std::vector<RelationCheck> relations;
  /// Precision used for the root series (order + margin).
  long precision = 0;
  bool ok() const;
};

/// Sigma_4 = q^-2, Sigma_3 = -q^-1 Sigma_1, (q-1) Sigma_2 = (q + q^-1 - 3)
/// Sigma_1 + 2(1 - q^-1), and the quartic (multiplied by q - 1) on each X_i.
VietaReport quantized_vieta_deg4(long b, long order);
/// The six pairwise relations from N, J and S.
VietaReport pairwise_relations_deg4(long b, long order);
/// The five Vieta relations and the twelve pairwise relations.
VietaReport quantized_vieta_deg6(long b, long order);
/// mobius_series(T_q, X_i) = X_j for the generators of the Galois action.
VietaReport symmetry_transport(int degree, long b, long order);

/// Cycle type of a permutation of the roots induced by a classical map.
struct GaloisPermutation {
  std::string name;
  std::vector<std::size_t> image;  // 0-based
  std::vector<std::size_t> cycle_lengths;
};
std::vector<GaloisPermutation> galois_permutations(int degree, long b);

/// Split cases of degree 4: b = n^2 - 2 (sign -1) or n^2 + 2 (sign +1).
/// Quantized quadratics on the roots and the closed forms of the Sigma_k.
struct SplitReport {
  long n = 0;
  int sign = 0;
  long b = 0;
  std::vector<RelationCheck> relations;
  /// Closed forms at q = 1 against the classical 0, -b, 0, 1.
  bool classical_limit_ok = false;
  bool ok() const;
};
SplitReport split_case_deg4(long n, int sign, long order);

/// Degree 6, b = 2: the quantized quadratic factors annihilate their roots,
/// Sigma_1 against the sum of the quadratics' root sums, and Sigma_1 against
/// the literal q + 2q^2 + 3q^3 + 2q^4 + q^5.
VietaReport deg6_b2_report(long order);
/// Degree 6, b = 3: the cubic identities with B1 = X1 + X3 + X5 on odd
/// roots and B2 = X2 + X4 + X6 on even roots.
VietaReport deg6_b3_cubics(long order);

/// q + 2q^2 + 3q^3 + 2q^4 + q^5.
LaurentPoly deg6_b2_printed_sigma1();

}  // namespace qproj
