#pragma once

#include "qproj/qgroup.hpp"

#include <string>
#include <vector>

namespace qproj {

/// Trace of a quantized word.  The represented matrix is only defined up to
/// a unit of Lambda, so the trace is reported as unit * normalized, where
/// normalized is the trace of the representative whose entries share no
/// factor t or q, shifted to valuation 0.
struct TraceResult {
  GroupWord word;
  LambdaUnit unit;
  LaurentPoly normalized;
  /// unit * normalized expanded; the trace of the matrix exactly as
  /// eval_word represents it.
  LaurentPoly exact() const { return apply_unit(unit, normalized); }
};

TraceResult qtrace(const GroupWord& w);
/// Trace of an explicit q-matrix, normalized the same way.
TraceResult qtrace(const QMatrix& m);

/// "-(1 + q + 2q^2)" when every coefficient is negative, to_string()
/// otherwise.
std::string trace_to_string(const LaurentPoly& p);

/// -1, 0 or +1 when all coefficients share that sign (0 for the zero
/// polynomial); nullopt for mixed signs.
std::optional<int> coefficient_sign(const LaurentPoly& p);

/// Palindromicity and sign coherence of the trace of a det -1 word.
struct PalindromeReport {
  TraceResult trace;
  int classical_det = 0;
  bool palindromic = false;
  std::optional<int> sign;
  bool ok() const { return classical_det == -1 && palindromic && sign.has_value(); }
};
PalindromeReport check_palindrome_det_neg(const GroupWord& w);

/// The Hirzebruch-Jung product M_q(c1, ..., ck) = R^c1 S ... R^ck S.
GroupWord hj_word(const std::vector<long>& c);

/// Entries of M_q(c) = [[A, B], [C, D]] and the non-negativity invariants
/// A, -B, A + D, A + B, A - C, together with positivity of the trace.
struct HReport {
  std::vector<long> c;
  LaurentPoly A, B, C, D;
  bool a_nonneg = false, minus_b_nonneg = false, a_plus_d_nonneg = false, a_plus_b_nonneg = false,
       a_minus_c_nonneg = false;
  LaurentPoly trace;
  bool trace_positive = false;
  bool ok() const {
    return a_nonneg && minus_b_nonneg && a_plus_d_nonneg && a_plus_b_nonneg && a_minus_c_nonneg && trace_positive;
  }
};
/// Requires every ci >= 2 (throws OutOfRange).
HReport check_H_invariants(const std::vector<long>& c);

/// Tr(N_q M_q(c1..ck)) against Tr(N_q M_q(ck..c1)).
struct ReversalReport {
  TraceResult forward, backward;
  bool equal = false;
};
ReversalReport reversal_identity(const std::vector<long>& c);

}  // namespace qproj
