#include "qproj/qtrace.hpp"

#include "qproj/error.hpp"

#include <algorithm>

namespace qproj {

namespace {

// The represented matrix entries with the scale folded in.
LaurentPoly entry(const QMatrix& m, const LaurentPoly& e) { return apply_unit(m.scale, e); }

}  // namespace

TraceResult qtrace(const QMatrix& m) {
  // Only the common factors of the entries are removed: the trace itself may
  // legitimately be divisible by t.
  const QMatrix s = m.stripped();
  TraceResult r;
  r.unit = s.scale;
  LaurentPoly tr = s.a + s.d;
  if (tr.is_zero()) {
    r.normalized = tr;
    return r;
  }
  long v = tr.valuation();
  r.normalized = tr.shifted(-v);
  r.unit.qpow += v;
  return r;
}

TraceResult qtrace(const GroupWord& w) {
  TraceResult r = qtrace(eval_word(w));
  r.word = w;
  return r;
}

std::string trace_to_string(const LaurentPoly& p) {
  if (p.term_count() > 1 && coefficient_sign(p) == -1) return "-(" + (-p).to_string() + ")";
  return p.to_string();
}

std::optional<int> coefficient_sign(const LaurentPoly& p) {
  if (p.is_zero()) return 0;
  bool pos = false, neg = false;
  for (const auto& c : p.coeffs()) {
    pos = pos || c > 0;
    neg = neg || c < 0;
  }
  if (pos && neg) return std::nullopt;
  return pos ? 1 : -1;
}

PalindromeReport check_palindrome_det_neg(const GroupWord& w) {
  PalindromeReport r;
  r.trace = qtrace(w);
  r.classical_det = word_det(w);
  r.palindromic = r.trace.normalized.is_zero() || r.trace.normalized.is_palindromic();
  r.sign = coefficient_sign(r.trace.normalized);
  return r;
}

GroupWord hj_word(const std::vector<long>& c) {
  std::vector<Letter> ls;
  for (long ci : c) {
    ls.push_back({Gen::R, ci});
    ls.push_back({Gen::S, 1});
  }
  return GroupWord(std::move(ls));
}

HReport check_H_invariants(const std::vector<long>& c) {
  if (c.empty()) throw OutOfRange("empty Hirzebruch-Jung tuple");
  for (long ci : c)
    if (ci < 2) throw OutOfRange("Hirzebruch-Jung digit " + std::to_string(ci) + " < 2");
  HReport r;
  r.c = c;
  QMatrix m = eval_word(hj_word(c));
  r.A = entry(m, m.a);
  r.B = entry(m, m.b);
  r.C = entry(m, m.c);
  r.D = entry(m, m.d);
  r.a_nonneg = r.A.is_nonnegative();
  r.minus_b_nonneg = (-r.B).is_nonnegative();
  r.a_plus_d_nonneg = (r.A + r.D).is_nonnegative();
  r.a_plus_b_nonneg = (r.A + r.B).is_nonnegative();
  r.a_minus_c_nonneg = (r.A - r.C).is_nonnegative();
  r.trace = r.A + r.D;
  r.trace_positive = !r.trace.is_zero() && coefficient_sign(r.trace) == 1;
  return r;
}

ReversalReport reversal_identity(const std::vector<long>& c) {
  std::vector<long> rc(c.rbegin(), c.rend());
  GroupWord n({{Gen::N, 1}});
  ReversalReport r;
  r.forward = qtrace(n * hj_word(c));
  r.backward = qtrace(n * hj_word(rc));
  r.equal = r.forward.normalized == r.backward.normalized &&
            (r.forward.normalized.is_zero() || r.forward.unit == r.backward.unit);
  return r;
}

}  // namespace qproj
