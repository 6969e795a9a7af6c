#include "qproj/qseries.hpp"

#include "qproj/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qproj {

namespace {

long sat_add(long a, long b) {
  if (a >= QSeries::kExact || b >= QSeries::kExact) return QSeries::kExact;
  return std::min(a + b, QSeries::kExact);
}

}  // namespace

void QSeries::normalize() {
  if (prec_ > kExact) prec_ = kExact;
  // Drop data at or beyond the precision.
  if (!c_.empty() && low_ + static_cast<long>(c_.size()) > prec_) {
    long keep = std::max(0L, prec_ - low_);
    c_.resize(static_cast<std::size_t>(keep));
  }
  auto first = std::find_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; });
  if (first == c_.end()) {
    c_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<long>(first - c_.begin());
  c_.erase(c_.begin(), first);
  while (c_.back() == 0) c_.pop_back();
}

QSeries QSeries::zero(long precision) {
  QSeries s;
  s.prec_ = std::min(precision, kExact);
  return s;
}

QSeries QSeries::from_poly(const LaurentPoly& p, long precision) {
  QSeries s;
  s.prec_ = std::min(precision, kExact);
  if (!p.is_zero()) {
    s.low_ = p.valuation();
    for (const auto& c : p.coeffs()) s.c_.emplace_back(c);
  }
  s.normalize();
  return s;
}

QSeries QSeries::from_coeffs(long low, std::vector<Rational> coeffs, long precision) {
  QSeries s;
  s.low_ = low;
  s.c_ = std::move(coeffs);
  s.prec_ = std::min(precision, kExact);
  s.normalize();
  return s;
}

std::optional<long> QSeries::valuation() const {
  if (c_.empty()) return std::nullopt;
  return low_;
}

long QSeries::valuation_bound() const { return c_.empty() ? prec_ : low_; }

Rational QSeries::coeff(long e) const {
  if (e >= prec_)
    throw OutOfRange("coefficient of q^" + std::to_string(e) + " beyond precision " + std::to_string(prec_));
  if (c_.empty() || e < low_ || e >= low_ + static_cast<long>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(e - low_)];
}

bool QSeries::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

LaurentPoly QSeries::to_poly() const {
  if (!is_integral()) throw NonIntegerOutput("series " + to_string() + " has non-integer coefficients");
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.get_num());
  return LaurentPoly::from_coeffs(low_, std::move(out));
}

std::vector<std::pair<long, Rational>> QSeries::terms() const {
  std::vector<std::pair<long, Rational>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.emplace_back(low_ + static_cast<long>(i), c_[i]);
  return out;
}

QSeries QSeries::truncated(long n) const {
  QSeries s = *this;
  s.prec_ = std::min(prec_, n);
  s.normalize();
  return s;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

QSeries operator+(const QSeries& f, const QSeries& g) {
  long prec = std::min(f.prec_, g.prec_);
  if (f.c_.empty()) return g.truncated(prec);
  if (g.c_.empty()) return f.truncated(prec);
  long lo = std::min(f.low_, g.low_);
  long hi = std::max(f.low_ + static_cast<long>(f.c_.size()), g.low_ + static_cast<long>(g.c_.size()));
  hi = std::min(hi, prec);
  std::vector<Rational> out(static_cast<std::size_t>(std::max(0L, hi - lo)));
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    long e = f.low_ + static_cast<long>(i);
    if (e < hi) out[static_cast<std::size_t>(e - lo)] += f.c_[i];
  }
  for (std::size_t i = 0; i < g.c_.size(); ++i) {
    long e = g.low_ + static_cast<long>(i);
    if (e < hi) out[static_cast<std::size_t>(e - lo)] += g.c_[i];
  }
  return QSeries::from_coeffs(lo, std::move(out), prec);
}

QSeries operator*(const QSeries& f, const QSeries& g) {
  long prec = std::min(sat_add(f.valuation_bound(), g.prec_), sat_add(g.valuation_bound(), f.prec_));
  if (f.c_.empty() || g.c_.empty()) return QSeries::zero(prec);
  long lo = f.low_ + g.low_;
  long hi = f.low_ + static_cast<long>(f.c_.size()) + g.low_ + static_cast<long>(g.c_.size()) - 1;
  hi = std::min(hi, prec);
  if (hi <= lo) return QSeries::zero(prec);
  std::vector<Rational> out(static_cast<std::size_t>(hi - lo));
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i] == 0) continue;
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      std::size_t k = i + j;
      if (static_cast<long>(k) >= hi - lo) break;
      out[k] += f.c_[i] * g.c_[j];
    }
  }
  return QSeries::from_coeffs(lo, std::move(out), prec);
}

QSeries QSeries::inverse(long cap) const {
  if (c_.empty()) throw ZeroLeading("inverting " + to_string());
  const long v = low_;
  long prec = is_exact() ? kExact : prec_ - 2 * v;
  prec = std::min(prec, cap);
  if (prec >= kExact) {
    if (c_.size() == 1) return from_coeffs(-v, {1 / c_[0]}, kExact);
    throw OutOfRange("exact inverse of " + to_string() + " needs a precision cap");
  }
  // 1/f = q^-v * h with h * (c0 + c1 q + ...) = 1; h_k for k < prec + v.
  long count = std::max(0L, prec + v);
  std::vector<Rational> h(static_cast<std::size_t>(count));
  const Rational inv0 = 1 / c_[0];
  for (long k = 0; k < count; ++k) {
    Rational s = k == 0 ? Rational(1) : Rational(0);
    long jmax = std::min<long>(k, static_cast<long>(c_.size()) - 1);
    for (long j = 1; j <= jmax; ++j) s -= c_[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(k - j)];
    h[static_cast<std::size_t>(k)] = s * inv0;
  }
  return from_coeffs(-v, std::move(h), prec);
}

QSeries QSeries::divide(const QSeries& f, const QSeries& g, long cap) {
  auto vg = g.valuation();
  if (!vg) throw ZeroLeading("division by " + g.to_string());
  long vf = f.valuation_bound();
  long inv_prec = g.is_exact() ? kExact : g.prec_ - 2 * *vg;
  long prec = std::min(sat_add(vf, inv_prec), sat_add(-*vg, f.prec_));
  prec = std::min(prec, cap);
  if (prec >= kExact) {
    // Both exact: only monomial denominators divide without a cap.
    if (g.c_.size() != 1) throw OutOfRange("exact division needs a precision cap");
  }
  if (f.c_.empty()) return zero(prec);
  QSeries inv = g.inverse(prec >= kExact ? kExact : prec - vf);
  return (f * inv).truncated(prec);
}

bool QSeries::agrees_below(const QSeries& o, long n) const {
  if (n > prec_ || n > o.prec_) return false;
  return !(*this - o).truncated(n).valuation().has_value();
}

std::optional<long> QSeries::first_difference(const QSeries& o) const { return (*this - o).valuation(); }

bool operator==(const QSeries& f, const QSeries& g) {
  return f.prec_ == g.prec_ && f.c_ == g.c_ && (f.c_.empty() || f.low_ == g.low_);
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    long e = low_ + static_cast<long>(i);
    Rational mag = abs(c);
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    std::string ms = mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << ms;
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  if (!is_exact()) {
    os << (first ? "" : " + ") << "O(q^" << prec_ << ")";
  } else if (first) {
    os << "0";
  }
  return os.str();
}

QSeries taylor(const LaurentPoly& num, const LaurentPoly& den, long n) {
  if (den.is_zero()) throw ZeroLeading("expansion of a point with zero denominator");
  return QSeries::divide(QSeries::from_poly(num), QSeries::from_poly(den), n);
}

QSeries taylor(const ProjPoint& x, long n) { return taylor(x.num(), x.den(), n); }

QSeries mobius_series(const QMatrix& m, const QSeries& f) {
  auto lin = [&](const LaurentPoly& u, const LaurentPoly& v) {
    QSeries s = QSeries::from_poly(v);
    if (!u.is_zero()) s = QSeries::from_poly(u) * f + s;
    return s;
  };
  QSeries num = lin(m.a, m.b), den = lin(m.c, m.d);
  return QSeries::divide(num, den);
}

QSeries mobius_series_integral(const QMatrix& m, const QSeries& f) {
  QSeries r = mobius_series(m, f);
  if (!r.is_integral()) throw NonIntegerOutput("image " + r.to_string() + " under " + m.to_string());
  return r;
}

std::optional<long> ListDigits::next() {
  if (pos_ >= digits_.size()) return std::nullopt;
  return digits_[pos_++];
}

PeriodicDigits::PeriodicDigits(std::vector<long> prefix, std::vector<long> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.empty()) throw OutOfRange("empty period");
}

std::optional<long> PeriodicDigits::next() {
  std::size_t i = pos_++;
  if (i < prefix_.size()) return prefix_[i];
  return period_[(i - prefix_.size()) % period_.size()];
}

long gap_bound(const std::vector<long>& digits) {
  return std::accumulate(digits.begin(), digits.end(), 0L) - 1;
}

namespace {

// Numerator and denominator of the quantized convergent with product P of
// the letters R^ai J: the even/odd word applied to 1/0 or 1/(1-q).
std::pair<LaurentPoly, LaurentPoly> convergent_point(const QMatrix& P, std::size_t len, Flavor flavor) {
  bool to_infinity = (len % 2 == 0) == (flavor == Flavor::sharp);
  if (to_infinity) return {P.a, P.c};
  const LaurentPoly one_minus_q = 1 - LaurentPoly::qpow(1);
  return {P.a + P.b * one_minus_q, P.c + P.d * one_minus_q};
}

void strip_common_t(QMatrix& P) {
  static const LaurentPoly t = LaurentPoly::t();
  while (true) {
    auto a = try_div_exact(P.a, t);
    if (!a) return;
    auto b = try_div_exact(P.b, t);
    if (!b) return;
    auto c = try_div_exact(P.c, t);
    if (!c) return;
    auto d = try_div_exact(P.d, t);
    if (!d) return;
    P = {*a, *b, *c, *d};
  }
}

}  // namespace

QRealResult quantize_real_detailed(DigitStream& s, long n, Flavor flavor) {
  QRealResult res;
  QMatrix P;
  const QMatrix J = generator(Gen::J);
  std::optional<QSeries> prev;
  while (true) {
    auto d = s.next();
    if (!d) {
      if (s.irrational() || res.digits.empty())
        throw InsufficientDigits("stream ended after " + std::to_string(res.digits.size()) +
                                 " digits before precision " + std::to_string(n) + " was reached");
      CFExpansion cf{CFKind::positive, res.digits};
      QRational x = quantize(evaluate(cf), flavor);
      res.series = taylor(x.point, n);
      res.bound = gap_bound(res.digits);
      res.exact = true;
      break;
    }
    if (!res.digits.empty() && *d < 1)
      throw ShapeMismatch("digit " + std::to_string(*d) + " after the integer part");
    res.digits.push_back(*d);
    P = P * QMatrix(LaurentPoly::qpow(*d), LaurentPoly::qint(*d), 0, 1) * J;
    strip_common_t(P);
    auto [num, den] = convergent_point(P, res.digits.size(), flavor);
    QSeries cur = taylor(num, den, n);
    res.bound = gap_bound(res.digits);
    if (res.bound > n && prev && prev->agrees_below(cur, n)) {
      res.series = std::move(cur);
      break;
    }
    prev = std::move(cur);
  }
  if (!res.series.is_integral())
    throw NonIntegerOutput("quantized real " + res.series.to_string() + " is not integral");
  return res;
}

QSeries quantize_real(DigitStream& s, long n, Flavor flavor) {
  return quantize_real_detailed(s, n, flavor).series;
}

GapReport left_right_gap(const Rational& x, long n) {
  GapReport rep;
  rep.x = x;
  ProjPoint s = quantize(x, Flavor::sharp).point, f = quantize(x, Flavor::flat).point;
  rep.gap = taylor(s.num() * f.den() - f.num() * s.den(), s.den() * f.den(), n);
  rep.valuation = rep.gap.valuation();
  rep.bound = gap_bound(positive_cf(x, Parity::odd).digits);
  rep.ok = rep.gap.valuation_bound() >= std::min(rep.bound, n);
  return rep;
}

namespace {

struct Candidate {
  long digit;
  QSeries residual;
  bool all_ones;
};

bool is_all_ones(const QSeries& y) {
  if (y.precision() <= 0 || y.valuation() != 0) return false;
  for (long e = 0; e < y.precision(); ++e)
    if (y.coeff(e) != 1) return false;
  return true;
}

struct Branch {
  std::vector<long> digits;
  bool all_ones = false;
};

void decode_rec(const QSeries& cur, long bound, std::size_t max_digits, std::vector<long>& digits,
                std::vector<Branch>& out) {
  if (digits.size() >= max_digits) {
    out.push_back({digits, false});
    return;
  }
  const QMatrix J = generator(Gen::J);
  const long lo = digits.empty() ? -bound : 1;
  std::vector<Candidate> cands;
  bool undetermined = false;
  for (long a = lo; a <= bound; ++a) {
    QMatrix M = J * QMatrix(LaurentPoly::qpow(-a), LaurentPoly::qint(-a), 0, 1);
    QSeries y;
    try {
      y = mobius_series(M, cur);
    } catch (const ZeroLeading&) {
      undetermined = true;
      continue;
    }
    auto v = y.valuation();
    if (!v) {
      undetermined = true;
      continue;
    }
    if (*v != 0 || y.coeff(0) != 1 || !y.is_integral()) continue;
    cands.push_back({a, y, is_all_ones(y)});
  }
  if (cands.empty()) {
    if (undetermined && !digits.empty()) out.push_back({digits, false});
    return;
  }
  for (const auto& c : cands) {
    digits.push_back(c.digit);
    if (c.all_ones) out.push_back({digits, true});
    else decode_rec(c.residual, bound, max_digits, digits, out);
    digits.pop_back();
  }
}

}  // namespace

DecodeResult decode_cf(const QSeries& f, long digit_bound, std::size_t max_digits) {
  if (f.is_exact()) throw DecodeFailed("decode needs a truncated series");
  std::vector<Branch> branches;
  std::vector<long> digits;
  decode_rec(f, digit_bound, max_digits, digits, branches);

  std::vector<DecodeResult> verified;
  std::vector<Rational> values;
  const ProjPoint base = infinity_point(Flavor::flat);
  for (const auto& br : branches) {
    CFExpansion cf{CFKind::positive, br.digits};
    ProjPoint p = mobius(eval_word(cf_to_word(cf)), base);
    QSeries re = taylor(p, f.precision());
    DecodeResult r;
    r.digits = br.digits;
    if (br.all_ones && re.agrees_below(f, f.precision())) {
      r.terminated = true;
      r.flavor = br.digits.size() % 2 == 0 ? Flavor::flat : Flavor::sharp;
      r.verified_below = f.precision();
    } else {
      long depth = std::min(f.precision(), gap_bound(br.digits));
      if (depth <= f.valuation_bound() || !re.agrees_below(f, depth)) continue;
      r.verified_below = depth;
    }
    verified.push_back(r);
    values.push_back(evaluate(cf));
  }
  if (verified.empty()) throw DecodeFailed("no digit sequence reproduces " + f.to_string());
  // Different spellings of the same number, or nested prefixes of one
  // expansion, are not ambiguities.
  for (std::size_t i = 1; i < verified.size(); ++i) {
    const auto& a = verified[0].digits;
    const auto& b = verified[i].digits;
    bool same_value = values[i] == values[0];
    bool prefix = std::equal(a.begin(), a.begin() + static_cast<long>(std::min(a.size(), b.size())), b.begin());
    if (!same_value && !prefix)
      throw AmbiguityDetected(CFExpansion{CFKind::positive, a}.to_string() + " vs " +
                              CFExpansion{CFKind::positive, b}.to_string());
  }
  return verified[0];
}

}  // namespace qproj
