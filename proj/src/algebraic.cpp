#include "qproj/algebraic.hpp"

#include "qproj/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qproj {

namespace {

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

int sign_of(const Rational& x) { return sgn(x); }

}  // namespace

IntPoly::IntPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::from_longs(const std::vector<long>& coeffs) {
  std::vector<Integer> c;
  for (long x : coeffs) c.emplace_back(x);
  return IntPoly(std::move(c));
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Rational(c[i]);
  return acc;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  std::vector<Integer> out(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    Integer mag = abs(c[i]);
    if (first) os << (c[i] < 0 ? "-" : "");
    else os << (c[i] < 0 ? " - " : " + ");
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

IntPoly quartic(long b) { return IntPoly::from_longs({1, 0, -b, 0, 1}); }

IntPoly sextic(long b) { return IntPoly::from_longs({1, -3, -b, 2 * b + 5, -b, -3, 1}); }

RealRoot::RealRoot(IntPoly p, Rational lo, Rational hi) : p_(std::move(p)), lo_(lo), hi_(hi) {
  if (lo_ > hi_) std::swap(lo_, hi_);
  sign_lo_ = sign_of(p_.eval(lo_));
  if (lo_ != hi_ && (sign_lo_ == 0 || sign_lo_ == sign_of(p_.eval(hi_))))
    throw OutOfRange("interval [" + lo_.get_str() + ", " + hi_.get_str() + "] does not isolate a root of " +
                     p_.to_string());
}

void RealRoot::refine() {
  if (exact()) return;
  Rational mid = (lo_ + hi_) / 2;
  int s = sign_of(p_.eval(mid));
  if (s == 0) lo_ = hi_ = mid;
  else if (s == sign_lo_) lo_ = mid;
  else hi_ = mid;
}

double RealRoot::approx() const { return Rational((lo_ + hi_) / 2).get_d(); }

std::vector<RealRoot> isolate_real_roots(const IntPoly& p, int expected) {
  if (p.degree() < 1) throw OutOfRange("constant polynomial has no roots");
  Rational lead = abs(p.c.back()), m = 0;
  for (std::size_t i = 0; i + 1 < p.c.size(); ++i) m = std::max(m, Rational(abs(p.c[i]) / lead));
  Rational B = floor_of(m) + 2;
  for (long pieces = 2L * std::max(expected, 1); pieces <= (1L << 24); pieces *= 2) {
    for (long jitter = 0; jitter < 3; ++jitter) {
      long n = pieces + jitter;
      Rational step = 2 * B / n;
      std::vector<Rational> xs;
      std::vector<int> signs;
      bool hit_zero = false;
      for (long j = 0; j <= n; ++j) {
        Rational x = -B + step * j;
        int s = sign_of(p.eval(x));
        if (s == 0) {
          hit_zero = true;
          break;
        }
        xs.push_back(x);
        signs.push_back(s);
      }
      if (hit_zero) continue;
      std::vector<RealRoot> out;
      for (std::size_t j = 0; j + 1 < signs.size(); ++j)
        if (signs[j] != signs[j + 1]) out.emplace_back(p, xs[j], xs[j + 1]);
      if (static_cast<int>(out.size()) == expected) return out;
      break;
    }
  }
  throw PrecisionStall("could not separate " + std::to_string(expected) + " real roots of " + p.to_string());
}

RootIsolation isolate_roots(int degree, long b) {
  RootIsolation r;
  r.degree = degree;
  r.b = b;
  if (degree == 4) {
    if (b <= 2) throw OutOfRange("x^4 - bx^2 + 1 has four distinct real roots only for b > 2 (b = " +
                                 std::to_string(b) + ")");
    r.poly = quartic(b);
    for (long n = 1; n * n - 2 <= b; ++n) {
      if (b == n * n - 2) {
        r.reducible = true;
        r.factors = {IntPoly::from_longs({1, -n, 1}), IntPoly::from_longs({1, n, 1})};
      } else if (b == n * n + 2) {
        r.reducible = true;
        r.factors = {IntPoly::from_longs({-1, -n, 1}), IntPoly::from_longs({-1, n, 1})};
      }
    }
  } else if (degree == 6) {
    if (b < 1) throw OutOfRange("the sextic has six distinct real roots only for b >= 1 (b = " +
                                std::to_string(b) + ")");
    r.poly = sextic(b);
    if (b == 2) {
      r.reducible = true;
      r.factors = {IntPoly::from_longs({1, -3, 1}), IntPoly::from_longs({-1, -1, 1}),
                   IntPoly::from_longs({-1, 1, 1})};
    }
    for (long k = 0; k * k + k + 1 <= b; ++k) {
      if (b == k * k + k + 1) {
        long a = k - 1;
        r.reducible = true;
        r.factors = {IntPoly::from_longs({1, a, -(3 + a), 1}), IntPoly::from_longs({1, -(3 + a), a, 1})};
      }
    }
  } else {
    throw OutOfRange("degree must be 4 or 6");
  }
  if (r.reducible) {
    IntPoly prod = IntPoly::from_longs({1});
    for (const auto& f : r.factors) prod = prod * f;
    if (!(prod == r.poly))
      throw RelationViolated("factorization of " + r.poly.to_string() + " does not multiply back");
  }
  r.roots = isolate_real_roots(r.poly, degree);
  return r;
}

RootCFStream::RootCFStream(RealRoot root, long budget) : root_(std::move(root)), budget_(budget) {}

std::optional<long> RootCFStream::next() {
  while (true) {
    if (root_.exact()) {
      // Rational root: the remaining digits are those of the exact
      // complete quotient.
      if (exact_digits_.empty() && exact_pos_ == 0) {
        Rational x = root_.lo();
        Rational den = -Rational(c_) * x + Rational(a_);
        if (den == 0) return std::nullopt;
        Rational y = (Rational(d_) * x - Rational(b_)) / den;
        exact_digits_ = positive_cf(y, Parity::odd).digits;
        // Euclid's expansion, undoing the parity rewrite.
        exact_digits_ = positive_cf(y, exact_digits_.size() % 2 ? Parity::odd : Parity::even).digits;
      }
      if (exact_pos_ >= exact_digits_.size()) return std::nullopt;
      return exact_digits_[exact_pos_++];
    }
    const Rational lo = root_.lo(), hi = root_.hi();
    bool pole_inside = false;
    if (c_ != 0) {
      Rational pole(a_, c_);
      pole.canonicalize();
      pole_inside = lo <= pole && pole <= hi;
    }
    if (!pole_inside) {
      auto y = [&](const Rational& x) {
        return Rational((Rational(d_) * x - Rational(b_)) / (-Rational(c_) * x + Rational(a_)));
      };
      Integer f1 = floor_of(y(lo)), f2 = floor_of(y(hi));
      if (f1 == f2) {
        if (!f1.fits_slong_p()) throw OutOfRange("continued-fraction digit too large");
        long k = f1.get_si();
        Integer a = a_ * k + b_, c = c_ * k + d_;
        b_ = a_;
        d_ = c_;
        a_ = a;
        c_ = c;
        return k;
      }
    }
    if (budget_-- <= 0) throw PrecisionStall("refinement budget exhausted for a root of " + root_.poly().to_string());
    root_.refine();
  }
}

namespace {

// Image of the closed interval [lo, hi] under x -> (ax + b)/(cx + d); nullopt
// when the pole lies inside.
std::optional<std::pair<Rational, Rational>> image_interval(const IntMatrix& T, const Rational& lo,
                                                            const Rational& hi) {
  if (T.c != 0) {
    Rational pole(-T.d, T.c);
    pole.canonicalize();
    if (lo <= pole && pole <= hi) return std::nullopt;
  }
  auto f = [&](const Rational& x) {
    return Rational((Rational(T.a) * x + Rational(T.b)) / (Rational(T.c) * x + Rational(T.d)));
  };
  Rational u = f(lo), v = f(hi);
  if (u > v) std::swap(u, v);
  return std::make_pair(u, v);
}

}  // namespace

std::size_t image_index(const IntMatrix& T, RealRoot& x, std::vector<RealRoot>& candidates) {
  for (int iter = 0; iter < 4000; ++iter) {
    auto img = image_interval(T, x.lo(), x.hi());
    if (!img) {
      x.refine();
      continue;
    }
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (candidates[i].hi() >= img->first && candidates[i].lo() <= img->second) hits.push_back(i);
    if (hits.size() == 1) return hits[0];
    x.refine();
    for (auto i : hits) candidates[i].refine();
  }
  throw PrecisionStall("could not match the image of a root of " + x.poly().to_string());
}

RelationCheck check_relation(std::string name, const QSeries& lhs, const QSeries& rhs, long order) {
  RelationCheck r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.order = order;
  QSeries diff = (lhs - rhs).truncated(order);
  r.first_divergence = diff.valuation();
  r.holds = lhs.precision() >= order && rhs.precision() >= order && !r.first_divergence;
  return r;
}

namespace {

const IntMatrix kJ{0, 1, 1, 0}, kS{0, -1, 1, 0}, kN{-1, 0, 0, 1}, kGamma{1, -1, 1, 0};

QSeries C(const LaurentPoly& p) { return QSeries::from_poly(p); }
QSeries C(std::string_view text) { return QSeries::from_poly(LaurentPoly::parse(text)); }

std::vector<QSeries> elementary_symmetric(const std::vector<QSeries>& X) {
  std::vector<QSeries> e(X.size() + 1, QSeries::from_poly(0));
  e[0] = QSeries::from_poly(1);
  for (std::size_t i = 0; i < X.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * X[i];
  return e;
}

long min_precision(const std::vector<RelationCheck>& rs) {
  long m = QSeries::kExact;
  for (const auto& r : rs) m = std::min({m, r.lhs.precision(), r.rhs.precision()});
  return m;
}

// Builds relation checks, raising the root precision until every side of
// every relation is known below `order`.
template <class Build>
VietaReport with_margin(int degree, long b, long order, Build build) {
  long margin = 4;
  for (int attempt = 0; attempt < 8; ++attempt) {
    VietaReport rep;
    rep.precision = order + margin;
    rep.system = root_system(degree, b, rep.precision, order);
    rep.relations = build(rep.system);
    long m = min_precision(rep.relations);
    if (m >= order) return rep;
    margin += order - m + 2;
  }
  throw PrecisionStall("relation sides stay below precision " + std::to_string(order));
}

LaurentPoly quantized_integer(long n, Flavor f) {
  ProjPoint p = quantize(ExtRational(n), f).point;
  return div_exact(p.num(), p.den());
}

}  // namespace

AlgebraicRootSystem root_system(int degree, long b, long precision, long order) {
  AlgebraicRootSystem s;
  s.degree = degree;
  s.b = b;
  s.order = order;
  s.isolation = isolate_roots(degree, b);
  std::vector<RealRoot> cands = s.isolation.roots;
  RealRoot x1 = cands.back();
  std::vector<std::size_t> idx(degree);
  idx[0] = cands.size() - 1;
  if (degree == 4) {
    idx[1] = image_index(kJ, x1, cands);
    idx[2] = image_index(kS, x1, cands);
    idx[3] = image_index(kN, x1, cands);
  } else {
    idx[4] = image_index(kGamma, x1, cands);
    RealRoot x5 = cands[idx[4]];
    idx[2] = image_index(kGamma, x5, cands);
    RealRoot x3 = cands[idx[2]];
    idx[1] = image_index(kJ, x1, cands);
    idx[3] = image_index(kJ, x5, cands);
    idx[5] = image_index(kJ, x3, cands);
  }
  if (std::set<std::size_t>(idx.begin(), idx.end()).size() != idx.size())
    throw RelationViolated("Galois labelling of the roots is not a bijection");
  for (auto i : idx) s.roots.push_back(cands[i]);
  for (const auto& r : s.roots) {
    RootCFStream stream(r);
    QRealResult q = quantize_real_detailed(stream, precision);
    s.digits.push_back(q.digits);
    s.X.push_back(q.series);
  }
  s.sigma = elementary_symmetric(s.X);
  return s;
}

bool VietaReport::ok() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.holds; });
}

VietaReport quantized_vieta_deg4(long b, long order) {
  return with_margin(4, b, order, [&](const AlgebraicRootSystem& s) {
    const auto& S = s.sigma;
    std::vector<RelationCheck> rs;
    rs.push_back(check_relation("Sigma_4 = q^-2", S[4], C("q^-2"), order));
    rs.push_back(check_relation("Sigma_3 = -q^-1 Sigma_1", S[3], C("-q^-1") * S[1], order));
    rs.push_back(check_relation("(q - 1)Sigma_2 = (q + q^-1 - 3)Sigma_1 + 2(1 - q^-1)", C("q - 1") * S[2],
                                C("q + q^-1 - 3") * S[1] + C("2 - 2q^-1"), order));
    const QSeries qm1 = C("q - 1");
    for (std::size_t i = 0; i < 4; ++i) {
      const QSeries& X = s.X[i];
      QSeries X2 = X * X, X3 = X2 * X, X4 = X3 * X;
      QSeries lhs = qm1 * X4 - qm1 * S[1] * X3 + (C("q + q^-1 - 3") * S[1] + C("2 - 2q^-1")) * X2 +
                    C("1 - q^-1") * S[1] * X + C("q^-1 - q^-2");
      rs.push_back(check_relation("(q - 1) * quartic(X" + std::to_string(i + 1) + ") = 0", lhs, C("0"), order));
    }
    return rs;
  });
}

VietaReport pairwise_relations_deg4(long b, long order) {
  return with_margin(4, b, order, [&](const AlgebraicRootSystem& s) {
    const auto& X = s.X;
    const QSeries q = C("q"), qm1 = C("q - 1"), tail = C("1 - q^-1"), one = C("1");
    std::vector<RelationCheck> rs;
    rs.push_back(check_relation("(q - 1)X1X4 = -X1 - X4 + 1 - q^-1", qm1 * X[0] * X[3], -X[0] - X[3] + tail, order));
    rs.push_back(check_relation("(q - 1)X2X3 = -X2 - X3 + 1 - q^-1", qm1 * X[1] * X[2], -X[1] - X[2] + tail, order));
    rs.push_back(check_relation("qX1X2 = (q - 1)(X1 + X2) + 1", q * X[0] * X[1], qm1 * (X[0] + X[1]) + one, order));
    rs.push_back(check_relation("qX3X4 = (q - 1)(X3 + X4) + 1", q * X[2] * X[3], qm1 * (X[2] + X[3]) + one, order));
    rs.push_back(check_relation("qX1X3 = -1", q * X[0] * X[2], C("-1"), order));
    rs.push_back(check_relation("qX2X4 = -1", q * X[1] * X[3], C("-1"), order));
    return rs;
  });
}

VietaReport quantized_vieta_deg6(long b, long order) {
  return with_margin(6, b, order, [&](const AlgebraicRootSystem& s) {
    const auto& S = s.sigma;
    std::vector<RelationCheck> rs;
    rs.push_back(check_relation("Sigma_6 = 1", S[6], C("1"), order));
    rs.push_back(check_relation("Sigma_5 = -Sigma_1 + 6", S[5], -S[1] + C("6"), order));
    rs.push_back(check_relation("Sigma_4 = -5Sigma_1 + Sigma_2 + 15", S[4], C("-5") * S[1] + S[2] + C("15"), order));
    rs.push_back(check_relation("Sigma_3 = -5Sigma_1 + 2Sigma_2 + 10", S[3], C("-5") * S[1] + C("2") * S[2] + C("10"),
                                order));
    rs.push_back(check_relation("(q - 1)Sigma_2 = (q^2 + q - 4 + q^-1)Sigma_1 + 3(-q^2 + q + 2 - q^-1)",
                                C("q - 1") * S[2], C("q^-1 - 4 + q + q^2") * S[1] + C("-3q^-1 + 6 + 3q - 3q^2"),
                                order));
    const auto& X = s.X;
    const QSeries q = C("q"), jcoef = C("1 - q^-1"), qinv = C("q^-1"), one = C("1"), tail = C("1 - q");
    auto jrel = [&](int i, int j) {
      std::string a = "X" + std::to_string(i), b2 = "X" + std::to_string(j);
      return check_relation(a + b2 + " = q^-1(q - 1)(" + a + " + " + b2 + ") + q^-1", X[i - 1] * X[j - 1],
                            jcoef * (X[i - 1] + X[j - 1]) + qinv, order);
    };
    auto grel = [&](int i, int j, int k) {
      std::string a = "X" + std::to_string(i), b2 = "X" + std::to_string(j), c = "X" + std::to_string(k);
      return check_relation(a + b2 + " = " + c + " - 1", X[i - 1] * X[j - 1], X[k - 1] - one, order);
    };
    auto krel = [&](int i, int j) {
      std::string a = "X" + std::to_string(i), b2 = "X" + std::to_string(j);
      return check_relation(a + b2 + " = q(" + a + " + " + b2 + ") + 1 - q", X[i - 1] * X[j - 1],
                            q * (X[i - 1] + X[j - 1]) + tail, order);
    };
    rs.push_back(jrel(1, 2));
    rs.push_back(grel(1, 5, 1));
    rs.push_back(grel(2, 6, 2));
    rs.push_back(krel(1, 4));
    rs.push_back(jrel(4, 5));
    rs.push_back(grel(3, 5, 5));
    rs.push_back(grel(4, 6, 6));
    rs.push_back(krel(2, 3));
    rs.push_back(jrel(3, 6));
    rs.push_back(grel(1, 3, 3));
    rs.push_back(grel(2, 4, 4));
    rs.push_back(krel(5, 6));
    return rs;
  });
}

VietaReport symmetry_transport(int degree, long b, long order) {
  return with_margin(degree, b, order, [&](const AlgebraicRootSystem& s) {
    struct Move {
      const char* gen;
      QMatrix m;
      int from, to;
    };
    std::vector<Move> moves;
    const QMatrix J = generator(Gen::J), S = generator(Gen::S), N = generator(Gen::N);
    const QMatrix G = generator(Gen::R) * generator(Gen::S);
    if (degree == 4) {
      moves = {{"N", N, 4, 1}, {"N", N, 3, 2}, {"J", J, 1, 2}, {"J", J, 3, 4}, {"S", S, 1, 3}, {"S", S, 2, 4}};
    } else {
      moves = {{"Gamma", G, 1, 5}, {"Gamma", G, 5, 3}, {"Gamma", G, 3, 1}, {"Gamma", G, 2, 6}, {"Gamma", G, 6, 4},
               {"Gamma", G, 4, 2}, {"J", J, 1, 2},     {"J", J, 4, 5},     {"J", J, 3, 6}};
    }
    std::vector<RelationCheck> rs;
    for (const auto& mv : moves)
      rs.push_back(check_relation(std::string(mv.gen) + "_q X" + std::to_string(mv.from) + " = X" +
                                      std::to_string(mv.to),
                                  mobius_series(mv.m, s.X[mv.from - 1]), s.X[mv.to - 1], order));
    return rs;
  });
}

std::vector<GaloisPermutation> galois_permutations(int degree, long b) {
  AlgebraicRootSystem s = root_system(degree, b, 2, 2);
  std::vector<std::pair<std::string, IntMatrix>> maps;
  if (degree == 4) maps = {{"J", kJ}, {"S", kS}, {"N", kN}};
  else maps = {{"Gamma", kGamma}, {"J", kJ}};
  std::vector<GaloisPermutation> out;
  for (const auto& [name, T] : maps) {
    GaloisPermutation p;
    p.name = name;
    std::vector<RealRoot> cands = s.roots;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      RealRoot x = s.roots[i];
      p.image.push_back(image_index(T, x, cands));
    }
    std::vector<char> seen(p.image.size(), 0);
    for (std::size_t i = 0; i < p.image.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p.image[j]) {
        seen[j] = 1;
        ++len;
      }
      p.cycle_lengths.push_back(len);
    }
    std::sort(p.cycle_lengths.begin(), p.cycle_lengths.end());
    out.push_back(std::move(p));
  }
  return out;
}

bool SplitReport::ok() const {
  return classical_limit_ok &&
         std::all_of(relations.begin(), relations.end(), [](const RelationCheck& r) { return r.holds; });
}

SplitReport split_case_deg4(long n, int sign, long order) {
  if (sign != 1 && sign != -1) throw OutOfRange("sign must be +1 or -1");
  if (sign < 0 && n < 3) throw OutOfRange("b = n^2 - 2 needs n >= 3");
  if (sign > 0 && n < 1) throw OutOfRange("b = n^2 + 2 needs n >= 1");
  SplitReport rep;
  rep.n = n;
  rep.sign = sign;
  rep.b = n * n + 2 * sign;
  const LaurentPoly q = LaurentPoly::qpow(1), qi = LaurentPoly::qpow(-1);
  LaurentPoly s1, s2, s3, s4 = LaurentPoly::qpow(-2);
  // Quadratic X^2 + u X + v and the indices of the roots it annihilates.
  struct Quad {
    LaurentPoly u, v;
    int r1, r2;
    std::string name;
  };
  std::vector<Quad> quads;
  if (sign < 0) {
    LaurentPoly p = quantized_integer(n, Flavor::sharp), m = quantized_integer(-n, Flavor::sharp);
    quads = {{-p, LaurentPoly::qpow(n - 1), 1, 2, "X^2 - [n]^sharp X + q^(n-1)"},
             {-m, LaurentPoly::qpow(-n - 1), 3, 4, "X^2 - [-n]^sharp X + q^(-n-1)"}};
    s1 = p + m;
    s2 = p * m + LaurentPoly::qpow(-n - 1) + LaurentPoly::qpow(n - 1);
    s3 = LaurentPoly::qpow(n - 1) * m + LaurentPoly::qpow(-n - 1) * p;
  } else {
    LaurentPoly p = quantized_integer(n, Flavor::flat), m = quantized_integer(-n, Flavor::flat);
    quads = {{qi - 1 - p, -qi, 1, 3, "X^2 + (q^-1 - 1 - [n]^flat)X - q^-1"},
             {qi - 1 - m, -qi, 2, 4, "X^2 + (q^-1 - 1 - [-n]^flat)X - q^-1"}};
    s1 = 2 - 2 * qi + p + m;
    s2 = p * m - (qi - 1) * (p + m) + 1 - 4 * qi + LaurentPoly::qpow(-2);
    s3 = 2 * (LaurentPoly::qpow(-2) - qi) - qi * (p + m);
  }
  rep.classical_limit_ok = s1.eval_at_one() == 0 && s2.eval_at_one() == -rep.b && s3.eval_at_one() == 0 &&
                           s4.eval_at_one() == 1;
  VietaReport vr = with_margin(4, rep.b, order, [&](const AlgebraicRootSystem& s) {
    std::vector<RelationCheck> rs;
    for (const auto& Q : quads)
      for (int r : {Q.r1, Q.r2}) {
        const QSeries& X = s.X[r - 1];
        rs.push_back(check_relation(Q.name + " at X" + std::to_string(r), X * X + C(Q.u) * X + C(Q.v), C("0"), order));
      }
    rs.push_back(check_relation("Sigma_1 = " + s1.to_string(), s.sigma[1], C(s1), order));
    rs.push_back(check_relation("Sigma_2 = " + s2.to_string(), s.sigma[2], C(s2), order));
    rs.push_back(check_relation("Sigma_3 = " + s3.to_string(), s.sigma[3], C(s3), order));
    rs.push_back(check_relation("Sigma_4 = q^-2", s.sigma[4], C(s4), order));
    return rs;
  });
  rep.relations = std::move(vr.relations);
  return rep;
}

LaurentPoly deg6_b2_printed_sigma1() { return LaurentPoly::parse("q + 2q^2 + 3q^3 + 2q^4 + q^5"); }

VietaReport deg6_b2_report(long order) {
  // Quantized factors a X^2 + u X + v of (x^2 - 3x + 1)(x^2 - x - 1)(x^2 + x - 1).
  struct Quad {
    IntPoly classical;
    LaurentPoly a, u, v;
    std::string name;
  };
  const LaurentPoly three = quantized_integer(3, Flavor::sharp);
  const std::vector<Quad> quads = {
      {IntPoly::from_longs({1, -3, 1}), 1, -three, LaurentPoly::qpow(2), "X^2 - [3]^sharp X + q^2"},
      {IntPoly::from_longs({-1, -1, 1}), LaurentPoly::qpow(1), LaurentPoly::parse("1 - q - q^2"), -1,
       "qX^2 - (q^2 + q - 1)X - 1"},
      {IntPoly::from_longs({-1, 1, 1}), LaurentPoly::qpow(2), LaurentPoly::parse("1 + q - q^2"),
       -LaurentPoly::qpow(1), "q^2X^2 - (q^2 - q - 1)X - q"}};
  // Sum of the roots of the quantized factors: sum of -u/a.
  LaurentPoly factor_sum;
  for (const auto& Q : quads) factor_sum += div_exact(-Q.u, Q.a);
  return with_margin(6, 2, order, [&](const AlgebraicRootSystem& s) {
    std::vector<RelationCheck> rs;
    for (const auto& Q : quads) {
      std::vector<RealRoot> own = isolate_real_roots(Q.classical, 2);
      for (std::size_t i = 0; i < s.roots.size(); ++i) {
        // Does root i belong to this factor?  Match it against the factor's
        // own isolated roots and the full root list.
        bool mine = false;
        for (auto& r : own) {
          std::vector<RealRoot> all = s.roots;
          RealRoot x = r;
          if (image_index(IntMatrix{1, 0, 0, 1}, x, all) == i) mine = true;
        }
        if (!mine) continue;
        const QSeries& X = s.X[i];
        rs.push_back(check_relation(Q.name + " at X" + std::to_string(i + 1), C(Q.a) * X * X + C(Q.u) * X + C(Q.v),
                                    C("0"), order));
      }
    }
    rs.push_back(check_relation("Sigma_1 = sum of the quantized factors' root sums = " + factor_sum.to_string(),
                                s.sigma[1], C(factor_sum), order));
    rs.push_back(check_relation("Sigma_1 = " + deg6_b2_printed_sigma1().to_string() + " (printed value)", s.sigma[1],
                                C(deg6_b2_printed_sigma1()), order));
    return rs;
  });
}

VietaReport deg6_b3_cubics(long order) {
  return with_margin(6, 3, order, [&](const AlgebraicRootSystem& s) {
    const auto& X = s.X;
    QSeries B1 = X[0] + X[2] + X[4], B2 = X[1] + X[3] + X[5];
    std::vector<RelationCheck> rs;
    auto cubic = [&](const QSeries& B, const QSeries& Y) {
      return Y * Y * Y - B * Y * Y + (B - C("3")) * Y + C("1");
    };
    for (int i : {1, 3, 5})
      rs.push_back(check_relation("X^3 - B1 X^2 + (B1 - 3)X + 1 at X" + std::to_string(i), cubic(B1, X[i - 1]), C("0"),
                                  order));
    for (int i : {2, 4, 6})
      rs.push_back(check_relation("X^3 - B2 X^2 + (B2 - 3)X + 1 at X" + std::to_string(i), cubic(B2, X[i - 1]), C("0"),
                                  order));
    rs.push_back(check_relation("B1 + B2 = Sigma_1", B1 + B2, s.sigma[1], order));
    return rs;
  });
}

}  // namespace qproj
