#include "qproj/laurent.hpp"

#include "qproj/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qproj {

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long e) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.val_ = e;
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long valuation, std::vector<Integer> coeffs) {
  LaurentPoly p;
  p.val_ = valuation;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::qint(long n) {
  if (n == 0) return {};
  if (n > 0) return from_coeffs(0, std::vector<Integer>(static_cast<std::size_t>(n), Integer(1)));
  return from_coeffs(n, std::vector<Integer>(static_cast<std::size_t>(-n), Integer(-1)));
}

LaurentPoly LaurentPoly::t() { return from_coeffs(0, {1, -1, 1}); }

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    val_ = 0;
    return;
  }
  val_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

long LaurentPoly::valuation() const {
  if (is_zero()) throw ZeroPolynomial("valuation of the zero polynomial");
  return val_;
}

long LaurentPoly::degree() const {
  if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
  return val_ + static_cast<long>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coeff(long e) const {
  if (is_zero() || e < val_ || e > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

const Integer& LaurentPoly::leading() const {
  if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

const Integer& LaurentPoly::trailing() const {
  if (is_zero()) throw ZeroPolynomial("trailing coefficient of the zero polynomial");
  return coeffs_.front();
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(val_, o.val_);
  long hi = std::max(degree(), o.degree());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<std::size_t>(val_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[static_cast<std::size_t>(o.val_ - lo) + i] += o.coeffs_[i];
  val_ = lo;
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly::from_coeffs(a.val_ + b.val_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.val_ += k;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1), base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::reversed() const {
  if (is_zero()) return {};
  std::vector<Integer> c(coeffs_.rbegin(), coeffs_.rend());
  return from_coeffs(-degree(), std::move(c));
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool LaurentPoly::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c >= 0; });
}

bool LaurentPoly::is_palindromic() const {
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

long LaurentPoly::palindrome_center2() const { return valuation() + degree(); }

namespace {

void append_term(std::ostringstream& os, const Integer& c, long e, bool first) {
  Integer mag = abs(c);
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (e == 0) {
    os << mag.get_str();
    return;
  }
  if (mag != 1) os << mag.get_str();
  os << 'q';
  if (e != 1) os << '^' << e;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    append_term(os, coeffs_[i], val_ + static_cast<long>(i), first);
    first = false;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");
  std::size_t i = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError(why + " in polynomial '" + std::string(text) + "'");
  };
  auto read_int = [&](std::string& digits) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
  };
  LaurentPoly result;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    std::string digits;
    read_int(digits);
    Integer c = digits.empty() ? Integer(1) : Integer(digits);
    long e = 0;
    bool has_q = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) fail("dangling '*'");
      ++i;
      if (i >= s.size() || s[i] != 'q') fail("expected 'q' after '*'");
    }
    if (i < s.size() && s[i] == 'q') {
      has_q = true;
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
          esign = s[i] == '-' ? -1 : 1;
          ++i;
        }
        std::string ed;
        read_int(ed);
        if (ed.empty()) fail("missing exponent");
        e = esign * std::stol(ed);
      }
    }
    if (digits.empty() && !has_q) fail("empty term");
    result += monomial(c * sign, e);
  }
  return result;
}

std::optional<LaurentPoly> try_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  // Both shifted to valuation 0; q is a unit so only the Z[q] parts matter.
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  if (ac.size() < bc.size()) return std::nullopt;
  std::vector<Integer> rem(ac.begin(), ac.end());
  std::size_t qlen = ac.size() - bc.size() + 1;
  std::vector<Integer> quo(qlen);
  const Integer& lb = bc.back();
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = rem[k + bc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer f = top / lb;
    quo[k] = f;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[k + j] -= f * bc[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return LaurentPoly::from_coeffs(a.valuation() - b.valuation(), std::move(quo));
}

LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto r = try_div_exact(a, b);
  if (!r) throw NotDivisible("(" + a.to_string() + ") / (" + b.to_string() + ")");
  return *r;
}

namespace {

// Primitive part shifted to valuation 0 with a positive leading coefficient.
LaurentPoly primitive(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  Integer c = p.content();
  if (p.leading() < 0) c = -c;
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) out.push_back(x / c);
  return LaurentPoly::from_coeffs(0, std::move(out));
}

LaurentPoly pseudo_remainder(LaurentPoly r, const LaurentPoly& b) {
  const long db = b.degree();
  const Integer& lb = b.leading();
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    Integer lr = r.leading();
    r = r.scaled(lb) - b.shifted(shift).scaled(lr);
  }
  return r;
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return primitive(b).scaled(b.content());
  if (b.is_zero()) return primitive(a).scaled(a.content());
  Integer c;
  Integer ca = a.content(), cb = b.content();
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPoly x = primitive(a), y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    LaurentPoly r = primitive(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x.scaled(c);
}

std::optional<LaurentPoly> try_sqrt(const LaurentPoly& a) {
  if (a.is_zero()) return LaurentPoly{};
  if (a.valuation() % 2 != 0 || a.degree() % 2 != 0 || a.leading() < 0) return std::nullopt;
  const auto& pc = a.coeffs();
  const std::size_t n = (pc.size() - 1) / 2;  // degree of the root (after shift)
  Integer lead;
  if (!mpz_perfect_square_p(pc.back().get_mpz_t())) return std::nullopt;
  mpz_sqrt(lead.get_mpz_t(), pc.back().get_mpz_t());
  // r[n] = lead; determine r[n-1], ..., r[0] from the top coefficients.
  std::vector<Integer> r(n + 1);
  r[n] = lead;
  for (std::size_t k = n; k-- > 0;) {
    // coefficient of x^(n + k) in r^2 is 2 r[n] r[k] + sum_{i+j=n+k, k<i,j<n} r[i] r[j]
    Integer s = pc[n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::size_t j = n + k - i;
      if (j > k && j < n) s -= r[i] * r[j];
    }
    Integer den = 2 * lead;
    if (!mpz_divisible_p(s.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
    r[k] = s / den;
  }
  LaurentPoly root = LaurentPoly::from_coeffs(a.valuation() / 2, std::move(r));
  if (root * root != a) return std::nullopt;
  return root;
}

long t_multiplicity(const LaurentPoly& a) {
  if (a.is_zero()) throw ZeroPolynomial("t-multiplicity of zero");
  static const LaurentPoly t = LaurentPoly::t();
  long k = 0;
  LaurentPoly cur = a;
  while (auto next = try_div_exact(cur, t)) {
    cur = std::move(*next);
    ++k;
  }
  return k;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qproj
