// Acceptance run: one PASS/FAIL line per criterion.  Every comparison is
// exact (or exact modulo q^N where a precision is named); the only pinned
// tolerances are the wall-clock limits below.

#include "qproj/error.hpp"
#include "qproj/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace qproj;

namespace {

// Wall-clock limits in seconds, one per criterion.
constexpr double kLimitGolden = 1.0;
constexpr double kLimitPresentation = 1.0;
constexpr double kLimitFlavorRules = 30.0;
constexpr double kLimitTraces = 60.0;
constexpr double kLimitFences = 30.0;
constexpr double kLimitOneOverPi = 10.0;
constexpr double kLimitInjectivity = 60.0;
constexpr double kLimitAlgebraic = 300.0;

constexpr std::uint64_t kSeed = 20240501;

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }
ProjPoint pt(const char* num, const char* den) { return ProjPoint::make(P(num), P(den)); }

// Collects the first few failed checks of a criterion.
struct Checks {
  std::vector<std::string> failed;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
};

int run(int number, const std::string& title, double limit, const std::function<void(Checks&)>& body) {
  Checks c;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failed.push_back(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit) {
    std::ostringstream os;
    os << "took " << std::fixed << std::setprecision(2) << secs << " s, limit " << limit << " s";
    c.failed.push_back(os.str());
  }
  bool pass = c.failed.empty();
  std::cout << (pass ? "PASS" : "FAIL") << " " << number << " " << title << " (" << std::fixed
            << std::setprecision(3) << secs << " s, limit " << std::setprecision(0) << limit << " s)";
  for (std::size_t i = 0; i < c.failed.size() && i < 5; ++i) std::cout << (i ? "; " : " -- ") << c.failed[i];
  if (c.failed.size() > 5) std::cout << "; ... " << c.failed.size() - 5 << " more";
  std::cout << std::endl;
  return pass ? 0 : 1;
}

void golden_values(Checks& c) {
  c.expect(quantize(Rational(7, 5), Flavor::sharp).point == pt("1 + q + 2q^2 + 2q^3 + q^4", "1 + q + 2q^2 + q^3"),
           "[7/5]^sharp");
  c.expect(quantize(Rational(7, 5), Flavor::flat).point ==
               pt("1 + q + q^2 + 2q^3 + q^4 + q^5", "1 + q + q^2 + q^3 + q^4"),
           "[7/5]^flat");
  c.expect(quantize(Rational(11, 3), Flavor::sharp).point ==
               pt("1 + 2q + 3q^2 + 2q^3 + 2q^4 + q^5", "1 + q + q^2"),
           "[11/3]^sharp");
  c.expect(quantize(Rational(3, 2), Flavor::flat).point == pt("1 + q^2 + q^3", "1 + q^2"), "[3/2]^flat");
  for (long n = 1; n <= 10; ++n) {
    // Written out term by term from the closed forms.
    LaurentPoly sharp, flat, neg_flat;
    for (long k = 0; k <= n - 1; ++k) sharp += LaurentPoly::qpow(k);
    for (long k = 0; k <= n - 2; ++k) flat += LaurentPoly::qpow(k);
    flat += LaurentPoly::qpow(n);
    for (long k = 1; k <= n - 1; ++k) neg_flat -= LaurentPoly::qpow(-k);
    neg_flat -= LaurentPoly::qpow(-(n + 1));
    std::string tag = std::to_string(n);
    c.expect(quantize(n, Flavor::sharp).point == ProjPoint::make(sharp, 1), "[" + tag + "]^sharp");
    c.expect(quantize(n, Flavor::flat).point == ProjPoint::make(flat, 1), "[" + tag + "]^flat");
    c.expect(quantize(-n, Flavor::flat).point == ProjPoint::make(neg_flat, 1), "[-" + tag + "]^flat");
  }
  c.expect(generator(Gen::J) == QMatrix(P("q - 1"), 1, P("q"), P("1 - q")), "J_q");
  c.expect(generator(Gen::L) == QMatrix(1, 0, 1, P("q^-1")), "L_q");
  c.expect(generator(Gen::I) == QMatrix(1, P("q - 1"), P("1 - q"), P("q")), "I_q");
  TwistedOp r_bar = twisted(GroupWord::parse("R"));
  c.expect(r_bar.twisted && r_bar.matrix == QMatrix(1, P("q^2"), P("1 - q"), P("q")), "R-bar_q");
  // The displayed N-bar_q is [[-t, 0], [0, q t]] tau = [[-1, 0], [0, q]] tau,
  // an equality of PGL2 elements; it is compared as such.
  TwistedOp n_bar = twisted(GroupWord::parse("N"));
  QMatrix n_display(-LaurentPoly::t(), 0, 0, LaurentPoly::t().shifted(1));
  c.expect(n_bar.twisted && proj_equal(n_bar.matrix, n_display) &&
               proj_equal(n_bar.matrix, QMatrix(-1, 0, 0, P("q"))),
           "N-bar_q");
}

void presentation(Checks& c) {
  for (const auto& r : check_presentation())
    c.expect(r.ok(), r.name + ": unit " + (r.unit ? r.unit->to_string() : std::string("none")) +
                         (r.expected ? ", asserted " + r.expected->to_string() : std::string()));
}

void flavor_rules(Checks& c) {
  Corpus corpus(kSeed);
  for (int i = 0; i < 500; ++i) {
    GroupWord w = corpus.word();
    ExtRational x = corpus.rational();
    Flavor f = corpus.uniform(0, 1) ? Flavor::sharp : Flavor::flat;
    std::string tag = w.to_string() + " on [" + x.to_string() + "]^" + flavor_name(f);
    c.expect(flavor_rule_holds(w, x, f, false), "plain: " + tag);
    c.expect(flavor_rule_holds(w, x, f, true), "twisted: " + tag);
  }
}

void traces(Checks& c) {
  TraceResult t = qtrace(GroupWord::parse("N R^2 S R^2 S R^3 S"));
  c.expect(t.normalized == -P("1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6"), "example trace");
  Corpus corpus(kSeed);
  int bad = 0;
  std::string first;
  for (int i = 0; i < 300; ++i) {
    GroupWord w = corpus.word_with_det(-1, 8);
    PalindromeReport r = check_palindrome_det_neg(w);
    if (!r.ok()) {
      if (bad++ == 0) first = w.to_string() + " -> " + trace_to_string(r.trace.normalized);
    }
  }
  c.expect(bad == 0, std::to_string(bad) + "/300 det -1 words not palindromic with one sign, first " + first);
  std::vector<long> cs;
  std::function<void()> rec = [&] {
    if (!cs.empty()) {
      HReport h = check_H_invariants(cs);
      std::string tag;
      for (long x : cs) tag += std::to_string(x) + " ";
      c.expect(h.ok(), "(H) or positivity fails on " + tag);
    }
    if (cs.size() == 4) return;
    for (long x = 2; x <= 5; ++x) {
      cs.push_back(x);
      rec();
      cs.pop_back();
    }
  };
  rec();
}

void fences(Checks& c) {
  for (const auto& s : odd_shapes(12)) {
    if (!compare_with_trace(s).ok) {
      std::string tag;
      for (long a : s) tag += std::to_string(a) + ",";
      c.expect(false, "shape " + tag);
    }
  }
  std::vector<std::string> got;
  for (const auto& I : admissible_ideals(build_fence({1, 2, 2}))) got.push_back(ideal_to_string(I));
  std::vector<std::string> want = {"{}",        "{0}",          "{0,3}",       "{2,3}",          "{0,2,3}",
                                   "{0,1,2,3}", "{0,3,4,5}",    "{0,2,3,4,5}", "{0,1,2,3,4,5}"};
  c.expect(got == want, "(1,2,2) ideal list");
}

void one_over_pi(Checks& c) {
  ListDigits digits(load_digits(std::string(QPROJ_DATA_DIR) + "/pi_digits.txt"), true);
  QSeries pi = quantize_real(digits, 33);
  QSeries inv = mobius_series(eval_word(GroupWord::parse("N S")), pi);
  c.expect(inv.precision() >= 31, "precision " + std::to_string(inv.precision()));
  auto printed = one_over_pi_printed();
  for (long e = 0; e <= 30 && e < inv.precision(); ++e) {
    auto it = std::find_if(printed.begin(), printed.end(), [&](const auto& p) { return p.first == e; });
    long want = it == printed.end() ? 0 : it->second;
    c.expect(inv.coeff(e) == want, "coefficient of q^" + std::to_string(e));
  }
}

void injectivity(Checks& c) {
  std::set<std::pair<std::string, std::string>> seen;
  long count = 0;
  for (long den = 1; den <= 30; ++den)
    for (long num = -30; num <= 30; ++num) {
      Rational x(num, den);
      x.canonicalize();
      if (x.get_den() != den) continue;
      ProjPoint p = quantize(x, Flavor::sharp).point;
      ++count;
      if (!seen.insert({p.num().to_string(), p.den().to_string()}).second)
        c.expect(false, "collision at " + x.get_str());
    }
  c.expect(count > 1000, "corpus of " + std::to_string(count) + " rationals");

  PeriodicDigits sqrt2({1}, {2}), golden({1}, {1});
  DecodeResult a = decode_cf(quantize_real(sqrt2, 20), 20, 40);
  bool a_ok = a.digits.size() >= 2 && a.digits[0] == 1 &&
              std::all_of(a.digits.begin() + 1, a.digits.end(), [](long d) { return d == 2; });
  c.expect(a_ok, "sqrt(2) prefix");
  DecodeResult b = decode_cf(quantize_real(golden, 20), 20, 40);
  c.expect(b.digits.size() >= 2 && std::all_of(b.digits.begin(), b.digits.end(), [](long d) { return d == 1; }),
           "golden ratio prefix");
  DecodeResult r = decode_cf(taylor(quantize(Rational(7, 5), Flavor::sharp).point, 20), 20, 40);
  c.expect(r.terminated && evaluate(CFExpansion{CFKind::positive, r.digits}) == Rational(7, 5), "7/5");
}

void algebraic(Checks& c) {
  const long N = 20;
  auto take = [&](const std::string& tag, const std::vector<RelationCheck>& rs) {
    for (const auto& r : rs)
      c.expect(r.holds, tag + ": " + r.name +
                            (r.first_divergence ? " (diverges at q^" + std::to_string(*r.first_divergence) + ")"
                                                : std::string()));
  };
  for (long b : {5, 7, 12}) {
    take("deg 4, b=" + std::to_string(b), quantized_vieta_deg4(b, N).relations);
    take("deg 4, b=" + std::to_string(b), pairwise_relations_deg4(b, N).relations);
  }
  for (long b : {1, 2, 3, 4}) take("deg 6, b=" + std::to_string(b), quantized_vieta_deg6(b, N).relations);
  take("deg 6, b=2", deg6_b2_report(N).relations);
  for (long n : {3, 4, 5})
    for (int sign : {-1, 1}) {
      SplitReport s = split_case_deg4(n, sign, N);
      take("split n=" + std::to_string(n) + (sign < 0 ? " b=n^2-2" : " b=n^2+2"), s.relations);
      c.expect(s.classical_limit_ok, "split n=" + std::to_string(n) + " classical limit");
    }
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "golden values", kLimitGolden, golden_values);
  failures += run(2, "presentation relations", kLimitPresentation, presentation);
  failures += run(3, "flavor flip rules, 500 random pairs", kLimitFlavorRules, flavor_rules);
  failures += run(4, "trace suite", kLimitTraces, traces);
  failures += run(5, "fence posets, odd shapes with sum <= 12", kLimitFences, fences);
  failures += run(6, "[1/pi]_q golden coefficients", kLimitOneOverPi, one_over_pi);
  failures += run(7, "injectivity and digit recovery", kLimitInjectivity, injectivity);
  failures += run(8, "quantized algebraic relations", kLimitAlgebraic, algebraic);
  std::cout << (8 - failures) << "/8 criteria pass" << std::endl;
  return failures == 0 ? 0 : 1;
}
