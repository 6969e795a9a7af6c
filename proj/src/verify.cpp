#include "qproj/verify.hpp"

#include "qproj/error.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace qproj {

std::vector<long> load_digits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open digit file '" + path + "'");
  std::vector<long> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      std::size_t used = 0;
      long v = std::stol(line.substr(first), &used);
      if (line.find_first_not_of(" \t\r", first + used) != std::string::npos) throw std::invalid_argument(line);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad digit on line " + std::to_string(lineno) + " of '" + path + "'");
    }
  }
  if (out.empty()) throw ParseError("digit file '" + path + "' is empty");
  return out;
}

long Corpus::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

GroupWord Corpus::word(int max_len) {
  static const Gen gens[] = {Gen::R, Gen::S, Gen::N, Gen::J, Gen::L};
  std::vector<Letter> ls;
  long len = uniform(1, max_len);
  for (long i = 0; i < len; ++i) {
    Gen g = gens[uniform(0, 4)];
    long e = g == Gen::R ? uniform(1, 3) * (uniform(0, 1) ? 1 : -1) : (uniform(0, 1) ? 1 : -1);
    ls.push_back({g, e});
  }
  return GroupWord(std::move(ls));
}

GroupWord Corpus::word_with_det(int det, int max_len) {
  while (true) {
    GroupWord w = word(max_len);
    if (word_det(w) == det) return w;
  }
}

ExtRational Corpus::rational() {
  if (uniform(0, 19) == 0) return ExtRational::infinity();
  Rational r(uniform(-40, 40), uniform(1, 25));
  r.canonicalize();
  return r;
}

bool SuiteReport::ok() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"palindromes", "posets", "relations", "series", "vieta"};
  return names;
}

bool flavor_rule_holds(const GroupWord& w, const ExtRational& x, Flavor f, bool twisted_action) {
  QRational in = quantize(x, f);
  QRational out = twisted_action ? act_twisted(w, in) : act(w, in);
  int det = word_det(w);
  bool flips = twisted_action ? det == 1 : det == -1;
  Flavor expected = flips ? opposite(f) : f;
  QRational want = quantize(classical_mobius(classical_matrix(w), x), expected);
  return out.flavor == expected && out.value == want.value && out.point == want.point;
}

std::vector<std::pair<long, long>> one_over_pi_printed() {
  return {{3, 1},    {5, -1},    {6, -1},  {7, 1},    {8, 2},     {10, -4},   {11, -1},  {12, 5},
          {13, 5},   {14, -6},   {15, -11}, {16, 3},   {17, 20},   {18, 6},    {19, -28}, {20, -26},
          {21, 31},  {22, 58},   {23, -17}, {24, -103}, {25, -28}, {26, 146},  {27, 131}, {28, -165},
          {29, -299}, {30, 94}};
}

namespace {

void fail(PropertyResult& p, const std::string& what) {
  if (p.passed) p.counterexample = what;
  p.passed = false;
}

std::string shape_string(const std::vector<long>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os.str();
}

SuiteReport relations_suite(std::uint64_t seed) {
  SuiteReport rep{"relations", {}};
  for (const auto& r : check_presentation()) {
    PropertyResult p{r.name, r.ok(), 1, ""};
    if (!r.ok())
      p.counterexample = "unit " + (r.unit ? r.unit->to_string() : std::string("none")) + ", expected " +
                         (r.expected ? r.expected->to_string() : std::string("any"));
    rep.properties.push_back(p);
  }
  Corpus corpus(seed);
  for (bool tw : {false, true}) {
    PropertyResult p{tw ? "flavor flips under the twisted action iff det = +1"
                        : "flavor flips under the action iff det = -1",
                     true, 0, ""};
    for (int i = 0; i < 500; ++i) {
      GroupWord w = corpus.word();
      ExtRational x = corpus.rational();
      Flavor f = corpus.uniform(0, 1) ? Flavor::sharp : Flavor::flat;
      ++p.checked;
      if (!flavor_rule_holds(w, x, f, tw))
        fail(p, w.to_string() + " on [" + x.to_string() + "]^" + flavor_name(f));
    }
    rep.properties.push_back(p);
  }
  return rep;
}

SuiteReport palindromes_suite(std::uint64_t seed) {
  SuiteReport rep{"palindromes", {}};
  {
    PropertyResult p{"trace of N R^2 S R^2 S R^3 S", true, 1, ""};
    TraceResult t = qtrace(GroupWord::parse("N R^2 S R^2 S R^3 S"));
    LaurentPoly want = -LaurentPoly::parse("1 + q + 2q^2 + q^3 + 2q^4 + q^5 + q^6");
    if (t.normalized != want) fail(p, trace_to_string(t.normalized));
    rep.properties.push_back(p);
  }
  Corpus corpus(seed);
  {
    PropertyResult p{"det -1 traces are palindromic with one sign", true, 0, ""};
    for (int i = 0; i < 300; ++i) {
      GroupWord w = corpus.word_with_det(-1, 8);
      auto r = check_palindrome_det_neg(w);
      ++p.checked;
      if (!r.ok()) fail(p, w.to_string() + " -> " + trace_to_string(r.trace.normalized));
    }
    rep.properties.push_back(p);
  }
  {
    // Classical trace +-1 is where single sign breaks down: there the trace
    // is +-q^k (1 - q + q^2).  These two properties pin that down.
    PropertyResult other{"det -1 words with |classical trace| != 1: palindromic with one sign", true, 0, ""};
    PropertyResult unit_tr{"det -1 words with |classical trace| = 1: trace is +-q^k t", true, 0, ""};
    const LaurentPoly t = LaurentPoly::parse("1 - q + q^2");
    for (int i = 0; i < 300; ++i) {
      GroupWord w = corpus.word_with_det(-1, 8);
      IntMatrix m = classical_matrix(w);
      Integer tr = abs(Integer(m.a + m.d));
      auto r = check_palindrome_det_neg(w);
      if (tr == 1) {
        ++unit_tr.checked;
        if (r.trace.normalized != t && r.trace.normalized != -t)
          fail(unit_tr, w.to_string() + " -> " + trace_to_string(r.trace.normalized));
      } else {
        ++other.checked;
        if (!r.ok()) fail(other, w.to_string() + " -> " + trace_to_string(r.trace.normalized));
      }
    }
    rep.properties.push_back(other);
    rep.properties.push_back(unit_tr);
  }
  {
    PropertyResult p{"positivity and (H) on Hirzebruch-Jung tuples k <= 4, c_i <= 5", true, 0, ""};
    std::vector<long> c;
    std::function<void()> rec = [&] {
      if (!c.empty()) {
        ++p.checked;
        HReport h = check_H_invariants(c);
        if (!h.ok()) fail(p, shape_string(c));
      }
      if (c.size() == 4) return;
      for (long ci = 2; ci <= 5; ++ci) {
        c.push_back(ci);
        rec();
        c.pop_back();
      }
    };
    rec();
    rep.properties.push_back(p);
  }
  {
    PropertyResult p{"Tr(N M(c1..ck)) = Tr(N M(ck..c1))", true, 0, ""};
    for (int i = 0; i < 100; ++i) {
      std::vector<long> c(static_cast<std::size_t>(corpus.uniform(1, 5)));
      for (auto& ci : c) ci = corpus.uniform(2, 6);
      ++p.checked;
      if (!reversal_identity(c).equal) fail(p, shape_string(c));
    }
    rep.properties.push_back(p);
  }
  {
    PropertyResult p{"Tr(uv) = Tr(vu)", true, 0, ""};
    for (int i = 0; i < 100; ++i) {
      GroupWord u = corpus.word(), v = corpus.word();
      TraceResult a = qtrace(u * v), b = qtrace(v * u);
      ++p.checked;
      bool same = a.normalized == b.normalized && (a.normalized.is_zero() || a.unit == b.unit);
      if (!same) fail(p, u.to_string() + " | " + v.to_string());
    }
    rep.properties.push_back(p);
  }
  return rep;
}

SuiteReport posets_suite() {
  SuiteReport rep{"posets", {}};
  {
    PropertyResult p{"admissible ideals of (1,2,2)", true, 1, ""};
    std::vector<Ideal> want = {{},           {0},          {0, 3},          {2, 3},
                               {0, 2, 3},    {0, 1, 2, 3}, {0, 3, 4, 5},    {0, 2, 3, 4, 5},
                               {0, 1, 2, 3, 4, 5}};
    auto got = admissible_ideals(build_fence({1, 2, 2}));
    if (got != want) {
      std::string s;
      for (const auto& I : got) s += ideal_to_string(I) + " ";
      fail(p, s);
    }
    rep.properties.push_back(p);
  }
  PropertyResult gf{"generating function = t^-(m-1)/2 Tr, odd shapes with sum <= 12", true, 0, ""};
  PropertyResult split{"ideals with / without 0 give qU and V'", true, 0, ""};
  PropertyResult oracle{"depth-first enumeration = subset filter, sum <= 10", true, 0, ""};
  for (const auto& s : odd_shapes(12)) {
    ++gf.checked;
    auto r = compare_with_trace(s);
    if (!r.ok) fail(gf, shape_string(s));
    auto fence = build_fence(s);
    ++split.checked;
    if (!fence_split(fence).ok) fail(split, shape_string(s));
    long sum = 0;
    for (long a : s) sum += a;
    if (sum <= 10) {
      ++oracle.checked;
      if (admissible_ideals(fence) != admissible_ideals_bruteforce(fence)) fail(oracle, shape_string(s));
    }
  }
  rep.properties.push_back(gf);
  rep.properties.push_back(split);
  rep.properties.push_back(oracle);
  return rep;
}

void add_relations(SuiteReport& rep, const std::string& prefix, const std::vector<RelationCheck>& rs) {
  PropertyResult p{prefix, true, 0, ""};
  for (const auto& r : rs) {
    ++p.checked;
    if (!r.holds)
      fail(p, r.name + " (first divergence at q^" +
                  (r.first_divergence ? std::to_string(*r.first_divergence) : std::string("?")) + ")");
  }
  rep.properties.push_back(p);
}

SuiteReport vieta_suite() {
  SuiteReport rep{"vieta", {}};
  const long N = 20;
  for (long b : {5, 7, 12}) {
    std::string tag = "degree 4, b = " + std::to_string(b);
    add_relations(rep, tag + ": quantized Vieta relations", quantized_vieta_deg4(b, N).relations);
    add_relations(rep, tag + ": pairwise relations", pairwise_relations_deg4(b, N).relations);
    add_relations(rep, tag + ": symmetry transport", symmetry_transport(4, b, N).relations);
  }
  for (long b : {1, 2, 3, 4}) {
    std::string tag = "degree 6, b = " + std::to_string(b);
    add_relations(rep, tag + ": quantized Vieta and pairwise relations", quantized_vieta_deg6(b, N).relations);
    add_relations(rep, tag + ": symmetry transport", symmetry_transport(6, b, N).relations);
    PropertyResult p{tag + ": Gamma has two 3-cycles, J three 2-cycles", true, 1, ""};
    auto perms = galois_permutations(6, b);
    if (perms[0].cycle_lengths != std::vector<std::size_t>{3, 3} ||
        perms[1].cycle_lengths != std::vector<std::size_t>{2, 2, 2})
      fail(p, "unexpected cycle type");
    rep.properties.push_back(p);
  }
  {
    VietaReport r = deg6_b2_report(N);
    std::vector<RelationCheck> printed, rest;
    for (const auto& x : r.relations) (x.name.find("printed") != std::string::npos ? printed : rest).push_back(x);
    add_relations(rep, "degree 6, b = 2: quantized quadratic factors and their root sum", rest);
    add_relations(rep, "degree 6, b = 2: Sigma_1 = q + 2q^2 + 3q^3 + 2q^4 + q^5 as printed", printed);
  }
  add_relations(rep, "degree 6, b = 3: cubic factor identities", deg6_b3_cubics(N).relations);
  for (long n : {3, 4, 5})
    for (int sign : {-1, 1}) {
      SplitReport s = split_case_deg4(n, sign, N);
      std::string tag = "split case n = " + std::to_string(n) + (sign < 0 ? ", b = n^2 - 2" : ", b = n^2 + 2");
      add_relations(rep, tag, s.relations);
      PropertyResult p{tag + ": closed forms at q = 1", s.classical_limit_ok, 1, ""};
      if (!p.passed) p.counterexample = "classical Vieta values not recovered";
      rep.properties.push_back(p);
    }
  return rep;
}

SuiteReport series_suite(const std::string& digits_path) {
  SuiteReport rep{"series", {}};
  PropertyResult p{"[1/pi]_q: thirty printed coefficients", true, 0, ""};
  ListDigits stream(load_digits(digits_path), true);
  QSeries pi = quantize_real(stream, 33);
  QSeries inv = mobius_series(generator(Gen::N) * generator(Gen::S), pi);
  for (auto [e, c] : one_over_pi_printed()) {
    ++p.checked;
    if (inv.coeff(e) != c) fail(p, "coefficient of q^" + std::to_string(e) + " is " + to_string(inv.coeff(e)));
  }
  for (long e = 0; e <= 30; ++e) {
    auto printed = one_over_pi_printed();
    bool listed = std::any_of(printed.begin(), printed.end(), [&](auto& t) { return t.first == e; });
    if (!listed && inv.coeff(e) != 0) fail(p, "unexpected term at q^" + std::to_string(e));
  }
  rep.properties.push_back(p);

  PropertyResult gap{"[x]^sharp - [x]^flat vanishes below the gap bound", true, 0, ""};
  for (long den = 1; den <= 12; ++den)
    for (long num = -20; num <= 20; ++num) {
      Rational x(num, den);
      x.canonicalize();
      if (x.get_den() != den) continue;
      ++gap.checked;
      if (!left_right_gap(x, 40).ok) fail(gap, x.get_str());
    }
  rep.properties.push_back(gap);

  PropertyResult dec{"decode_cf recovers sqrt(2), golden ratio, 7/5", true, 3, ""};
  {
    PeriodicDigits s2({1}, {2}), gr({1}, {1});
    auto d1 = decode_cf(quantize_real(s2, 20), 20, 40);
    auto d2 = decode_cf(quantize_real(gr, 20), 20, 40);
    auto d3 = decode_cf(taylor(quantize(Rational(7, 5), Flavor::sharp).point, 20), 20, 40);
    auto all_eq = [](const std::vector<long>& d, long first, long rest) {
      if (d.size() < 2 || d[0] != first) return false;
      return std::all_of(d.begin() + 1, d.end(), [&](long x) { return x == rest; });
    };
    if (!all_eq(d1.digits, 1, 2)) fail(dec, "sqrt(2)");
    if (!all_eq(d2.digits, 1, 1)) fail(dec, "golden ratio");
    if (evaluate(CFExpansion{CFKind::positive, d3.digits}) != Rational(7, 5) || !d3.terminated) fail(dec, "7/5");
  }
  rep.properties.push_back(dec);
  return rep;
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::uint64_t seed, const std::string& digits_path) {
  if (name == "relations") return relations_suite(seed);
  if (name == "palindromes") return palindromes_suite(seed);
  if (name == "posets") return posets_suite();
  if (name == "vieta") return vieta_suite();
  if (name == "series") return series_suite(digits_path);
  throw OutOfRange("unknown suite '" + name + "'");
}

Json to_json(const SuiteReport& r) {
  Json props = Json::array();
  for (const auto& p : r.properties)
    props.push_back({{"name", p.name},
                     {"passed", p.passed},
                     {"checked", p.checked},
                     {"counterexample", p.passed ? Json(nullptr) : Json(p.counterexample)}});
  return {{"suite", r.name}, {"ok", r.ok()}, {"properties", props}};
}

}  // namespace qproj
