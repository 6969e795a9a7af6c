// Command-line front end: one subcommand per module plus the verify runner.
// Exit codes: 0 success, 1 domain error or failed verification, 2 usage.

#include "qproj/error.hpp"
#include "qproj/json_io.hpp"
#include "qproj/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

using namespace qproj;

namespace {

std::vector<long> parse_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::string s = text;
  for (char& c : s)
    if (c == ';' || c == ',') c = ' ';
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw ParseError(std::string("bad ") + what + " entry '" + tok + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string("empty ") + what);
  return out;
}

void print(const Json& j) { std::cout << j.dump() << "\n"; }

const char* sign_word(const std::optional<int>& s) {
  if (!s) return "mixed";
  return *s > 0 ? "positive" : *s < 0 ? "negative" : "zero";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-deformed rationals, reals, traces, fence posets and algebraic relations"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string x_text, flavor_text = "sharp", word_text;
  auto* qrat = app.add_subcommand("qrat", "quantize a rational number");
  qrat->add_option("x", x_text, "p/q, n or inf")->required();
  qrat->add_option("--flavor", flavor_text, "sharp or flat")->check(CLI::IsMember({"sharp", "flat", "right", "left"}));
  qrat->add_flag("--json", json);

  bool twisted_action = false;
  auto* qact = app.add_subcommand("qact", "act on a q-rational by a quantized word");
  qact->add_option("word", word_text, "e.g. \"R^3 J\"")->required();
  qact->add_option("x", x_text, "p/q, n or inf")->required();
  qact->add_option("--flavor", flavor_text, "flavor of the input")->check(CLI::IsMember({"sharp", "flat", "right", "left"}));
  qact->add_flag("--twisted", twisted_action, "use the twisted operator M_q I_q tau");
  qact->add_flag("--json", json);

  std::string cf_text, period_text, digits_path, act_text;
  long order = 20;
  auto* qreal = app.add_subcommand("qreal", "quantize a real number given by continued-fraction digits");
  qreal->add_option("--cf", cf_text, "\"a0;a1,a2,...\"; a trailing ... marks a truncated infinite expansion");
  qreal->add_option("--period", period_text, "digits repeated forever after --cf");
  qreal->add_option("--digits", digits_path, "digit file (one integer per line, '#' comments)");
  qreal->add_option("--order", order, "precision N of the series")->check(CLI::Range(1L, 100000L));
  qreal->add_option("--act", act_text, "apply a quantized word to the series");
  qreal->add_option("--flavor", flavor_text, "flavor of the convergents")->check(CLI::IsMember({"sharp", "flat", "right", "left"}));
  qreal->add_flag("--json", json);

  auto* qtr = app.add_subcommand("qtrace", "trace of a quantized word");
  qtr->add_option("word", word_text, "e.g. \"N R^2 S R^2 S R^3 S\"")->required();
  qtr->add_flag("--json", json);

  std::string shape_text;
  bool show_ideals = false, show_gf = false;
  auto* qposet = app.add_subcommand("qposet", "admissible ideals of a circular fence poset");
  qposet->add_option("shape", shape_text, "odd shape, e.g. 1,2,2")->required();
  qposet->add_flag("--ideals", show_ideals, "list the admissible ideals");
  qposet->add_flag("--gf", show_gf, "print the generating function");
  qposet->add_flag("--json", json);

  int degree = 4;
  long b = 5;
  auto* qvieta = app.add_subcommand("qvieta", "quantized Vieta relations for the reciprocal quartic or sextic");
  qvieta->add_option("--degree", degree, "4 or 6")->check(CLI::IsMember({4, 6}));
  qvieta->add_option("--b", b, "coefficient b")->required();
  qvieta->add_option("--order", order, "relations are checked mod q^order")->check(CLI::Range(1L, 200L));
  qvieta->add_flag("--json", json);

  std::string suite = "all";
  std::uint64_t seed = 20240501;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", suite, "relations, palindromes, posets, vieta, series or all");
  verify->add_option("--seed", seed, "seed for the random corpora");
  verify->add_option("--digits", digits_path, "pi digit file for the series suite");
  verify->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto digit_file = [&] {
    if (!digits_path.empty()) return digits_path;
    if (const char* env = std::getenv("QPROJ_DIGITS"); env && *env) return std::string(env);
    return std::string(QPROJ_DEFAULT_DIGITS);
  };

  try {
    Flavor flavor = flavor_from_name(flavor_text);
    if (*qrat) {
      QRational r = quantize(ExtRational::parse(x_text), flavor);
      if (json) print(to_json(r));
      else std::cout << r.point.to_string() << "\n";
    } else if (*qact) {
      GroupWord w = GroupWord::parse(word_text);
      QRational in = quantize(ExtRational::parse(x_text), flavor);
      QRational out = twisted_action ? act_twisted(w, in) : act(w, in);
      if (json) {
        print({{"word", w.to_string()}, {"twisted", twisted_action}, {"input", to_json(in)}, {"result", to_json(out)}});
      } else {
        std::cout << out.point.to_string() << "\n"
                  << "[" << out.value.to_string() << "]^" << flavor_name(out.flavor) << "\n";
      }
    } else if (*qreal) {
      std::unique_ptr<DigitStream> stream;
      std::string body = cf_text;
      bool truncated = false;
      if (auto dots = body.find("..."); dots != std::string::npos) {
        truncated = true;
        body.erase(dots);
      }
      if (!period_text.empty()) {
        if (body.empty()) throw ParseError("--period needs a prefix given with --cf");
        stream = std::make_unique<PeriodicDigits>(parse_list(body, "digit"), parse_list(period_text, "period"));
      } else if (!body.empty()) {
        stream = std::make_unique<ListDigits>(parse_list(body, "digit"), truncated);
      } else {
        stream = std::make_unique<ListDigits>(load_digits(digit_file()), true);
      }
      QRealResult r = quantize_real_detailed(*stream, order, flavor);
      QSeries s = r.series;
      if (!act_text.empty()) s = mobius_series(eval_word(GroupWord::parse(act_text)), s);
      s = s.truncated(order);
      if (json) {
        Json digits = Json::array();
        for (long d : r.digits) digits.push_back(d);
        print({{"series", to_json(s)}, {"text", s.to_string()}, {"digits_used", digits}, {"exact", r.exact}});
      } else {
        std::cout << s.to_string() << "\n";
      }
    } else if (*qtr) {
      PalindromeReport r = check_palindrome_det_neg(GroupWord::parse(word_text));
      if (json) {
        print(to_json(r));
      } else {
        std::cout << trace_to_string(r.trace.normalized) << "\n"
                  << "unit: " << r.trace.unit.to_string() << "\n"
                  << "classical det: " << r.classical_det << "\n"
                  << "palindromic: " << (r.palindromic ? "yes" : "no") << "\n"
                  << "sign: " << sign_word(r.sign) << "\n";
      }
    } else if (*qposet) {
      CircularFencePoset p = build_fence(parse_list(shape_text, "shape"));
      auto ideals = admissible_ideals(p);
      LaurentPoly gf = generating_function(p);
      if (json) {
        Json list = Json::array();
        for (const auto& I : ideals) list.push_back(I);
        print({{"shape", p.shape}, {"ideals", list}, {"generating_function", to_json(gf)}, {"text", gf.to_string()}});
      } else {
        if (show_ideals)
          for (const auto& I : ideals) std::cout << ideal_to_string(I) << "\n";
        if (show_gf || !show_ideals) std::cout << gf.to_string() << "\n";
      }
    } else if (*qvieta) {
      std::vector<VietaReport> reports;
      if (degree == 4) {
        reports.push_back(quantized_vieta_deg4(b, order));
        reports.push_back(pairwise_relations_deg4(b, order));
      } else {
        reports.push_back(quantized_vieta_deg6(b, order));
      }
      reports.push_back(symmetry_transport(degree, b, order));
      bool ok = true;
      if (json) {
        Json rels = Json::array();
        for (const auto& r : reports)
          for (const auto& x : r.relations) rels.push_back(to_json(x));
        Json j = to_json(reports.front());
        j["relations"] = rels;
        for (const auto& r : reports) ok = ok && r.ok();
        j["ok"] = ok;
        print(j);
      } else {
        const VietaReport& first = reports.front();
        std::cout << "polynomial: " << first.system.isolation.poly.to_string() << "\n";
        for (std::size_t i = 0; i < first.system.X.size(); ++i)
          std::cout << "X" << i + 1 << " = " << first.system.X[i].truncated(order).to_string() << "\n";
        for (const auto& r : reports)
          for (const auto& x : r.relations) {
            ok = ok && x.holds;
            std::cout << (x.holds ? "holds  " : "FAILS  ") << x.name;
            if (!x.holds && x.first_divergence) std::cout << " (first divergence at q^" << *x.first_divergence << ")";
            std::cout << "\n";
          }
      }
      return ok ? 0 : 1;
    } else if (*verify) {
      std::vector<std::string> names;
      if (suite == "all") names = suite_names();
      else names.push_back(suite);
      bool ok = true;
      Json all = Json::array();
      for (const auto& name : names) {
        SuiteReport r = run_suite(name, seed, digit_file());
        ok = ok && r.ok();
        if (json) {
          all.push_back(to_json(r));
          continue;
        }
        for (const auto& p : r.properties) {
          std::cout << (p.passed ? "PASS " : "FAIL ") << r.name << ": " << p.name << " (" << p.checked << " checked)";
          if (!p.passed) std::cout << "\n     counterexample: " << p.counterexample;
          std::cout << "\n";
        }
      }
      if (json) print(names.size() == 1 ? all.front() : all);
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
