#pragma once

#include "qproj/json_io.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qproj {

/// Continued-fraction digits from a text file: one integer per line, blank
/// lines and lines starting with '#' ignored.  Throws ParseError.
std::vector<long> load_digits(const std::string& path);

/// Random inputs for the property suites.
struct Corpus {
  std::mt19937_64 rng;
  explicit Corpus(std::uint64_t seed) : rng(seed) {}
  /// 1..max_len letters over R, S, N, J, L.
  GroupWord word(int max_len = 6);
  /// A word whose classical determinant is `det`.
  GroupWord word_with_det(int det, int max_len = 6);
  /// p/q with |p| <= 40, 1 <= q <= 25, occasionally infinity.
  ExtRational rational();
  long uniform(long lo, long hi);
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  long checked = 0;
  /// First counterexample, empty when passed.
  std::string counterexample;
};

struct SuiteReport {
  std::string name;
  std::vector<PropertyResult> properties;
  bool ok() const;
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs one suite.  `digits_path` is only used by the series suite.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, const std::string& digits_path);

/// Flavor-flip rule for one pair: act (twisted or not) against quantizing
/// the classical image with the predicted flavor.
bool flavor_rule_holds(const GroupWord& w, const ExtRational& x, Flavor f, bool twisted_action);

/// The thirty printed coefficients of [1/pi]_q: exponents 3..30.
std::vector<std::pair<long, long>> one_over_pi_printed();

Json to_json(const SuiteReport& r);

}  // namespace qproj
