#include "qproj/json_io.hpp"

#include "qproj/error.hpp"

namespace qproj {

Json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Json rational_to_json(const Rational& r) {
  if (r.get_den() == 1) return integer_to_json(r.get_num());
  return r.get_str();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    try {
      Rational r(j.get<std::string>());
      r.canonicalize();
      return r;
    } catch (const std::invalid_argument&) {
      throw ParseError("expected a rational, got " + j.dump());
    }
  }
  return Rational(integer_from_json(j));
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  if (p.is_zero()) return out;
  long e = p.valuation();
  for (const auto& c : p.coeffs()) {
    if (c != 0) out.push_back(Json::array({e, integer_to_json(c)}));
    ++e;
  }
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of [exponent, coefficient] pairs");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
      throw ParseError("bad polynomial term " + term.dump());
    p += LaurentPoly::monomial(integer_from_json(term[1]), term[0].get<long>());
  }
  return p;
}

Json to_json(const LambdaUnit& u) { return {{"sign", u.sign}, {"q", u.qpow}, {"t", u.tpow}}; }

LambdaUnit unit_from_json(const Json& j) {
  try {
    return {j.at("sign").get<int>(), j.at("q").get<long>(), j.at("t").get<long>()};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad unit: ") + e.what());
  }
}

Json to_json(const ProjPoint& p) { return {{"num", to_json(p.num())}, {"den", to_json(p.den())}}; }

ProjPoint point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw ParseError("point needs num and den");
  return ProjPoint::make(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Json to_json(const QMatrix& m) {
  return {{"scale", to_json(m.scale)}, {"a", to_json(m.a)}, {"b", to_json(m.b)}, {"c", to_json(m.c)},
          {"d", to_json(m.d)}};
}

QMatrix matrix_from_json(const Json& j) {
  try {
    return {poly_from_json(j.at("a")), poly_from_json(j.at("b")), poly_from_json(j.at("c")),
            poly_from_json(j.at("d")), unit_from_json(j.at("scale"))};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad matrix: ") + e.what());
  }
}

Json to_json(const QRational& x) {
  return {{"value", x.value.to_string()}, {"flavor", flavor_name(x.flavor)}, {"point", to_json(x.point)}};
}

QRational qrational_from_json(const Json& j) {
  try {
    QRational x;
    x.value = ExtRational::parse(j.at("value").get<std::string>());
    x.flavor = flavor_from_name(j.at("flavor").get<std::string>());
    x.point = point_from_json(j.at("point"));
    return x;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad q-rational: ") + e.what());
  }
}

Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) terms.push_back(Json::array({e, rational_to_json(c)}));
  return {{"precision", s.is_exact() ? Json(nullptr) : Json(s.precision())}, {"terms", terms}};
}

QSeries series_from_json(const Json& j) {
  try {
    long prec = j.at("precision").is_null() ? QSeries::kExact : j.at("precision").get<long>();
    const Json& terms = j.at("terms");
    if (terms.empty()) return QSeries::zero(prec);
    long lo = terms.front().at(0).get<long>(), hi = terms.back().at(0).get<long>();
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& t : terms) c[static_cast<std::size_t>(t.at(0).get<long>() - lo)] = rational_from_json(t.at(1));
    return QSeries::from_coeffs(lo, std::move(c), prec);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad series: ") + e.what());
  }
}

Json to_json(const GroupWord& w) { return w.to_string(); }
GroupWord word_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("word must be a string");
  return GroupWord::parse(j.get<std::string>());
}
Json to_json(const CFExpansion& cf) { return cf.to_string(); }
CFExpansion cf_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("continued fraction must be a string");
  return CFExpansion::parse(j.get<std::string>());
}

Json to_json(const RelationCheck& r) {
  return {{"name", r.name},
          {"holds", r.holds},
          {"order", r.order},
          {"first_divergence", r.first_divergence ? Json(*r.first_divergence) : Json(nullptr)},
          {"lhs", r.lhs.truncated(r.order).to_string()},
          {"rhs", r.rhs.truncated(r.order).to_string()}};
}

Json to_json(const TraceResult& t) {
  return {{"word", t.word.to_string()},
          {"trace", trace_to_string(t.normalized)},
          {"normalized", to_json(t.normalized)},
          {"unit", to_json(t.unit)}};
}

namespace {
const char* sign_name(const std::optional<int>& s) {
  if (!s) return "mixed";
  return *s > 0 ? "positive" : *s < 0 ? "negative" : "zero";
}
}  // namespace

Json to_json(const PalindromeReport& r) {
  Json j = to_json(r.trace);
  j["classical_det"] = r.classical_det;
  j["palindromic"] = r.palindromic;
  j["sign"] = sign_name(r.sign);
  j["ok"] = r.ok();
  return j;
}

Json to_json(const VietaReport& r) {
  Json roots = Json::array();
  for (std::size_t i = 0; i < r.system.roots.size(); ++i) {
    Json digits = Json::array();
    for (long d : r.system.digits[i]) digits.push_back(d);
    roots.push_back({{"label", "x" + std::to_string(i + 1)},
                     {"approx", r.system.roots[i].approx()},
                     {"digits", digits},
                     {"series", r.system.X[i].truncated(r.system.order).to_string()}});
  }
  Json rels = Json::array();
  for (const auto& x : r.relations) rels.push_back(to_json(x));
  Json factors = Json::array();
  for (const auto& f : r.system.isolation.factors) factors.push_back(f.to_string());
  return {{"degree", r.system.degree},
          {"b", r.system.b},
          {"order", r.system.order},
          {"polynomial", r.system.isolation.poly.to_string()},
          {"reducible", r.system.isolation.reducible},
          {"factors", factors},
          {"roots", roots},
          {"relations", rels},
          {"ok", r.ok()}};
}

Json to_json(const SplitReport& r) {
  Json rels = Json::array();
  for (const auto& x : r.relations) rels.push_back(to_json(x));
  return {{"n", r.n}, {"sign", r.sign},     {"b", r.b}, {"classical_limit_ok", r.classical_limit_ok},
          {"relations", rels}, {"ok", r.ok()}};
}

Json to_json(const RelationReport& r) {
  return {{"name", r.name},
          {"unit", r.unit ? Json(r.unit->to_string()) : Json(nullptr)},
          {"expected", r.expected ? Json(r.expected->to_string()) : Json(nullptr)},
          {"projective", r.projective},
          {"exact", r.exact},
          {"ok", r.ok()}};
}

}  // namespace qproj
