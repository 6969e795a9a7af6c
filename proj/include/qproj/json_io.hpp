#pragma once

#include "qproj/algebraic.hpp"
#include "qproj/fenceposet.hpp"
#include "qproj/qtrace.hpp"

#include <json.hpp>

namespace qproj {

using Json = nlohmann::json;

/// Integers as JSON numbers when they fit in int64, decimal strings
/// otherwise; rationals as numbers (integers) or "p/q" strings.
Json integer_to_json(const Integer& z);
Integer integer_from_json(const Json& j);
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// [[exponent, coefficient], ...] in increasing exponent order.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"sign": 1, "q": a, "t": b}.
Json to_json(const LambdaUnit& u);
LambdaUnit unit_from_json(const Json& j);

/// {"num": poly, "den": poly}.
Json to_json(const ProjPoint& p);
ProjPoint point_from_json(const Json& j);

/// {"scale": unit, "a": poly, "b": ..., "c": ..., "d": ...}.
Json to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

/// {"value": "7/5" | "inf", "flavor": "sharp", "point": point}.
Json to_json(const QRational& x);
QRational qrational_from_json(const Json& j);

/// {"precision": N | null (exact), "terms": [[exponent, coefficient], ...]}.
Json to_json(const QSeries& s);
QSeries series_from_json(const Json& j);

/// Words and continued fractions use their text forms.
Json to_json(const GroupWord& w);
GroupWord word_from_json(const Json& j);
Json to_json(const CFExpansion& cf);
CFExpansion cf_from_json(const Json& j);

Json to_json(const RelationCheck& r);
Json to_json(const TraceResult& t);
Json to_json(const PalindromeReport& r);
Json to_json(const VietaReport& r);
Json to_json(const SplitReport& r);
Json to_json(const RelationReport& r);

}  // namespace qproj
