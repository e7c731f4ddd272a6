// JSON interchange.  Rationals travel as "num/den" strings (den omitted
// when 1); real numbers as JSON numbers with 15 significant digits.
#pragma once

#include <string>

#include "json.hpp"

#include "dzv/formal_space.hpp"
#include "dzv/numeric.hpp"
#include "dzv/period_space.hpp"
#include "dzv/relation.hpp"
#include "dzv/zagier.hpp"

namespace dzv {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const HomPoly& p);
HomPoly poly_from_json(const Json& j);

Json to_json(const PeriodBasis& b);

/// Coefficients are emitted in descending r.
Json to_json(const Relation& rel);
Relation relation_from_json(const Json& j);

Json to_json(const CoeffTable& t);
Json to_json(const QVector& v);
Json to_json(const QMatrix& m);
Json to_json(const ZagierMatrix& z);
Json to_json(const FormalCheck& c);
Json to_json(const NumericReport& r);

/// Rounds to 15 significant digits.
Json real_json(real x);
std::string format_real(real x);

}  // namespace dzv
