#include "dzv/serialize.hpp"

#include <cstdio>
#include <string>

namespace dzv {

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw DomainError("expected a rational as \"num/den\" string or integer, got " + j.dump());
}

Json to_json(const HomPoly& p) {
  Json coeffs = Json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(to_json(p[i]));
  return Json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

HomPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs"))
    throw DomainError("polynomial JSON needs 'degree' and 'coeffs'");
  const int degree = j.at("degree").get<int>();
  const Json& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != degree + 1)
    throw DomainError("polynomial JSON: 'coeffs' must have degree+1 entries");
  HomPoly p(degree);
  for (int i = 0; i <= degree; ++i) p[i] = rational_from_json(coeffs[static_cast<std::size_t>(i)]);
  return p;
}

Json to_json(const PeriodBasis& b) {
  Json basis = Json::array();
  for (const auto& p : b.basis) basis.push_back(to_json(p));
  return Json{{"weight", b.weight}, {"sign", to_string(b.sign)}, {"dimension", b.dimension()},
              {"basis", basis}};
}

Json to_json(const Relation& rel) {
  Json coeffs = Json::object();
  for (auto it = rel.coeffs.rbegin(); it != rel.coeffs.rend(); ++it)
    coeffs[std::to_string(it->first)] = to_json(it->second);
  Json prov{{"kind", to_string(rel.provenance.kind)},
            {"source_weight", rel.provenance.source_weight}};
  prov["basis_index"] =
      rel.provenance.basis_index ? Json(*rel.provenance.basis_index) : Json(nullptr);
  prov["scale"] = to_json(rel.provenance.scale);
  prov["note"] = rel.provenance.note;
  return Json{{"weight", rel.weight},
              {"coeffs", coeffs},
              {"lambda", to_json(rel.lambda)},
              {"provenance", prov}};
}

Relation relation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weight") || !j.contains("coeffs"))
    throw DomainError("relation JSON needs 'weight' and 'coeffs'");
  Relation rel;
  rel.weight = j.at("weight").get<int>();
  for (const auto& [key, value] : j.at("coeffs").items()) {
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw DomainError("relation JSON: coefficient key '" + key + "' is not an integer");
    }
    rel.coeffs[r] = rational_from_json(value);
  }
  if (j.contains("lambda")) rel.lambda = rational_from_json(j.at("lambda"));
  if (j.contains("provenance") && j.at("provenance").is_object()) {
    const Json& p = j.at("provenance");
    if (p.contains("kind")) rel.provenance.kind = parse_relation_kind(p.at("kind").get<std::string>());
    if (p.contains("source_weight")) rel.provenance.source_weight = p.at("source_weight").get<int>();
    if (p.contains("basis_index") && !p.at("basis_index").is_null())
      rel.provenance.basis_index = p.at("basis_index").get<int>();
    if (p.contains("scale")) rel.provenance.scale = rational_from_json(p.at("scale"));
    if (p.contains("note")) rel.provenance.note = p.at("note").get<std::string>();
  }
  validate(rel);
  return rel;
}

Json to_json(const CoeffTable& t) {
  Json entries = Json::object();
  for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it)
    entries[std::to_string(it->first)] = to_json(it->second);
  return Json{{"kind", std::string(1, t.kind)}, {"k", t.k}, {"entries", entries}};
}

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) out.push_back(to_json(QVector(m.row(i).transpose())));
  return out;
}

Json to_json(const ZagierMatrix& z) {
  return Json{{"K", z.K},
              {"weight", 2 * z.K + 1},
              {"row_labels", z.row_labels},
              {"col_labels", z.col_labels},
              {"entries", to_json(z.entries)}};
}

Json to_json(const FormalCheck& c) {
  Json out{{"holds", c.holds}};
  out["lambda"] = c.lambda ? to_json(*c.lambda) : Json(nullptr);
  out["lambda_unique"] = c.lambda_unique;
  return out;
}

std::string format_real(real x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", x);
  return buf;
}

Json real_json(real x) { return std::stod(format_real(x)); }

Json to_json(const NumericReport& r) {
  Json out{{"value", real_json(r.value)}, {"bound", real_json(r.bound)}};
  out["residual"] = r.residual ? real_json(*r.residual) : Json(nullptr);
  if (r.truncation > 0) out["truncation"] = r.truncation;
  return out;
}

}  // namespace dzv
