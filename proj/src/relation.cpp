#include "dzv/relation.hpp"

#include <stdexcept>

namespace dzv {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::type1: return "type1";
    case RelationKind::type2: return "type2";
    case RelationKind::canonical: return "canonical";
    case RelationKind::kernel_element: return "kernel_element";
    case RelationKind::custom: return "custom";
  }
  return "custom";
}

RelationKind parse_relation_kind(const std::string& text) {
  for (auto kind : {RelationKind::type1, RelationKind::type2, RelationKind::canonical,
                    RelationKind::kernel_element, RelationKind::custom})
    if (to_string(kind) == text) return kind;
  throw DomainError("unknown relation kind '" + text + "'");
}

bool Relation::coefficients_zero() const {
  for (const auto& [r, c] : coeffs)
    if (c != 0) return false;
  return true;
}

void validate(const Relation& rel) {
  if (rel.weight < 3) throw DomainError("relation weight must be >= 3");
  for (const auto& [r, c] : rel.coeffs)
    if (r < 1 || r > rel.weight - 1)
      throw DomainError("relation index r=" + std::to_string(r) + " outside [1," +
                        std::to_string(rel.weight - 1) + "]");
}

void normalize(Relation& rel) {
  QVector v(static_cast<Eigen::Index>(rel.coeffs.size()) + 1);
  Eigen::Index i = 0;
  for (auto it = rel.coeffs.rbegin(); it != rel.coeffs.rend(); ++it) v[i++] = it->second;
  v[i] = rel.lambda;
  const Rational factor = make_primitive(v);
  for (auto& [r, c] : rel.coeffs) c *= factor;
  rel.lambda *= factor;
  rel.provenance.scale *= factor;
}

bool proportional(const Relation& a, const Relation& b) {
  if (a.weight != b.weight) return false;
  std::map<int, std::pair<Rational, Rational>> joint;
  for (const auto& [r, c] : a.coeffs) joint[r].first = c;
  for (const auto& [r, c] : b.coeffs) joint[r].second = c;
  joint[0] = {a.lambda, b.lambda};  // slot 0 is never a valid r
  std::optional<Rational> ratio;
  for (const auto& [r, pair] : joint) {
    const auto& [x, y] = pair;
    if ((x == 0) != (y == 0)) return false;
    if (x == 0) continue;
    const Rational q = y / x;
    if (ratio && *ratio != q) return false;
    ratio = q;
  }
  return ratio.has_value();
}

namespace {

const HomPoly kX = HomPoly::linear(1, 0);
const HomPoly kY = HomPoly::linear(0, 1);

int weight_of(const HomPoly& p) { return p.degree() + 2; }

void require_member(const HomPoly& p, Sign sign, const char* what) {
  if (p.degree() < 2 || p.degree() % 2 != 0 || !is_period_polynomial(p, sign))
    throw DomainError(std::string(what) + ": polynomial is not in W_k^" +
                      (sign == Sign::plus ? "+" : "-"));
}

void check_construction(const Construction& c) {
  if (!(act(c.f, Mat2::S() * Mat2::T_prime()) == c.f))
    throw std::logic_error("construction: f|ST' != f");
  if (!(act(c.f_s, Mat2::epsilon()) == c.f_s))
    throw std::logic_error("construction: f|S is not symmetric");
}

}  // namespace

CoeffTable b_coeffs(const HomPoly& p) {
  require_member(p, Sign::plus, "b_coeffs");
  const int k = weight_of(p);
  const HomPoly shifted = act(p, Mat2::T());
  CoeffTable t{'b', k, {}};
  for (int r = 1; r <= k - 1; ++r)
    t.entries[r] = shifted.coeff(r - 1) / Rational(binom(k - 1, r - 1));
  return t;
}

CoeffTable c_coeffs(const HomPoly& p) {
  require_member(p, Sign::minus, "c_coeffs");
  const int k = weight_of(p);
  const HomPoly shifted = act(partial_x(p), Mat2::T());
  CoeffTable t{'c', k, {}};
  for (int r = 1; r <= k - 2; ++r)
    t.entries[r] = shifted.coeff(r - 1) / Rational(binom(k - 3, r - 1));
  return t;
}

Construction type1_construction(const HomPoly& p) {
  require_member(p, Sign::plus, "type1");
  Construction c;
  c.q = act(p, Mat2::T());
  c.f = c.q * kY - act(c.q, Mat2::epsilon()) * kX;
  c.f_s = act(c.f, Mat2::S());
  c.a = c.f - c.f_s;
  check_construction(c);
  return c;
}

Construction type2_construction(const HomPoly& p) {
  require_member(p, Sign::minus, "type2");
  Construction c;
  c.q = act(partial_x(p), Mat2::T());
  c.f = c.q - act(c.q, Mat2::epsilon());
  c.f_s = act(c.f, Mat2::S());
  c.a = c.f - c.f_s;
  check_construction(c);
  return c;
}

namespace {

// Shared tail of both constructions.  `binom_top` is k-1 (Type I) or k-3
// (Type II); coefficients come from the antisymmetrized table, and each must
// agree with half of A's coefficient divided by the binomial factor.
Relation assemble(const Construction& c, const CoeffTable& table, int weight, int binom_top,
                  RelationKind kind) {
  Relation rel;
  rel.weight = weight;
  rel.provenance.kind = kind;
  rel.provenance.source_weight = table.k;

  for (int r = 1; r <= weight - 1; ++r) {
    const Rational from_a = c.a.coeff(r - 1) / Rational(2 * binom(binom_top, r - 1));
    const bool in_range = r % 2 == 0 && r >= 4 && r <= weight - 3;
    if (!in_range) {
      if (from_a != 0)
        throw std::logic_error("construction: unexpected term X^" + std::to_string(r - 1) +
                               " in f - f|S");
      continue;
    }
    const Rational antisym = table.at(r) - table.at(weight - r);
    if (antisym != from_a)
      throw std::logic_error("construction: f - f|S disagrees with coefficient table at r=" +
                             std::to_string(r));
    rel.coeffs[r] = antisym;
  }
  rel.lambda = lambda_from_H(c.f_s, weight) / 2;
  normalize(rel);
  return rel;
}

}  // namespace

Relation type1_relation(const HomPoly& p) {
  const Construction c = type1_construction(p);
  const int k = weight_of(p);
  return assemble(c, b_coeffs(p), k + 1, k - 1, RelationKind::type1);
}

Relation type2_relation(const HomPoly& p) {
  const Construction c = type2_construction(p);
  const int k = weight_of(p);
  return assemble(c, c_coeffs(p), k - 1, k - 3, RelationKind::type2);
}

std::vector<Relation> type1_relations(int k) {
  std::vector<Relation> out;
  const auto basis = period_space_basis(k, Sign::plus);
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    out.push_back(type1_relation(basis.basis[i]));
    out.back().provenance.basis_index = static_cast<int>(i);
  }
  return out;
}

std::vector<Relation> type2_relations(int k) {
  std::vector<Relation> out;
  const auto basis = period_space_basis(k, Sign::minus);
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    out.push_back(type2_relation(basis.basis[i]));
    out.back().provenance.basis_index = static_cast<int>(i);
  }
  return out;
}

HomPoly L1(const HomPoly& p) {
  require_member(p, Sign::plus, "L1");
  const HomPoly sum = act(p, Mat2(1, 1, 0, 1)) * kY - act(p, Mat2(1, 1, 1, 0)) * kX -
                      act(p, Mat2(-1, 1, 0, 1)) * kY - act(p, Mat2(-1, 1, -1, 0)) * kX;
  return sum / Rational(2);
}

HomPoly L1_alt(const HomPoly& p) {
  require_member(p, Sign::plus, "L1_alt");
  const HomPoly x_plus_y = HomPoly::linear(1, 1);
  const HomPoly y_minus_x = HomPoly::linear(-1, 1);
  const HomPoly sum = act(p, Mat2(0, 1, 1, 1)) * x_plus_y - act(p, Mat2(0, 1, -1, 1)) * y_minus_x;
  return sum / Rational(2);
}

HomPoly L2(const HomPoly& p) {
  require_member(p, Sign::minus, "L2");
  const HomPoly d = partial_x(p);
  const HomPoly sum = act(d, Mat2(1, 1, 0, 1)) - act(d, Mat2(1, 1, 1, 0)) -
                      act(d, Mat2(-1, 1, 0, 1)) + act(d, Mat2(-1, 1, -1, 0));
  return sum / Rational(2);
}

HomPoly L2_alt(const HomPoly& p) {
  require_member(p, Sign::minus, "L2_alt");
  const HomPoly d = partial_x(p);
  return (act(d, Mat2(0, 1, 1, 1)) - act(d, Mat2(0, 1, -1, 1))) / Rational(2);
}

HomPoly generating_function(const Relation& rel) {
  validate(rel);
  const int n = rel.weight;
  HomPoly a(n - 2);
  for (const auto& [r, c] : rel.coeffs) a[r - 1] = Rational(binom(n - 2, r - 1)) * c;
  return a;
}

Relation relation_from_generating_function(const HomPoly& a) {
  Relation rel;
  rel.weight = a.degree() + 2;
  for (int r = 1; r <= rel.weight - 1; ++r) {
    const Rational c = a[r - 1] / Rational(binom(rel.weight - 2, r - 1));
    if (c != 0) rel.coeffs[r] = c;
  }
  return rel;
}

std::optional<HomPoly> find_symmetric_H(const HomPoly& a) {
  const int d = a.degree();
  // Unknown j parametrizes X^j Y^(d-j) + X^(d-j) Y^j (single term when 2j = d).
  const int unknowns = d / 2 + 1;
  std::vector<HomPoly> sym_basis;
  for (int j = 0; j < unknowns; ++j) {
    HomPoly h = HomPoly::monomial(d, j);
    if (2 * j != d) h[d - j] = 1;
    sym_basis.push_back(std::move(h));
  }
  QMatrix m(d + 1, unknowns);
  for (int j = 0; j < unknowns; ++j)
    m.col(j) = (act(sym_basis[j], Mat2::T_prime()) - sym_basis[j]).coeffs();
  const auto y = solve<Rational>(m, a.coeffs());
  if (!y) return std::nullopt;
  HomPoly h(d);
  for (int j = 0; j < unknowns; ++j)
    if ((*y)[j] != 0) h += sym_basis[j] * (*y)[j];
  return h;
}

Rational lambda_from_H(const HomPoly& h, int dzv_weight) {
  if (h.degree() != dzv_weight - 2)
    throw DomainError("lambda_from_H: H must have degree dzv_weight-2");
  if (!(act(h, Mat2::epsilon()) == h)) throw DomainError("lambda_from_H: H is not symmetric");
  const int d = h.degree();
  Rational integral = 0;
  for (int i = 0; i <= d; ++i)
    if (h[i] != 0) integral += h[i] * beta_integral(i, d - i);
  return Rational(dzv_weight - 1, 2) * integral;
}

std::optional<Rational> prop2_lambda(const Relation& rel) {
  const auto h = find_symmetric_H(generating_function(rel));
  if (!h) return std::nullopt;
  return lambda_from_H(*h, rel.weight);
}

}  // namespace dzv
