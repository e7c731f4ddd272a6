#include <catch_amalgamated.hpp>

#include <random>

#include "dzv/formal_space.hpp"
#include "dzv/zagier.hpp"

using namespace dzv;

namespace {

Relation single(int weight, std::map<int, Rational> coeffs, Rational lambda = 0) {
  Relation rel;
  rel.weight = weight;
  rel.coeffs = std::move(coeffs);
  rel.lambda = lambda;
  return rel;
}

QVector as_vector(const Relation& rel) {
  QVector v = zero_vector<Rational>(rel.weight);
  for (const auto& [r, c] : rel.coeffs) v[r - 1] = c;
  v[rel.weight - 1] = rel.lambda;
  return v;
}

Relation from_vector(int weight, const QVector& v) {
  Relation rel;
  rel.weight = weight;
  for (int r = 1; r < weight; ++r)
    if (v[r - 1] != 0) rel.coeffs[r] = v[r - 1];
  rel.lambda = v[weight - 1];
  return rel;
}

}  // namespace

TEST_CASE("symbol layout", "[formal]") {
  const FormalSpace space(11);
  CHECK(space.symbol_count() == 10 + 5 + 1);
  CHECK(space.z_index(1) == 0);
  CHECK(space.p_index(3) == space.p_index(8));
  CHECK(space.symbol_name(space.z_index(8)) == "Z(8,3)");
  CHECK(space.symbol_name(space.p_index(2)) == "P(2,9)");
  CHECK(space.symbol_name(space.zk_index()) == "Z(11)");
  CHECK(space.relations().rows() == 10);
  CHECK_THROWS_AS(space.z_index(11), DomainError);
  CHECK_THROWS_AS(FormalSpace(2), DomainError);
}

TEST_CASE("a lone symbol is not a relation", "[formal]") {
  const auto check = check_relation(build_space(11), single(11, {{8, 1}}));
  CHECK_FALSE(check.holds);
  CHECK_FALSE(check.lambda);
}

TEST_CASE("weight mismatch is a domain error", "[formal]") {
  CHECK_THROWS_AS(check_relation(build_space(11), single(13, {{8, 1}})), DomainError);
}

TEST_CASE("the weight 11 relation holds with lambda -3", "[formal]") {
  const auto check = check_relation(build_space(11), single(11, {{8, 28}, {6, 20}, {4, -42}}, -3));
  CHECK(check.holds);
  REQUIRE(check.lambda);
  CHECK(*check.lambda == -3);
  CHECK(check.lambda_unique);
}

TEST_CASE("sum formulas in even weight", "[formal]") {
  for (int k = 4; k <= 20; k += 2) CHECK(sum_formula_check(k));
  CHECK_THROWS_AS(sum_formula_check(9), DomainError);
  for (int k = 3; k <= 20; ++k) {
    Relation all;
    all.weight = k;
    for (int r = 2; r < k; ++r) all.coeffs[r] = 1;
    const auto check = check_relation(build_space(k), all);
    REQUIRE(check.holds);
    REQUIRE(*check.lambda == 1);
  }
}

TEST_CASE("canonical relations hold formally for odd k up to 21", "[formal][property]") {
  for (int k = 5; k <= 21; k += 2) {
    const Relation rel = canonical_relation(k);
    const auto check = check_relation(build_space(k), rel);
    REQUIRE(check.holds);
    REQUIRE(*check.lambda == rel.lambda);
    REQUIRE(rel.lambda == Rational(-3 * (k - 3), 4));
  }
}

TEST_CASE("the printed weight 7 canonical list fails the oracle", "[formal]") {
  const auto printed = check_relation(build_space(7), single(7, {{6, 10}, {4, -1}, {2, -5}}, -3));
  CHECK_FALSE(printed.holds);
  const auto corrected = check_relation(build_space(7), single(7, {{6, 10}, {4, 1}, {2, -5}}, -3));
  CHECK(corrected.holds);
}

TEST_CASE("every spanning relation passes the oracle", "[formal][property]") {
  for (int k = 3; k <= 15; ++k) {
    const FormalSpace space(k);
    for (const QVector& v : relation_span(space)) {
      const auto check = check_relation(space, from_vector(k, v));
      REQUIRE(check.holds);
      REQUIRE(*check.lambda == v[k - 1]);
    }
  }
}

TEST_CASE("oracle and symmetric-H criterion agree on weight 9", "[formal][property]") {
  const int n = 9;
  const FormalSpace space(n);
  const auto span = relation_span(space);

  std::vector<QVector> from_h;
  for (int j = 0; j <= (n - 2) / 2; ++j) {
    HomPoly h = HomPoly::monomial(n - 2, j);
    if (2 * j != n - 2) h[n - 2 - j] = 1;
    const Relation rel = relation_from_generating_function(act(h, Mat2::T_prime()) - h);
    QVector v = as_vector(rel);
    v[n - 1] = lambda_from_H(h, n);
    from_h.push_back(v);
  }
  const auto from_h_basis = normalize_basis(from_h, n);
  CHECK(span == from_h_basis);

  for (const auto& v : span) {
    const auto lambda = prop2_lambda(from_vector(n, v));
    REQUIRE(lambda);
    CHECK(*lambda == v[n - 1]);
  }

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    QVector v = zero_vector<Rational>(n);
    if (trial % 2 == 0) {
      for (const auto& s : span) v += Rational(entry(rng)) * s;
      if (trial % 4 == 0) v[entry(rng) + 3] += 1;  // knock it off the span
    } else {
      for (int r = 0; r < n - 1; ++r) v[r] = entry(rng);
    }
    v[n - 1] = 0;
    const Relation rel = from_vector(n, v);
    const auto formal = check_relation(space, rel);
    const auto prop2 = prop2_lambda(rel);
    REQUIRE(formal.holds == prop2.has_value());
    if (prop2) REQUIRE(*formal.lambda == *prop2);
  }
}
