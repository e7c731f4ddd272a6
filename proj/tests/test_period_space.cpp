#include <catch_amalgamated.hpp>

#include "dzv/period_space.hpp"

using namespace dzv;

namespace {

HomPoly from_ascending(std::vector<long> coeffs, int degree) {
  std::vector<Rational> v(coeffs.begin(), coeffs.end());
  return homogenize(v, degree);
}

}  // namespace

TEST_CASE("dimension formula", "[period]") {
  CHECK(dim_modular_forms(4) == 1);
  CHECK(dim_modular_forms(12) == 2);
  CHECK(dim_modular_forms(14) == 1);
  CHECK(dim_modular_forms(24) == 3);
  CHECK(dim_modular_forms(26) == 2);
  CHECK(dim_cusp_forms(12) == 1);
  CHECK(dim_cusp_forms(10) == 0);
  CHECK(dim_cusp_forms(36) == 3);
  CHECK_THROWS_AS(dim_modular_forms(2), DomainError);
  CHECK_THROWS_AS(dim_modular_forms(7), DomainError);
}

TEST_CASE("W12 bases", "[period]") {
  const auto plus = period_space_basis(12, Sign::plus);
  REQUIRE(plus.dimension() == 1);
  CHECK(plus.basis[0] == from_ascending({0, 4, 0, -25, 0, 42, 0, -25, 0, 4}, 10));

  const auto minus = period_space_basis(12, Sign::minus);
  REQUIRE(minus.dimension() == 2);
  CHECK(minus.basis[0] == from_ascending({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 10));
  CHECK(minus.basis[1] == from_ascending({0, 0, -1, 0, 3, 0, -3, 0, 1}, 10));
}

TEST_CASE("W16 minus contains the second generator", "[period]") {
  const auto minus = period_space_basis(16, Sign::minus);
  REQUIRE(minus.dimension() == 2);
  CHECK(minus.basis[0] == from_ascending({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 14));
  CHECK(minus.basis[1] == from_ascending({0, 0, -2, 0, 7, 0, -11, 0, 11, 0, -7, 0, 2}, 14));
}

TEST_CASE("small weights", "[period]") {
  CHECK(period_space_basis(4, Sign::plus).dimension() == 0);
  const auto m4 = period_space_basis(4, Sign::minus);
  REQUIRE(m4.dimension() == 1);
  CHECK(m4.basis[0] == from_ascending({-1, 0, 1}, 2));
  CHECK_THROWS_AS(period_space_basis(11, Sign::plus), DomainError);
  CHECK_THROWS_AS(period_space_basis(2, Sign::minus), DomainError);
}

TEST_CASE("bases satisfy the period relations and match dimensions", "[period][property]") {
  for (int k = 4; k <= 40; k += 2) {
    const int s = dim_cusp_forms(k);
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const auto b = period_space_basis(k, sign);
      REQUIRE(b.dimension() == (sign == Sign::plus ? s : s + 1));
      for (const auto& p : b.basis) {
        REQUIRE(is_period_polynomial(p, sign));
        REQUIRE_FALSE(is_period_polynomial(p, sign == Sign::plus ? Sign::minus : Sign::plus));
      }
    }
  }
}

TEST_CASE("is_period_polynomial rejects non-members", "[period]") {
  CHECK_FALSE(is_period_polynomial(HomPoly::monomial(10, 3), Sign::plus));
  CHECK_FALSE(is_period_polynomial(HomPoly::monomial(9, 3), Sign::minus));
  CHECK(is_period_polynomial(HomPoly(10), Sign::plus));
}

TEST_CASE("sign parsing", "[period]") {
  CHECK(parse_sign("plus") == Sign::plus);
  CHECK(parse_sign("-") == Sign::minus);
  CHECK(to_string(Sign::minus) == "minus");
  CHECK_THROWS_AS(parse_sign("odd"), DomainError);
}
