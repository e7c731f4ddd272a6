#include <catch_amalgamated.hpp>

#include <cmath>
#include <thread>

#include "dzv/formal_space.hpp"
#include "dzv/numeric.hpp"
#include "dzv/zagier.hpp"

using namespace dzv;

namespace {

// Independent reference values (30-digit Hurwitz-zeta summation).
struct Reference {
  int r, s;
  real value;
};
const Reference kDoubleZeta[] = {
    {2, 1, 1.202056903159594285399738L},   {3, 2, 0.2288103976033537597687461L},
    {2, 3, 0.7115661975505724320969738L},  {4, 7, 0.08248177064807701167257209L},
    {10, 1, 0.001003976988651568468265474L}, {8, 3, 0.004099499009455355743218761L},
    {5, 5, 0.03711229712942522568700269L}, {2, 18, 0.6449355741379978098004269L},
    {20, 2, 9.540340661765475178218086e-7L},
};

real absdiff(real a, real b) { return std::fabs(a - b); }

Relation make(int weight, std::map<int, Rational> coeffs, Rational lambda) {
  Relation rel;
  rel.weight = weight;
  rel.coeffs = std::move(coeffs);
  rel.lambda = lambda;
  return rel;
}

}  // namespace

TEST_CASE("power tails against direct sums", "[numeric]") {
  for (int a = 2; a <= 12; ++a) {
    const NumericReport big = power_tail(a, 1000, 8);
    const NumericReport small = power_tail(a, 10, 8);
    real direct = 0;
    for (long m = 10; m < 1000; ++m) direct += std::pow(static_cast<real>(m), static_cast<real>(-a));
    REQUIRE(absdiff(small.value - big.value, direct) <= small.bound + big.bound + 1e-17L);
  }
  CHECK_THROWS_AS(power_tail(1, 10, 8), DomainError);
}

TEST_CASE("single zeta values", "[numeric]") {
  const auto z2 = zeta(2);
  CHECK(absdiff(z2.value, 1.644934066848226436472415L) < 1e-12L);
  CHECK(absdiff(z2.value, 1.644934066848226436472415L) <= z2.bound);
  CHECK(z2.bound < 1e-12L);
  CHECK(absdiff(zeta(3).value, 1.202056903159594285399738L) < 1e-12L);
  CHECK(absdiff(zeta(7).value, 1.008349277381922826839798L) < 1e-12L);
  CHECK(zeta(40).value - 1 < 1e-12L);
  CHECK(absdiff(zeta_minus_one(40).value, 9.09494784026e-13L) < 1e-20L);
  CHECK_THROWS_AS(zeta(1), DomainError);
}

TEST_CASE("double zeta values against the reference", "[numeric]") {
  for (const auto& ref : kDoubleZeta) {
    const auto v = double_zeta(ref.r, ref.s);
    INFO("zeta(" << ref.r << "," << ref.s << ")");
    REQUIRE(v.bound < 1e-12L);
    REQUIRE(absdiff(v.value, ref.value) <= v.bound);
  }
  CHECK_THROWS_AS(double_zeta(1, 3), DomainError);
  CHECK_THROWS_AS(double_zeta(3, 0), DomainError);
}

TEST_CASE("precision requests beyond extended precision are refused", "[numeric]") {
  Precision p;
  p.epsilon = 1e-19L;
  CHECK_THROWS_AS(zeta(3, p), DomainError);
  CHECK_THROWS_AS(double_zeta(3, 2, p), DomainError);
  p.epsilon = 1e-16L;
  CHECK(double_zeta(3, 2, p).bound < 1e-16L);
}

TEST_CASE("fixed truncation reports its own bound", "[numeric]") {
  Precision p;
  p.truncation = 4;
  p.correction_terms = 2;
  const auto v = double_zeta(2, 1, p);
  CHECK(v.truncation == 4);
  CHECK(absdiff(v.value, 1.202056903159594285399738L) <= v.bound);
}

TEST_CASE("stuffle relations", "[numeric][property]") {
  for (int r = 2; r <= 18; ++r)
    for (int s = 2; s <= r && r + s <= 20; ++s) {
      const real lhs = double_zeta(r, s).value + double_zeta(s, r).value;
      const real rhs = zeta(r).value * zeta(s).value - zeta(r + s).value;
      REQUIRE(absdiff(lhs, rhs) < 1e-10L);
    }
}

TEST_CASE("sum formula", "[numeric][property]") {
  for (int k = 3; k <= 20; ++k) {
    real sum = 0;
    for (int r = 2; r < k; ++r) sum += double_zeta(r, k - r).value;
    REQUIRE(absdiff(sum, zeta(k).value) < 1e-10L);
  }
}

TEST_CASE("even weight identities", "[numeric]") {
  const auto k12 = verify_numeric(make(12, {{9, 28}, {7, 150}, {5, 168}}, Rational(5197, 691)));
  CHECK(*k12.residual < 1e-10L);
  const auto k16 = verify_numeric(
      make(16, {{13, 66}, {11, 375}, {9, 686}, {7, 675}, {5, 396}}, Rational(78967, 3617)));
  CHECK(*k16.residual < 1e-10L);
  const auto wrong = verify_numeric(make(12, {{9, 28}, {7, 150}, {5, 168}}, Rational(5196, 691)));
  CHECK(*wrong.residual > 1e-4L);
}

TEST_CASE("generated and canonical relations hold numerically", "[numeric][property]") {
  for (int k = 11; k <= 21; k += 2) {
    std::vector<Relation> rels = type1_relations(k - 1);
    for (auto& r : type2_relations(k + 1)) rels.push_back(r);
    rels.push_back(canonical_relation(k));
    for (const auto& rel : rels) {
      const auto rep = verify_numeric(rel);
      REQUIRE(*rep.residual < 1e-10L);
      REQUIRE(*rep.residual <= rep.bound + 1e-15L);
    }
  }
}

TEST_CASE("realization respects the defining relations for any kappa", "[numeric][property]") {
  for (real kappa : {0.0L, 0.37L, -2.5L}) {
    Realization rz;
    rz.kappa = kappa;
    for (int k = 5; k <= 12; ++k) {
      const real zk = zeta(k).value;
      for (int i = 1; i <= k / 2; ++i) {
        const int j = k - i;
        const real p = realize_p(i, j, rz).value;
        const real stuffle = realize_z(i, j, rz).value + realize_z(j, i, rz).value - p + zk;
        REQUIRE(std::fabs(stuffle) < 1e-10L);
        real shuffle = -p;
        for (int r = 1; r < k; ++r) {
          const real c = static_cast<real>(binom(r - 1, i - 1) + binom(r - 1, j - 1));
          if (c != 0) shuffle += c * realize_z(r, k - r, rz).value;
        }
        REQUIRE(std::fabs(shuffle) < 1e-10L);
      }
    }
  }
}

TEST_CASE("formal relations are realized for every spanning vector", "[numeric][property]") {
  for (int k = 5; k <= 13; k += 2) {
    for (const QVector& v : relation_span(build_space(k))) {
      Relation rel;
      rel.weight = k;
      for (int r = 1; r < k; ++r)
        if (v[r - 1] != 0) rel.coeffs[r] = v[r - 1];
      rel.lambda = v[k - 1];
      Realization rz;
      rz.kappa = 0.81L;
      REQUIRE(*verify_numeric(rel, rz).residual < 1e-10L);
    }
  }
}

TEST_CASE("bracket bound for the n = 1 term", "[numeric][property]") {
  for (int r = 2; r <= 12; ++r)
    for (int s = 2; s <= 12; ++s) {
      const auto dz = double_zeta(r, s);
      const real zr = zeta(r).value - 1, zs = zeta(s).value - 1;
      const real gap = dz.value - zr;
      REQUIRE(gap - dz.bound > 0);
      REQUIRE(gap + dz.bound < zr * zs);
    }
}

TEST_CASE("restricted sum constants", "[numeric]") {
  CHECK(absdiff(c_constant(1, 0).value, 1) < 1e-10L);
  CHECK(absdiff(c_constant(2, 0).value, 0.75L) < 1e-10L);
  CHECK(absdiff(c_constant(2, 1).value, 0.25L) < 1e-10L);
  const real reference[4][4] = {
      {1.0L},
      {0.75L, 0.25L},
      {0.2216893951092670383921184L, 0.09180726255210907564327637L, 0.6865033423386238859646052L},
      {0.0866629762657094129329746L, 0.03906700723799508106080471L, 0.6633370237342905870670254L,
       0.2109329927620049189391953L},
  };
  for (int d = 1; d <= 4; ++d)
    for (int i = 0; i < d; ++i) {
      const auto c = c_constant(d, i);
      REQUIRE(absdiff(c.value, reference[d - 1][i]) <= c.bound);
    }
  for (int d = 1; d <= 6; ++d) {
    real sum = 0;
    for (int i = 0; i < d; ++i) sum += c_constant(d, i).value;
    REQUIRE(absdiff(sum, 1) < 1e-10L);
  }
  CHECK_THROWS_AS(c_constant(3, 3), DomainError);
  CHECK_THROWS_AS(c_constant(0, 0), DomainError);
}

TEST_CASE("restricted sums partition the full sum", "[numeric][property]") {
  for (int k = 3; k <= 20; ++k) {
    CHECK(absdiff(restricted_sum(k, 1, 0).value, 1) < 1e-10L);
    for (int d = 2; d <= 5; ++d) {
      real sum = 0;
      for (int i = 0; i < d; ++i) sum += restricted_sum(k, d, i).value;
      REQUIRE(absdiff(sum, 1) < 1e-10L);
    }
  }
  for (int k = 4; k <= 20; k += 2) CHECK(absdiff(restricted_sum(k, 2, 0).value, 0.75L) < 1e-10L);
  CHECK_THROWS_AS(restricted_sum(2, 1, 0), DomainError);
}

TEST_CASE("convergence toward the limit constant", "[numeric]") {
  const auto rows = convergence_table(3, 0, {15, 25, 35, 45});
  REQUIRE(rows.size() == 4);
  const real limit = c_constant(3, 0).value;
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(absdiff(rows[i].report.value, limit) < absdiff(rows[i - 1].report.value, limit));
  CHECK(absdiff(rows.back().report.value, limit) < 1e-9L);
}

TEST_CASE("evaluation is deterministic across threads", "[numeric]") {
  const real expected = double_zeta(7, 4).value;
  std::vector<real> results(8);
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < results.size(); ++t)
    workers.emplace_back([&results, t] { results[t] = double_zeta(7, 4).value; });
  for (auto& w : workers) w.join();
  for (real v : results) CHECK(v == expected);
}
