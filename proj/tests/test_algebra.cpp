#include <catch_amalgamated.hpp>

#include <random>

#include "dzv/linalg.hpp"
#include "dzv/polynomial.hpp"

using namespace dzv;

namespace {

HomPoly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  HomPoly p(degree);
  for (int i = 0; i <= degree; ++i) p[i] = Rational(coeff(rng), 1 + std::abs(coeff(rng)));
  return p;
}

Mat2 random_mat(std::mt19937& rng) {
  std::uniform_int_distribution<int> entry(-3, 3);
  for (;;) {
    long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
    if (a * d - b * c != 0) return {a, b, c, d};
  }
}

QMatrix random_matrix(std::mt19937& rng, int rows, int cols, int zero_rows) {
  std::uniform_int_distribution<int> entry(-4, 4);
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = entry(rng);
  // Force dependencies: the last rows copy sums of earlier ones.
  for (int i = rows - zero_rows; i < rows; ++i)
    if (i >= 2) m.row(i) = m.row(i - 1) + m.row(i - 2) * Rational(1, 2);
  return m;
}

}  // namespace

TEST_CASE("rational parsing canonicalizes", "[rational]") {
  CHECK(parse_rational("7/-14") == Rational(-1, 2));
  CHECK(to_string(parse_rational("7/-14")) == "-1/2");
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("+12")) == "12");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("3/"), DomainError);
}

TEST_CASE("binomials and factorials", "[rational]") {
  CHECK(binom(10, 3) == 120);
  CHECK(binom(5, 7) == 0);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(60, 30) == BigInt("118264581564861424"));
  CHECK_THROWS_AS(binom(-1, 0), DomainError);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
}

TEST_CASE("beta integral equals the alternating binomial sum", "[rational][property]") {
  for (long a = 0; a <= 20; ++a)
    for (long b = 0; b <= 20; ++b) {
      Rational sum = 0;
      for (long j = 0; j <= b; ++j) {
        Rational term(binom(b, j), a + j + 1);
        sum += (j % 2 == 0) ? term : Rational(-term);
      }
      REQUIRE(beta_integral(a, b) == sum);
    }
}

TEST_CASE("Mat2 rejects singular matrices", "[poly]") {
  CHECK_THROWS_AS(Mat2(1, 2, 2, 4), DomainError);
  CHECK(Mat2::S() * Mat2::S() == Mat2(-1, 0, 0, -1));
  CHECK(Mat2::U() * Mat2::U() * Mat2::U() == Mat2(-1, 0, 0, -1));
}

TEST_CASE("monomial and linear builders", "[poly]") {
  const HomPoly x2y = HomPoly::monomial(3, 2, Rational(5));
  CHECK(x2y[2] == 5);
  CHECK(x2y.coeff(7) == 0);
  const HomPoly l = HomPoly::linear(Rational(2), Rational(-3));
  CHECK(l.degree() == 1);
  CHECK(l[1] == 2);
  CHECK(l[0] == -3);
  const HomPoly sq = l * l;
  CHECK(sq[2] == 4);
  CHECK(sq[1] == -12);
  CHECK(sq[0] == 9);
  CHECK_THROWS_AS(HomPoly(2) + HomPoly(3), DomainError);
}

TEST_CASE("epsilon swaps X and Y", "[poly]") {
  const HomPoly p = homogenize<Rational>({1, 2, 3}, 4);  // Y^4 + 2XY^3 + 3X^2Y^2
  const HomPoly q = act(p, Mat2::epsilon());
  CHECK(q[4] == 1);
  CHECK(q[3] == 2);
  CHECK(q[2] == 3);
  CHECK(q[0] == 0);
  CHECK_THROWS_AS(homogenize<Rational>({1, 2, 3}, 1), DomainError);
  CHECK(dehomogenize(p).size() == 5);
}

TEST_CASE("the action is a right action", "[poly][property]") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = trial % 12;
    const HomPoly p = random_poly(rng, degree);
    const Mat2 g = random_mat(rng), h = random_mat(rng);
    REQUIRE(act(act(p, g), h) == act(p, g * h));
    REQUIRE(act(p, Mat2::identity()) == p);
  }
}

TEST_CASE("S acts as an involution in even degree", "[poly][property]") {
  std::mt19937 rng(7);
  for (int degree = 0; degree <= 30; degree += 2) {
    const HomPoly p = random_poly(rng, degree);
    REQUIRE(act(act(p, Mat2::S()), Mat2::S()) == p);
    const HomPoly u3 = act(act(act(p, Mat2::U()), Mat2::U()), Mat2::U());
    REQUIRE(u3 == p);
  }
}

TEST_CASE("partial_x obeys the Leibniz rule", "[poly][property]") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const HomPoly p = random_poly(rng, 1 + trial % 7);
    const HomPoly q = random_poly(rng, 1 + trial % 5);
    REQUIRE(partial_x(p * q) == partial_x(p) * q + p * partial_x(q));
  }
  CHECK(partial_x(HomPoly(0)).is_zero());
}

TEST_CASE("rref and rank", "[linalg]") {
  QMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  const auto e = rref(m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<Eigen::Index>{0, 1});
  CHECK(e.reduced(0, 0) == 1);
  CHECK(e.reduced(2, 2) == 0);
  CHECK(rank(QMatrix(zero_matrix<Rational>(2, 4))) == 0);
}

TEST_CASE("rank plus nullity equals the column count", "[linalg][property]") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 6, cols = 1 + (trial * 7) % 8;
    const QMatrix m = random_matrix(rng, rows, cols, trial % 3);
    const auto ker = kernel(m);
    REQUIRE(rank(m) + static_cast<Eigen::Index>(ker.size()) == cols);
    for (const auto& v : ker) REQUIRE(QVector(m * v).isZero());
    for (const auto& v : left_kernel(m)) REQUIRE(QVector(v.transpose() * m).isZero());
    REQUIRE(static_cast<Eigen::Index>(left_kernel(m).size()) == rows - rank(m));
  }
}

TEST_CASE("make_primitive clears denominators and fixes the sign", "[linalg]") {
  QVector v(3);
  v << Rational(0), Rational(-3, 4), Rational(9, 2);
  const Rational factor = make_primitive(v);
  CHECK(v[0] == 0);
  CHECK(v[1] == 1);
  CHECK(v[2] == -6);
  CHECK(factor == Rational(-4, 3));
}

TEST_CASE("solve returns a solution or nothing", "[linalg]") {
  QMatrix m(2, 3);
  m << 1, 1, 0, 0, 1, 1;
  QVector b(2);
  b << 3, 5;
  const auto x = solve<Rational>(m, b);
  REQUIRE(x);
  CHECK(QVector(m * *x) == b);

  QMatrix s(2, 1);
  s << 1, 1;
  QVector c(2);
  c << 1, 2;
  CHECK_FALSE(solve<Rational>(s, c));
  CHECK(in_row_space(QMatrix(s.transpose()), QVector(QVector::Constant(2, Rational(3)))));
  CHECK_FALSE(in_row_space(QMatrix(s.transpose()), c));
}
