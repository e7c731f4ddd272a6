#include "dzv/cli.hpp"

#include <initializer_list>
#include <sstream>

#include "dzv/formal_space.hpp"
#include "dzv/period_space.hpp"
#include "dzv/relation.hpp"
#include "dzv/serialize.hpp"
#include "dzv/zagier.hpp"

namespace dzv {

namespace {

HomPoly from_ascending(std::initializer_list<long> coeffs, int degree) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return homogenize(v, degree);
}

QVector qvec(std::initializer_list<Rational> entries) {
  QVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v[i++] = e;
  return v;
}

/// Relation with coefficients listed for descending r starting at `top`.
Relation printed(int weight, int top, int step, std::initializer_list<long> coeffs, Rational lambda) {
  Relation rel;
  rel.weight = weight;
  int r = top;
  for (long c : coeffs) {
    rel.coeffs[r] = c;
    r -= step;
  }
  rel.lambda = lambda;
  return rel;
}

bool vectors_proportional(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) return false;
  QVector pa = a, pb = b;
  make_primitive(pa);
  make_primitive(pb);
  return pa == pb && !a.isZero();
}

std::string describe(const Relation& rel) { return to_json(rel)["coeffs"].dump() + " | " + to_string(rel.lambda); }

class Collector {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }
  std::vector<GoldenCheck> take() { return std::move(checks_); }

 private:
  std::vector<GoldenCheck> checks_;
};

void period_goldens(Collector& c) {
  const HomPoly w12p = from_ascending({0, 4, 0, -25, 0, 42, 0, -25, 0, 4}, 10);
  const auto b12p = period_space_basis(12, Sign::plus);
  c.add("W12+ spanned by 4x^9-25x^7+42x^5-25x^3+4x",
        b12p.dimension() == 1 && vectors_proportional(b12p.basis[0].coeffs(), w12p.coeffs()));

  const auto b12m = period_space_basis(12, Sign::minus);
  const HomPoly e1 = from_ascending({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 10);
  const HomPoly e2 = from_ascending({0, 0, -1, 0, 3, 0, -3, 0, 1}, 10);
  bool span_ok = b12m.dimension() == 2;
  if (span_ok) {
    QMatrix m(4, 11);
    m.row(0) = b12m.basis[0].coeffs().transpose();
    m.row(1) = b12m.basis[1].coeffs().transpose();
    m.row(2) = e1.coeffs().transpose();
    m.row(3) = e2.coeffs().transpose();
    span_ok = rank(m) == 2;
  }
  c.add("W12- spanned by x^10-1, x^8-3x^6+3x^4-x^2", span_ok);

  const HomPoly w16 = from_ascending({0, 0, -2, 0, 7, 0, -11, 0, 11, 0, -7, 0, 2}, 14);
  const auto b16m = period_space_basis(16, Sign::minus);
  QMatrix m16(static_cast<Eigen::Index>(b16m.dimension()), 15);
  for (std::size_t i = 0; i < b16m.basis.size(); ++i)
    m16.row(static_cast<Eigen::Index>(i)) = b16m.basis[i].coeffs().transpose();
  c.add("W16- contains 2x^12-7x^10+11x^8-11x^6+7x^4-2x^2",
        in_row_space(m16, QVector(w16.coeffs())));

  bool dims = true;
  std::ostringstream bad;
  for (int k = 4; k <= 40; k += 2) {
    const int s = dim_cusp_forms(k);
    const auto plus = static_cast<int>(period_space_basis(k, Sign::plus).dimension());
    const auto minus = static_cast<int>(period_space_basis(k, Sign::minus).dimension());
    if (plus != s || minus != s + 1) {
      dims = false;
      bad << " k=" << k;
    }
  }
  c.add("dim W_k^+ = dim S_k, dim W_k^- = dim S_k + 1 for even k in [4,40]", dims, bad.str());
}

void table_goldens(Collector& c) {
  auto check = [&](const std::string& name, const CoeffTable& t, const Rational& scale, int top,
                   std::initializer_list<long> expected) {
    bool ok = true;
    int r = top;
    std::ostringstream got;
    for (long e : expected) {
      const Rational v = scale * t.at(r);
      got << to_string(v) << " ";
      if (v != Rational(e)) ok = false;
      --r;
    }
    c.add(name, ok, ok ? "" : "got " + got.str());
  };
  check("330*b for W12+", b_coeffs(from_ascending({0, 4, 0, -25, 0, 42, 0, -25, 0, 4}, 10)), 330, 10,
        {24, 72, 119, 115, 15, -161, -288, -216});
  check("63*c for W12-", c_coeffs(from_ascending({0, 0, -1, 0, 3, 0, -3, 0, 1}, 10)), 63, 8,
        {14, 42, 75, 95, 84, 42});
  check("(429/2)*c for W16-",
        c_coeffs(from_ascending({0, 0, -2, 0, 7, 0, -11, 0, 11, 0, -7, 0, 2}, 14)), Rational(429, 2),
        12, {66, 198, 375, 555, 686, 728, 675, 555, 396, 198});
}

void relation_goldens(Collector& c) {
  auto check = [&](const std::string& name, const Relation& got, const Relation& expected) {
    c.add(name, proportional(got, expected), "got " + describe(got));
  };
  const HomPoly w12p = from_ascending({0, 4, 0, -25, 0, 42, 0, -25, 0, 4}, 10);
  const HomPoly w12m = from_ascending({0, 0, -1, 0, 3, 0, -3, 0, 1}, 10);
  const HomPoly w16m = from_ascending({0, 0, -2, 0, 7, 0, -11, 0, 11, 0, -7, 0, 2}, 14);
  check("weight 11 relation from W12-", type2_relation(w12m), printed(11, 8, 2, {28, 20, -42}, -3));
  check("weight 13 relation from W12+", type1_relation(w12p),
        printed(13, 10, 2, {24, 28, -10, -36}, -3));
  check("weight 15 relation from W16-", type2_relation(w16m),
        printed(15, 12, 2, {22, 30, 7, -20, -33}, -3));

  const auto t1 = type1_relations(16);
  check("weight 17 Type I relation", t1.empty() ? Relation{} : t1[0],
        printed(17, 14, 2, {156, 242, 153, -56, -215, -234}, -23));
  const auto t2 = type2_relations(18);
  const Relation target = printed(17, 14, 2, {4004, 6358, 4347, -1624, -5885, -6006}, -597);
  bool any = false;
  for (const auto& rel : t2) any = any || proportional(rel, target);
  c.add("weight 17 Type II relation from W18-", any);
}

void zagier_goldens(Collector& c) {
  const QMatrix b5 = zagier_matrix(5).entries;
  QMatrix expected(5, 5);
  expected << -2, -4, -6, -8, Rational(27),                     //
      0, -4, -20, -84, Rational(329, 2),                        //
      0, 0, -21, -126, Rational(461, 2),                        //
      0, -6, -15, -36, Rational(82),                            //
      -1, -1, -1, -1, Rational(5);
  c.add("B_5 entries", b5 == expected);

  const QVector v = qvec({0, -42, 20, 28});
  c.add("(0,-42,20,28) in the left kernel of B_5^(1)",
        QVector(v.transpose() * zagier_submatrix(5)).isZero());

  bool ok = false;
  std::string detail;
  try {
    const auto elem = combine_kernel_element(type2_relation(from_ascending({0, 0, -1, 0, 3, 0, -3, 0, 1}, 10)));
    ok = vectors_proportional(elem.vector, qvec({3, -27, 13, 17, -6})) &&
         QVector(elem.vector.transpose() * b5).isZero();
    detail = "got " + to_json(elem.vector).dump();
  } catch (const std::exception& e) {
    detail = e.what();
  }
  c.add("weight 11 kernel element (3,-27,13,17,-6)", ok, detail);
}

void canonical_goldens(Collector& c) {
  // Printed lists, descending r over (k-1, k-3, ..., 2); λ from the left-hand side.
  struct Printed {
    int k;
    std::vector<long> coeffs;
    Rational lambda;
  };
  const std::vector<Printed> lists{
      {5, {6, -3}, Rational(-3, 2)},
      {7, {10, -1, -5}, Rational(-3)},
      {9, {14, 3, -1, -7}, Rational(-9, 2)},
      {11, {18, 5, 1, -3, -9}, Rational(-6)},
      {13, {22, 7, 3, -1, -5, -11}, Rational(-15, 2)},
      {15, {26, 9, 5, 1, -3, -7, -13}, Rational(-9)},
  };
  for (const auto& p : lists) {
    Relation expected;
    expected.weight = p.k;
    int r = p.k - 1;
    for (long coeff : p.coeffs) {
      expected.coeffs[r] = coeff;
      r -= 2;
    }
    expected.lambda = p.lambda;
    const Relation got = canonical_relation(p.k);
    bool same = got.lambda == expected.lambda;
    for (int s = 1; s < p.k; ++s) same = same && got.coeff(s) == expected.coeff(s);
    const auto check = check_relation(build_space(p.k), got);
    const bool oracle = check.holds && check.lambda && *check.lambda == got.lambda;
    c.add("canonical relation k=" + std::to_string(p.k), same && oracle,
          "computed " + describe(got) + (oracle ? "" : " (oracle rejects)"));
  }
}

void renorm_goldens(Collector& c) {
  const QVector two = renormalize(qvec({4, -9, 6, -1}), 12, 2);
  c.add("D2 B2 (4,-9,6,-1)", two == qvec({0, Rational(1, 3), Rational(-10, 63), Rational(-2, 9)}),
        to_json(two).dump());
  const QVector one = renormalize(qvec({4, -25, 42, -25, 4}), 12, 1);
  c.add("D1 B1 (4,-25,42,-25,4)",
        one == qvec({0, Rational(-12, 11), Rational(-10, 33), Rational(28, 33), Rational(8, 11)}),
        to_json(one).dump());
}

}  // namespace

std::vector<GoldenCheck> run_selftest() {
  Collector c;
  period_goldens(c);
  table_goldens(c);
  relation_goldens(c);
  zagier_goldens(c);
  canonical_goldens(c);
  renorm_goldens(c);
  return c.take();
}

}  // namespace dzv
