#include "dzv/period_space.hpp"

namespace dzv {

std::string to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

Sign parse_sign(const std::string& text) {
  if (text == "plus" || text == "+") return Sign::plus;
  if (text == "minus" || text == "-") return Sign::minus;
  throw DomainError("sign must be 'plus' or 'minus', got '" + text + "'");
}

QMatrix action_matrix(int degree, const Mat2& g) {
  QMatrix m = zero_matrix<Rational>(degree + 1, degree + 1);
  for (int j = 0; j <= degree; ++j) m.col(j) = act(HomPoly::monomial(degree, j), g).coeffs();
  return m;
}

namespace {

QMatrix identity(int n) {
  QMatrix m = zero_matrix<Rational>(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

// Stacked conditions whose common kernel is W_k^sign, in ascending-X columns.
QMatrix period_conditions(int degree, Sign sign) {
  const int n = degree + 1;
  const QMatrix id = identity(n);
  const QMatrix u = action_matrix(degree, Mat2::U());
  const QMatrix cond_s = id + action_matrix(degree, Mat2::S());
  const QMatrix cond_u = id + u + action_matrix(degree, Mat2::U() * Mat2::U());
  const QMatrix eps = action_matrix(degree, Mat2::epsilon());
  const QMatrix cond_eps = sign == Sign::plus ? QMatrix(id - eps) : QMatrix(id + eps);

  QMatrix stacked(3 * n, n);
  stacked << cond_s, cond_u, cond_eps;
  return stacked;
}

}  // namespace

PeriodBasis period_space_basis(int weight, Sign sign) {
  if (weight < 4 || weight % 2 != 0)
    throw DomainError("period_space_basis: weight must be even and >= 4, got " +
                      std::to_string(weight));
  const int degree = weight - 2;
  const QMatrix conditions = period_conditions(degree, sign);

  // Reverse the columns so kernel normalization pivots on the highest X-power.
  const QMatrix reversed = conditions.rowwise().reverse();
  PeriodBasis out{weight, sign, {}};
  for (const QVector& v : kernel(reversed)) out.basis.emplace_back(degree, v.reverse());
  return out;
}

bool is_period_polynomial(const HomPoly& p, Sign sign) {
  if (p.degree() % 2 != 0) return false;
  if (!(p + act(p, Mat2::S())).is_zero()) return false;
  const HomPoly pu = act(p, Mat2::U());
  if (!(p + pu + act(pu, Mat2::U())).is_zero()) return false;
  const HomPoly pe = act(p, Mat2::epsilon());
  return sign == Sign::plus ? pe == p : pe == -p;
}

int dim_modular_forms(int k) {
  if (k < 4 || k % 2 != 0)
    throw DomainError("dim_modular_forms: weight must be even and >= 4, got " + std::to_string(k));
  return k / 12 + (k % 12 == 2 ? 0 : 1);
}

int dim_cusp_forms(int k) { return dim_modular_forms(k) - 1; }

}  // namespace dzv
