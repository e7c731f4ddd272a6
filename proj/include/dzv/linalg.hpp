// Exact Gauss-Jordan elimination over a field: RREF, kernels, membership, solve.
#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "dzv/rational.hpp"

namespace dzv {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;

template <class Scalar>
Matrix<Scalar> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  return Matrix<Scalar>::Constant(rows, cols, Scalar(0));
}
template <class Scalar>
Vector<Scalar> zero_vector(Eigen::Index n) {
  return Vector<Scalar>::Constant(n, Scalar(0));
}

template <class Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row

  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Reduced row-echelon form.  Pivot = first nonzero entry at or below the
/// current row; exact arithmetic makes magnitude pivoting unnecessary.
template <class Scalar>
RowEchelon<Scalar> rref(Matrix<Scalar> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  const Scalar zero(0);
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && m(pivot, col) == zero) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    for (Eigen::Index j = col; j < cols; ++j)
      if (m(row, j) != zero) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == zero) continue;
      const Scalar factor = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j)
        if (m(row, j) != zero) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class Scalar>
Eigen::Index rank(const Matrix<Scalar>& m) {
  return rref(m).rank();
}

/// Scale v to a primitive integer vector whose first nonzero entry is
/// positive.  Returns the factor applied (1 for the zero vector).
inline Rational make_primitive(QVector& v) {
  BigInt lcm_den = 1, gcd_num = 0;
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (lead < 0) lead = i;
    lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(v[i]));
  }
  if (lead < 0) return Rational(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    BigInt n = boost::multiprecision::numerator(v[i] * lcm_den);
    gcd_num = boost::multiprecision::gcd(gcd_num, n);
  }
  Rational factor(lcm_den, gcd_num);
  if (v[lead] < 0) factor = -factor;
  v *= factor;
  return factor;
}

/// Row-reduce a spanning set into a canonical basis.  For rationals each
/// basis vector is additionally made primitive (see make_primitive).
template <class Scalar>
std::vector<Vector<Scalar>> normalize_basis(const std::vector<Vector<Scalar>>& span,
                                            Eigen::Index dim) {
  if (span.empty()) return {};
  Matrix<Scalar> m(static_cast<Eigen::Index>(span.size()), dim);
  for (std::size_t i = 0; i < span.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = span[i].transpose();
  auto echelon = rref(std::move(m));
  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index i = 0; i < echelon.rank(); ++i) {
    Vector<Scalar> v = echelon.reduced.row(i).transpose();
    if constexpr (std::is_same_v<Scalar, Rational>) make_primitive(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {x : m x = 0}, normalized by normalize_basis.
template <class Scalar>
std::vector<Vector<Scalar>> kernel(const Matrix<Scalar>& m) {
  const auto echelon = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : echelon.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector<Scalar>> span;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = zero_vector<Scalar>(cols);
    v[free] = Scalar(1);
    for (Eigen::Index i = 0; i < echelon.rank(); ++i)
      v[echelon.pivots[static_cast<std::size_t>(i)]] = -echelon.reduced(i, free);
    span.push_back(std::move(v));
  }
  return normalize_basis(span, cols);
}

/// Basis of row vectors v with v m = 0 (returned as column vectors).
template <class Scalar>
std::vector<Vector<Scalar>> left_kernel(const Matrix<Scalar>& m) {
  return kernel<Scalar>(m.transpose());
}

/// Whether v lies in the span of the rows of m.
template <class Scalar>
bool in_row_space(const Matrix<Scalar>& m, const Vector<Scalar>& v) {
  if (v.size() != m.cols()) throw DomainError("in_row_space: dimension mismatch");
  Matrix<Scalar> stacked(m.rows() + 1, m.cols());
  stacked.topRows(m.rows()) = m;
  stacked.row(m.rows()) = v.transpose();
  return rank(stacked) == rank(m);
}

/// One solution of m x = v, free variables set to zero; nullopt when
/// inconsistent.
template <class Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& m, const Vector<Scalar>& v) {
  if (v.size() != m.rows()) throw DomainError("solve: dimension mismatch");
  Matrix<Scalar> augmented(m.rows(), m.cols() + 1);
  augmented.leftCols(m.cols()) = m;
  augmented.col(m.cols()) = v;
  const auto echelon = rref(std::move(augmented));
  Vector<Scalar> x = zero_vector<Scalar>(m.cols());
  for (Eigen::Index i = 0; i < echelon.rank(); ++i) {
    const auto p = echelon.pivots[static_cast<std::size_t>(i)];
    if (p == m.cols()) return std::nullopt;
    x[p] = echelon.reduced(i, m.cols());
  }
  return x;
}

}  // namespace dzv
