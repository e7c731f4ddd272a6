#include "dzv/formal_space.hpp"

namespace dzv {

FormalSpace::FormalSpace(int weight) : weight_(weight) {
  if (weight < 3) throw DomainError("formal space weight must be >= 3");
  const int pairs = weight / 2;
  const Eigen::Index cols = (weight - 1) + pairs + 1;
  relations_ = zero_matrix<Rational>(2 * pairs, cols);

  for (int i = 1; i <= pairs; ++i) {
    const int j = weight - i;
    const Eigen::Index row = i - 1;
    relations_(row, z_index(i)) += 1;
    relations_(row, z_index(j)) += 1;
    relations_(row, p_index(i)) -= 1;
    relations_(row, zk_index()) += 1;
  }
  for (int i = 1; i <= pairs; ++i) {
    const int j = weight - i;
    const Eigen::Index row = pairs + i - 1;
    for (int r = 1; r <= weight - 1; ++r)
      relations_(row, z_index(r)) += Rational(binom(r - 1, i - 1) + binom(r - 1, j - 1));
    relations_(row, p_index(i)) -= 1;
  }
  echelon_ = rref(relations_);
}

Eigen::Index FormalSpace::z_index(int r) const {
  if (r < 1 || r > weight_ - 1) throw DomainError("Z index out of range");
  return r - 1;
}

Eigen::Index FormalSpace::p_index(int i) const {
  if (i < 1 || i > weight_ - 1) throw DomainError("P index out of range");
  const int low = std::min(i, weight_ - i);
  return (weight_ - 1) + (low - 1);
}

std::string FormalSpace::symbol_name(Eigen::Index column) const {
  if (column < weight_ - 1) {
    const int r = static_cast<int>(column) + 1;
    return "Z(" + std::to_string(r) + "," + std::to_string(weight_ - r) + ")";
  }
  if (column == zk_index()) return "Z(" + std::to_string(weight_) + ")";
  const int i = static_cast<int>(column - (weight_ - 1)) + 1;
  return "P(" + std::to_string(i) + "," + std::to_string(weight_ - i) + ")";
}

QVector FormalSpace::reduce(QVector v) const {
  for (Eigen::Index row = 0; row < echelon_.rank(); ++row) {
    const auto pivot = echelon_.pivots[static_cast<std::size_t>(row)];
    if (v[pivot] == 0) continue;
    const Rational factor = v[pivot];
    v -= factor * echelon_.reduced.row(row).transpose();
  }
  return v;
}

FormalSpace build_space(int k) { return FormalSpace(k); }

FormalCheck check_relation(const FormalSpace& space, const Relation& rel) {
  if (rel.weight != space.weight())
    throw DomainError("check_relation: relation weight " + std::to_string(rel.weight) +
                      " does not match space weight " + std::to_string(space.weight()));
  validate(rel);
  QVector v = zero_vector<Rational>(space.symbol_count());
  for (const auto& [r, c] : rel.coeffs) v[space.z_index(r)] += c;
  QVector e = zero_vector<Rational>(space.symbol_count());
  e[space.zk_index()] = 1;

  // Need λ with reduce(v) = λ·reduce(e).
  const QVector rv = space.reduce(v);
  const QVector re = space.reduce(e);
  FormalCheck out;
  Eigen::Index anchor = -1;
  for (Eigen::Index i = 0; i < re.size(); ++i)
    if (re[i] != 0) {
      anchor = i;
      break;
    }
  if (anchor < 0) {
    out.lambda_unique = false;
    out.holds = (rv.array() == Rational(0)).all();
    return out;
  }
  const Rational lambda = rv[anchor] / re[anchor];
  if (rv == QVector(lambda * re)) {
    out.holds = true;
    out.lambda = lambda;
  }
  return out;
}

bool sum_formula_check(int k) {
  if (k <= 2 || k % 2 != 0) throw DomainError("sum_formula_check: k must be even and > 2");
  const FormalSpace space(k);
  Relation even, odd;
  even.weight = odd.weight = k;
  for (int r = 2; r <= k - 1; ++r) (r % 2 == 0 ? even : odd).coeffs[r] = 1;
  const auto ce = check_relation(space, even);
  const auto co = check_relation(space, odd);
  return ce.holds && co.holds && ce.lambda == Rational(3, 4) && co.lambda == Rational(1, 4);
}

std::vector<QVector> relation_span(const FormalSpace& space) {
  const int k = space.weight();
  const Eigen::Index z_count = k - 1;
  const Eigen::Index p_count = k / 2;
  const QMatrix& m = space.relations();

  // Row combinations y^T M that cancel every P column.
  const QMatrix p_block = m.middleCols(z_count, p_count);
  std::vector<QVector> span;
  for (const QVector& y : left_kernel(p_block)) {
    const QVector w = (y.transpose() * m).transpose();
    QVector entry(z_count + 1);
    entry.head(z_count) = w.head(z_count);
    entry[z_count] = -w[space.zk_index()];
    span.push_back(std::move(entry));
  }
  return normalize_basis(span, z_count + 1);
}

}  // namespace dzv
