#include "dzv/zagier.hpp"

#include <stdexcept>

namespace dzv {

namespace {

std::string zeta_label(int r, int s) {
  return "zeta(" + std::to_string(r) + "," + std::to_string(s) + ")";
}

void require_odd_weight(int k, int minimum, const char* what) {
  if (k % 2 == 0 || k < minimum)
    throw DomainError(std::string(what) + ": weight must be odd and >= " +
                      std::to_string(minimum) + ", got " + std::to_string(k));
}

}  // namespace

BigInt zagier_bracket(int K, int m, int n) {
  BigInt v = (n == m ? 1 : 0) + (n == K ? 1 : 0);
  return v - binom(2 * n, 2 * m) - binom(2 * n, 2 * K - 2 * m - 1);
}

ZagierMatrix zagier_matrix(int K) {
  if (K < 2) throw DomainError("zagier_matrix: K must be >= 2");
  const int k = 2 * K + 1;
  ZagierMatrix z;
  z.K = K;
  z.entries = zero_matrix<Rational>(K, K);
  for (int i = 0; i < K; ++i) {
    const int r = 2 * i + 2;
    const int m = K - i - 1;  // row holds ζ(k-2m-1, 2m+1)
    z.row_labels.push_back(zeta_label(r, k - r));
    for (int j = 0; j < K; ++j) {
      const int n = j + 1;
      Rational entry(zagier_bracket(K, m, n));
      if (n == K) entry *= Rational(-1, 2);
      z.entries(i, j) = entry;
    }
  }
  for (int n = 1; n <= K; ++n)
    z.col_labels.push_back("zeta(" + std::to_string(2 * n + 1) + ")zeta(" +
                           std::to_string(k - 2 * n - 1) + ")");
  return z;
}

QMatrix zagier_submatrix(int K) {
  const ZagierMatrix z = zagier_matrix(K);
  return z.entries.topLeftCorner(K - 1, K - 1);
}

Relation canonical_relation(int k) {
  require_odd_weight(k, 5, "canonical_relation");
  Relation rel;
  rel.weight = k;
  rel.coeffs[k - 1] = 2 * (k - 2);
  for (int r = 4; r <= k - 3; r += 2) rel.coeffs[r] = r - (k - r);
  rel.coeffs[2] = -(k - 2);
  rel.lambda = Rational(-3 * (k - 3), 4);
  rel.provenance.kind = RelationKind::canonical;
  rel.provenance.note = "canonical relation";
  return rel;
}

QVector zagier_coordinates(const Relation& rel) {
  require_odd_weight(rel.weight, 5, "zagier_coordinates");
  validate(rel);
  const int K = (rel.weight - 1) / 2;
  QVector v = zero_vector<Rational>(K);
  for (const auto& [r, c] : rel.coeffs) {
    if (c == 0) continue;
    if (r % 2 != 0)
      throw DomainError("zagier_coordinates: coefficient on odd first argument r=" +
                        std::to_string(r));
    v[r / 2 - 1] = c;
  }
  return v;
}

KernelElement combine_kernel_element(const Relation& rel) {
  require_odd_weight(rel.weight, 5, "combine_kernel_element");
  if (rel.coefficients_zero())
    throw DomainError("combine_kernel_element: zero relation cannot eliminate zeta(k)");
  const Relation canon = canonical_relation(rel.weight);
  KernelElement out;
  out.novel = rel.lambda != 0;
  // λ_rel·(canonical) - λ_canon·(rel) has no Z_k term.
  out.vector = out.novel ? QVector(rel.lambda * zagier_coordinates(canon) -
                                   canon.lambda * zagier_coordinates(rel))
                         : zagier_coordinates(rel);
  make_primitive(out.vector);
  const int K = (rel.weight - 1) / 2;
  const QVector image = (out.vector.transpose() * zagier_matrix(K).entries).transpose();
  if (!(image.array() == Rational(0)).all())
    throw DomainError("combine_kernel_element: result is not in the left kernel of B_K; "
                      "the input relation does not hold");
  return out;
}

RenormMatrices renorm_matrices(int k, int kind) {
  if (k % 2 != 0 || k < 4) throw DomainError("renorm_matrices: k must be even and >= 4");
  if (kind != 1 && kind != 2) throw DomainError("renorm_matrices: kind must be 1 or 2");
  const int size = kind == 1 ? (k - 2) / 2 : (k - 4) / 2;
  const int top = kind == 1 ? k - 1 : k - 3;
  RenormMatrices out{kind, k, zero_matrix<Rational>(size, size), zero_matrix<Rational>(size, size)};
  for (int i = 1; i <= size; ++i) {
    out.D(i - 1, i - 1) = Rational(1) / Rational(binom(top, 2 * i - 1));
    for (int j = 1; j <= size; ++j) out.B(i - 1, j - 1) = Rational(binom(2 * j, 2 * i - 1));
  }
  return out;
}

QVector odd_coefficient_vector(const HomPoly& p, int kind) {
  if (kind != 1 && kind != 2) throw DomainError("odd_coefficient_vector: kind must be 1 or 2");
  const Sign sign = kind == 1 ? Sign::plus : Sign::minus;
  if (p.degree() < 2 || !is_period_polynomial(p, sign))
    throw DomainError(std::string("odd_coefficient_vector: polynomial is not in W_k^") +
                      (kind == 1 ? "+" : "-"));
  const HomPoly source = kind == 1 ? p : partial_x(p);
  const int d = source.degree();
  const int size = kind == 1 ? d / 2 : (d - 1) / 2;
  QVector v(size);
  for (int j = 1; j <= size; ++j) {
    const int s = kind == 1 ? 2 * j - 1 : 2 * j;
    v[j - 1] = source.coeff(d - s);
  }
  return v;
}

QVector renormalize(const QVector& v, int k, int kind) {
  const RenormMatrices m = renorm_matrices(k, kind);
  if (v.size() != m.B.cols())
    throw DomainError("renormalize: vector length " + std::to_string(v.size()) +
                      " does not match " + std::to_string(m.B.cols()));
  return m.D * (m.B * v);
}

QVector renormalized_vector(const HomPoly& p, int kind) {
  return renormalize(odd_coefficient_vector(p, kind), p.degree() + 2, kind);
}

int relation_rank(int k) {
  require_odd_weight(k, 7, "relation_rank");
  std::vector<Relation> rels = type1_relations(k - 1);
  for (auto& r : type2_relations(k + 1)) rels.push_back(std::move(r));
  if (rels.empty()) return 0;
  const int K = (k - 1) / 2;
  QMatrix stacked(static_cast<Eigen::Index>(rels.size()), K);
  for (std::size_t i = 0; i < rels.size(); ++i)
    stacked.row(static_cast<Eigen::Index>(i)) = zagier_coordinates(rels[i]).transpose();
  return static_cast<int>(rank(stacked));
}

}  // namespace dzv
