// The formal double zeta space D_k as an explicit relation matrix.
//
// Symbols, in column order: Z_{r,k-r} for r = 1..k-1, then P_{i,k-i} for
// i = 1..floor(k/2) (unordered, P_{r,s} = P_{s,r}), then Z_k.  Rows:
//   Z_{r,s} + Z_{s,r} - P_{r,s} + Z_k = 0                         per {r,s}
//   Σ_r [C(r-1,i-1) + C(r-1,j-1)] Z_{r,k-r} - P_{i,j} = 0           per {i,j}
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dzv/linalg.hpp"
#include "dzv/relation.hpp"

namespace dzv {

class FormalSpace {
 public:
  explicit FormalSpace(int weight);

  int weight() const { return weight_; }
  Eigen::Index symbol_count() const { return relations_.cols(); }
  Eigen::Index z_index(int r) const;
  Eigen::Index p_index(int i) const;  // either index of the unordered pair
  Eigen::Index zk_index() const { return symbol_count() - 1; }
  std::string symbol_name(Eigen::Index column) const;

  const QMatrix& relations() const { return relations_; }
  const RowEchelon<Rational>& echelon() const { return echelon_; }

  /// v minus its projection onto the relation span along the RREF pivots;
  /// zero exactly when v lies in the span.
  QVector reduce(QVector v) const;

 private:
  int weight_;
  QMatrix relations_;
  RowEchelon<Rational> echelon_;
};

FormalSpace build_space(int k);

struct FormalCheck {
  bool holds = false;
  std::optional<Rational> lambda;
  /// False when Z_k itself vanishes in D_k, so λ is not determined.
  bool lambda_unique = true;
};

/// Decides whether Σ coeffs·Z_{r,s} = λ·Z_k holds in D_k for some λ.
FormalCheck check_relation(const FormalSpace& space, const Relation& rel);

/// GKZ sum formulas: Σ_{r even} Z_{r,k-r} = 3/4 Z_k and Σ_{r odd, r>=3} = 1/4 Z_k.
bool sum_formula_check(int k);

/// Basis of all (a_1, ..., a_{k-1}, λ) with Σ a_r Z_{r,k-r} = λ Z_k in D_k.
std::vector<QVector> relation_span(const FormalSpace& space);

}  // namespace dzv
