// Zagier's matrix B_K, canonical relations and the renormalization matrices
// that map period polynomials onto relation coefficient vectors.
#pragma once

#include <string>
#include <vector>

#include "dzv/linalg.hpp"
#include "dzv/relation.hpp"

namespace dzv {

/// Weight k = 2K+1.  Row i (0-based) is ζ(2i+2, k-2i-2); column j is
/// ζ(2j+3)ζ(k-2j-3), the last column carrying ζ(0) = -1/2.
struct ZagierMatrix {
  int K = 0;
  QMatrix entries;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
};

/// δ_{n,m} + δ_{n,K} - C(2n,2m) - C(2n,2K-2m-1), before folding ζ(0).
BigInt zagier_bracket(int K, int m, int n);

ZagierMatrix zagier_matrix(int K);
/// B_K with the ζ(k-1,1) row and the ζ(k)ζ(0) column removed.
QMatrix zagier_submatrix(int K);

/// For odd k >= 5:
///   2(k-2) Z_{k-1,1} + Σ_{even 4<=r<=k-3} (r-s) Z_{r,s} - (k-2) Z_{2,k-2}
///     = -(3/4)(k-3) Z_k.
Relation canonical_relation(int k);

/// Coordinates of a relation in B_K row order (ζ(2,k-2), ..., ζ(k-1,1)).
/// Rejects nonzero coefficients on odd first arguments.
QVector zagier_coordinates(const Relation& rel);

struct KernelElement {
  QVector vector;  // primitive, length K
  /// False when the input had λ = 0, so the result is the input's own
  /// vector rather than a new combination with the canonical relation.
  bool novel = true;
};

/// Eliminates Z_k between the canonical relation and `rel`; the result
/// satisfies v·B_K = 0 (checked).
KernelElement combine_kernel_element(const Relation& rel);

struct RenormMatrices {
  int kind = 1;
  int k = 0;
  QMatrix D;  // diag(1/C(k-1,2i-1)) for kind 1, diag(1/C(k-3,2i-1)) for kind 2
  QMatrix B;  // B_ij = C(2j, 2i-1)
};

RenormMatrices renorm_matrices(int k, int kind);

/// α (kind 1: coefficients of X^r Y^s in p, s = 1,3,...) or β (kind 2:
/// coefficients of X^r Y^s in ∂p/∂X, s = 2,4,...), ascending s.
QVector odd_coefficient_vector(const HomPoly& p, int kind);

/// D·B·v.
QVector renormalize(const QVector& v, int k, int kind);

/// D·B·(α or β) for p in W_k^+ (kind 1) or W_k^- (kind 2).  Entry i
/// (0-based) is the coefficient of Z_{2i+2, ·} in the unnormalized relation.
QVector renormalized_vector(const HomPoly& p, int kind);

/// Rank of the Type I relations from W_{k-1}^+ together with the Type II
/// relations from W_{k+1}^-, for odd k >= 7.
int relation_rank(int k);

}  // namespace dzv
