// Numerical evaluation of ζ(s), ζ(r,s) and the restricted-sum constants,
// each with an explicit bound on the absolute error.
//
// Tails Σ_{m>=n} m^{-a} use Euler–Maclaurin with M Bernoulli corrections.
// For f(x) = x^{-a} every derivative has constant sign, so the remainder is
// bounded by the first omitted term.  ζ(r,s) sums n^{-s}·T_r(n) directly up
// to N and handles n >= N by expanding T_r(n) in powers of n, which turns
// the outer tail into a finite combination of single power tails.
#pragma once

#include <optional>
#include <vector>

#include "dzv/relation.hpp"

namespace dzv {

using real = long double;

struct Precision {
  real epsilon = 1e-12L;   // target absolute error
  long truncation = 0;     // 0: pick N from the tail bound
  int correction_terms = 8;
};

struct NumericReport {
  real value = 0;
  real bound = 0;  // guaranteed |value - exact|, rounding included
  std::optional<real> residual;
  long truncation = 0;
};

/// Values of the realization map D_k -> R.  κ is the image of Z_{1,s}.
struct Realization {
  real kappa = 0;
  Precision precision{};
};

/// Σ_{m>=n} m^{-a} with its remainder bound (a >= 2, n >= 1).
NumericReport power_tail(int a, long n, int correction_terms);

NumericReport zeta(int s, const Precision& prec = {});
/// ζ(s) - 1 summed from n = 2, without cancellation.
NumericReport zeta_minus_one(int s, const Precision& prec = {});
NumericReport double_zeta(int r, int s, const Precision& prec = {});

NumericReport realize_z(int r, int s, const Realization& realization = {});
NumericReport realize_p(int r, int s, const Realization& realization = {});

/// value = Σ a_r ζ(r, N-r), residual = |value - λ ζ(N)|.
NumericReport verify_numeric(const Relation& rel, const Realization& realization = {});

/// C_d^(i) = Σ_{j>=2, j ≡ i mod d} (ζ(j) - 1).
NumericReport c_constant(int d, int i, const Precision& prec = {});

/// ζ(k)^{-1} Σ_{2<=r<=k-1, r ≡ i mod d} ζ(r, k-r).
NumericReport restricted_sum(int k, int d, int i, const Precision& prec = {});

struct ConvergenceRow {
  int k = 0;
  NumericReport report;
};
std::vector<ConvergenceRow> convergence_table(int d, int i, const std::vector<int>& ks,
                                              const Precision& prec = {});

}  // namespace dzv
