// Period polynomial spaces W_k, W_k^+, W_k^- and level-one dimension formulas.
#pragma once

#include <string>
#include <vector>

#include "dzv/linalg.hpp"
#include "dzv/polynomial.hpp"

namespace dzv {

/// plus: symmetric under X <-> Y ("odd" period polynomials, W_k^+);
/// minus: antisymmetric ("even", W_k^-).
enum class Sign { plus, minus };

std::string to_string(Sign s);
Sign parse_sign(const std::string& text);

struct PeriodBasis {
  int weight = 0;
  Sign sign = Sign::plus;
  /// Degree weight-2, primitive integer coefficients, RREF with respect to
  /// descending powers of X, positive leading coefficient.
  std::vector<HomPoly> basis;

  std::size_t dimension() const { return basis.size(); }
};

/// Matrix of the linear map P -> P|g on V (degree d), columns indexed by
/// ascending X-power.
QMatrix action_matrix(int degree, const Mat2& g);

PeriodBasis period_space_basis(int weight, Sign sign);

/// P|(1+S) = 0, P|(1+U+U^2) = 0 and P|ε = ±P.  False for odd degree.
bool is_period_polynomial(const HomPoly& p, Sign sign);

int dim_modular_forms(int k);
int dim_cusp_forms(int k);

}  // namespace dzv
