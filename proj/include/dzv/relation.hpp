// Period-polynomial relations among double zeta values of odd weight.
//
// A Relation of weight N encodes  Σ_r coeffs[r] · Z_{r,N-r} = lambda · Z_N.
//
// Type I takes p in W_k^+ to a relation of weight k+1.  With q = p|T and
// f = q·Y - (q|ε)·X one has f|ST' = f and f|S symmetric, so
// f - f|S = (f|S)|(T'-1) is a generating function admitting the symmetric
// witness H = f|S.  Type II takes p in W_k^- to weight k-1 with
// q = (∂p/∂X)|T and f = q - q|ε.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dzv/linalg.hpp"
#include "dzv/period_space.hpp"
#include "dzv/polynomial.hpp"

namespace dzv {

enum class RelationKind { type1, type2, canonical, kernel_element, custom };

std::string to_string(RelationKind kind);
RelationKind parse_relation_kind(const std::string& text);

struct Provenance {
  RelationKind kind = RelationKind::custom;
  int source_weight = 0;  // weight of the generating period polynomial, if any
  std::optional<int> basis_index;
  /// Emitted relation = scale × the relation as stated with the b/c
  /// antisymmetrization (coefficients b_{r,s}-b_{s,r}, λ halved).
  Rational scale = 1;
  std::string note;
};

struct Relation {
  int weight = 0;
  std::map<int, Rational> coeffs;
  Rational lambda = 0;
  Provenance provenance;

  Rational coeff(int r) const {
    auto it = coeffs.find(r);
    return it == coeffs.end() ? Rational(0) : it->second;
  }
  bool coefficients_zero() const;
  bool is_zero() const { return coefficients_zero() && lambda == 0; }
};

/// Checks 1 <= r <= weight-1 for every key and weight >= 3.
void validate(const Relation& rel);

/// Scales coefficients and λ jointly to a primitive integer vector whose
/// largest-r nonzero coefficient is positive; records the factor.
void normalize(Relation& rel);

/// Whether two relations agree up to a common nonzero scalar (λ included).
bool proportional(const Relation& a, const Relation& b);

struct CoeffTable {
  char kind = 'b';  // 'b' (Type I) or 'c' (Type II)
  int k = 0;        // weight of the period polynomial
  std::map<int, Rational> entries;  // r -> b_{r,s} (r+s = k+1) or c_{r,s} (r+s = k-1)

  Rational at(int r) const {
    auto it = entries.find(r);
    return it == entries.end() ? Rational(0) : it->second;
  }
};

/// p(X+Y,Y) = Σ C(k-1,r-1) b_{r,s} X^{r-1} Y^{s-2}, r in [1,k-1].
CoeffTable b_coeffs(const HomPoly& p);
/// ∂/∂X p(X+Y,Y) = Σ C(k-3,r-1) c_{r,s} X^{r-1} Y^{s-1}, r in [1,k-2].
CoeffTable c_coeffs(const HomPoly& p);

/// Intermediate polynomials of the Type I / Type II constructions.
struct Construction {
  HomPoly q;
  HomPoly f;
  HomPoly f_s;  // f|S, the symmetric witness H
  HomPoly a;    // f - f|S
};

Construction type1_construction(const HomPoly& p);
Construction type2_construction(const HomPoly& p);

Relation type1_relation(const HomPoly& p);
Relation type2_relation(const HomPoly& p);

/// Relations from every basis element of W_k^+ (Type I) or W_k^- (Type II).
std::vector<Relation> type1_relations(int k);
std::vector<Relation> type2_relations(int k);

HomPoly L1(const HomPoly& p);
HomPoly L1_alt(const HomPoly& p);
HomPoly L2(const HomPoly& p);
HomPoly L2_alt(const HomPoly& p);

/// A(X,Y) = Σ C(N-2,r-1) a_{r,s} X^{r-1} Y^{s-1} for a relation of weight N.
HomPoly generating_function(const Relation& rel);
/// Inverse of generating_function on coefficients; λ left at zero.
Relation relation_from_generating_function(const HomPoly& a);

/// Some symmetric H with H(X,X+Y) - H(X,Y) = A, free parameters set to zero;
/// nullopt if none exists.
std::optional<HomPoly> find_symmetric_H(const HomPoly& a);

/// λ = (w-1)/2 ∫₀¹ H(t,1-t) dt with w = dzv_weight; H must be symmetric of
/// degree w-2.
Rational lambda_from_H(const HomPoly& h, int dzv_weight);

/// λ implied by the generating-function criterion, or nullopt when the
/// coefficients admit no symmetric H.
std::optional<Rational> prop2_lambda(const Relation& rel);

}  // namespace dzv
