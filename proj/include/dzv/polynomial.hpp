// Homogeneous bivariate polynomials and the PGL2(Z) right action on them.
#pragma once

#include <cstdlib>
#include <ostream>
#include <vector>

#include <Eigen/Core>

#include "dzv/rational.hpp"

namespace dzv {

/// 2x2 integer matrix (a b; c d) acting by substitution F(aX+bY, cX+dY).
struct Mat2 {
  long a, b, c, d;

  Mat2(long a_, long b_, long c_, long d_) : a(a_), b(b_), c(c_), d(d_) {
    if (det() == 0) throw DomainError("Mat2: singular matrix");
  }

  long det() const { return a * d - b * c; }

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 epsilon() { return {0, 1, 1, 0}; }
  static Mat2 S() { return {0, -1, 1, 0}; }
  static Mat2 U() { return {1, -1, 1, 0}; }
  static Mat2 T() { return {1, 1, 0, 1}; }
  static Mat2 T_prime() { return {1, 0, 1, 1}; }

  friend Mat2 operator*(const Mat2& g, const Mat2& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d, g.c * h.a + g.d * h.c,
            g.c * h.b + g.d * h.d};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// Homogeneous polynomial of fixed degree d in X, Y.  Coefficient i belongs
/// to the monomial X^i Y^(d-i).
template <class Scalar>
class HomogeneousPolynomial {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  explicit HomogeneousPolynomial(int degree = 0)
      : coeffs_(Coeffs::Constant(checked_size(degree), Scalar(0))) {}

  HomogeneousPolynomial(int degree, Coeffs coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != checked_size(degree))
      throw DomainError("HomogeneousPolynomial: coefficient count must equal degree+1");
  }

  static HomogeneousPolynomial monomial(int degree, int x_power, Scalar c = Scalar(1)) {
    HomogeneousPolynomial p(degree);
    p[x_power] = std::move(c);
    return p;
  }

  /// aX + bY
  static HomogeneousPolynomial linear(Scalar a, Scalar b) {
    HomogeneousPolynomial p(1);
    p[0] = std::move(b);
    p[1] = std::move(a);
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeffs& coeffs() const { return coeffs_; }

  /// Coefficient of X^x_power Y^(d-x_power); zero outside [0, d].
  Scalar coeff(int x_power) const {
    if (x_power < 0 || x_power > degree()) return Scalar(0);
    return coeffs_[x_power];
  }
  Scalar& operator[](int x_power) { return coeffs_[x_power]; }
  const Scalar& operator[](int x_power) const { return coeffs_[x_power]; }

  bool is_zero() const {
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != Scalar(0)) return false;
    return true;
  }

  HomogeneousPolynomial& operator+=(const HomogeneousPolynomial& o) {
    require_same_degree(o);
    coeffs_ += o.coeffs_;
    return *this;
  }
  HomogeneousPolynomial& operator-=(const HomogeneousPolynomial& o) {
    require_same_degree(o);
    coeffs_ -= o.coeffs_;
    return *this;
  }
  HomogeneousPolynomial& operator*=(const Scalar& s) {
    coeffs_ *= s;
    return *this;
  }
  HomogeneousPolynomial& operator/=(const Scalar& s) {
    coeffs_ /= s;
    return *this;
  }

  friend HomogeneousPolynomial operator+(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
    return a += b;
  }
  friend HomogeneousPolynomial operator-(HomogeneousPolynomial a, const HomogeneousPolynomial& b) {
    return a -= b;
  }
  friend HomogeneousPolynomial operator-(HomogeneousPolynomial a) {
    a.coeffs_ = -a.coeffs_;
    return a;
  }
  friend HomogeneousPolynomial operator*(HomogeneousPolynomial a, const Scalar& s) { return a *= s; }
  friend HomogeneousPolynomial operator*(const Scalar& s, HomogeneousPolynomial a) { return a *= s; }
  friend HomogeneousPolynomial operator/(HomogeneousPolynomial a, const Scalar& s) { return a /= s; }

  friend HomogeneousPolynomial operator*(const HomogeneousPolynomial& p,
                                         const HomogeneousPolynomial& q) {
    HomogeneousPolynomial r(p.degree() + q.degree());
    for (int i = 0; i <= p.degree(); ++i) {
      if (p[i] == Scalar(0)) continue;
      for (int j = 0; j <= q.degree(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
  }

  friend bool operator==(const HomogeneousPolynomial& p, const HomogeneousPolynomial& q) {
    return p.degree() == q.degree() && p.coeffs_ == q.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const HomogeneousPolynomial& p) {
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
      if (p[i] == Scalar(0)) continue;
      os << (first ? "" : " + ") << "(" << p[i] << ")";
      if (i > 0) os << "X^" << i;
      if (p.degree() - i > 0) os << "Y^" << p.degree() - i;
      first = false;
    }
    if (first) os << "0";
    return os;
  }

 private:
  static Eigen::Index checked_size(int degree) {
    if (degree < 0) throw DomainError("HomogeneousPolynomial: negative degree");
    return degree + 1;
  }
  void require_same_degree(const HomogeneousPolynomial& o) const {
    if (o.degree() != degree()) throw DomainError("HomogeneousPolynomial: degree mismatch");
  }

  Coeffs coeffs_;
};

using HomPoly = HomogeneousPolynomial<Rational>;

/// (F|g)(X,Y) = F(aX+bY, cX+dY).  Right action: act(act(F,g),h) = act(F,g*h).
template <class Scalar>
HomogeneousPolynomial<Scalar> act(const HomogeneousPolynomial<Scalar>& p, const Mat2& g) {
  using Poly = HomogeneousPolynomial<Scalar>;
  const int d = p.degree();
  const Poly first = Poly::linear(Scalar(g.a), Scalar(g.b));
  const Poly second = Poly::linear(Scalar(g.c), Scalar(g.d));

  std::vector<Poly> first_pow{Poly::monomial(0, 0)};
  std::vector<Poly> second_pow{Poly::monomial(0, 0)};
  for (int i = 1; i <= d; ++i) {
    first_pow.push_back(first_pow.back() * first);
    second_pow.push_back(second_pow.back() * second);
  }
  Poly out(d);
  for (int i = 0; i <= d; ++i) {
    if (p[i] == Scalar(0)) continue;
    out += (first_pow[i] * second_pow[d - i]) * p[i];
  }
  return out;
}

/// ∂/∂X.  Degree 0 maps to the zero polynomial of degree 0.
template <class Scalar>
HomogeneousPolynomial<Scalar> partial_x(const HomogeneousPolynomial<Scalar>& p) {
  if (p.degree() == 0) return HomogeneousPolynomial<Scalar>(0);
  HomogeneousPolynomial<Scalar> r(p.degree() - 1);
  for (int i = 1; i <= p.degree(); ++i) r[i - 1] = p[i] * Scalar(i);
  return r;
}

/// Coefficients of p(x) (ascending powers of x) to X^i Y^(target-i).
template <class Scalar>
HomogeneousPolynomial<Scalar> homogenize(const std::vector<Scalar>& p, int target_degree) {
  HomogeneousPolynomial<Scalar> r(target_degree);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == Scalar(0)) continue;
    if (static_cast<int>(i) > target_degree)
      throw DomainError("homogenize: polynomial degree exceeds target degree");
    r[static_cast<int>(i)] = p[i];
  }
  return r;
}

/// Sets Y = 1; result has exactly degree+1 entries.
template <class Scalar>
std::vector<Scalar> dehomogenize(const HomogeneousPolynomial<Scalar>& p) {
  return std::vector<Scalar>(p.coeffs().begin(), p.coeffs().end());
}

}  // namespace dzv
