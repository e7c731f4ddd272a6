#include "dzv/numeric.hpp"

#include <cfloat>
#include <cmath>
#include <string>

namespace dzv {

namespace {

constexpr real kUnitRoundoff = LDBL_EPSILON;
constexpr long kStartTruncation = 16;
constexpr long kMaxTruncation = 1L << 20;
constexpr int kMaxCorrectionTerms = 30;

// B_{2j}/(2j)! for j = 0..kMaxCorrectionTerms+1, from the exact recurrence.
const std::vector<real>& bernoulli_ratios() {
  static const std::vector<real> table = [] {
    const int max_index = 2 * (kMaxCorrectionTerms + 1);
    std::vector<Rational> b(max_index + 1);
    b[0] = 1;
    for (int m = 1; m <= max_index; ++m) {
      Rational sum = 0;
      for (int k = 0; k < m; ++k) sum += Rational(binom(m + 1, k)) * b[k];
      b[m] = -sum / (m + 1);
    }
    std::vector<real> out;
    for (int j = 0; 2 * j <= max_index; ++j) {
      const Rational ratio = b[2 * j] / Rational(factorial(2 * j));
      out.push_back(boost::multiprecision::numerator(ratio).convert_to<real>() /
                    boost::multiprecision::denominator(ratio).convert_to<real>());
    }
    return out;
  }();
  return table;
}

void check_precision(const Precision& prec) {
  if (!(prec.epsilon > 64 * kUnitRoundoff))
    throw DomainError("requested precision " + std::to_string(static_cast<double>(prec.epsilon)) +
                      " is beyond what extended precision can guarantee");
  if (prec.correction_terms < 1 || prec.correction_terms > kMaxCorrectionTerms)
    throw DomainError("correction_terms must lie in [1, " + std::to_string(kMaxCorrectionTerms) +
                      "]");
  if (prec.truncation < 0) throw DomainError("truncation must be non-negative");
}

// Σ_{n=start}^{N-1} n^{-s} + tail, doubling N until the tail bound fits.
NumericReport zeta_from(int s, long start, const Precision& prec) {
  if (s < 2) throw DomainError("zeta: s must be >= 2 (s=" + std::to_string(s) + " diverges)");
  check_precision(prec);
  long n = prec.truncation > 0 ? prec.truncation : kStartTruncation;
  if (n < start) n = start;
  NumericReport tail = power_tail(s, n, prec.correction_terms);
  while (tail.bound > prec.epsilon / 4 && prec.truncation == 0) {
    if (n >= kMaxTruncation) throw DomainError("zeta: tail bound does not converge");
    n *= 2;
    tail = power_tail(s, n, prec.correction_terms);
  }
  real sum = 0;
  for (long m = start; m < n; ++m) sum += std::pow(static_cast<real>(m), static_cast<real>(-s));
  NumericReport out;
  out.value = sum + tail.value;
  out.bound = tail.bound + 2 * (n + 8) * kUnitRoundoff * std::fabs(out.value);
  out.truncation = n;
  return out;
}

}  // namespace

NumericReport power_tail(int a, long n, int correction_terms) {
  if (a < 2 || n < 1) throw DomainError("power_tail: need a >= 2 and n >= 1");
  const auto& ratios = bernoulli_ratios();
  const real nn = static_cast<real>(n);
  const real inv = 1 / nn;
  const real base = std::pow(nn, static_cast<real>(-a));

  real value = nn * base / (a - 1) + base / 2;
  real rising = a;        // (a)_{2j-1}
  real power = base * inv;  // n^{-a-2j+1}
  for (int j = 1; j <= correction_terms; ++j) {
    value += ratios[j] * rising * power;
    rising *= static_cast<real>(a + 2 * j - 1) * static_cast<real>(a + 2 * j);
    power *= inv * inv;
  }
  NumericReport out;
  out.value = value;
  out.bound = std::fabs(ratios[correction_terms + 1]) * rising * power +
              (4 * correction_terms + 8) * kUnitRoundoff * value;
  out.truncation = n;
  return out;
}

NumericReport zeta(int s, const Precision& prec) { return zeta_from(s, 1, prec); }

NumericReport zeta_minus_one(int s, const Precision& prec) { return zeta_from(s, 2, prec); }

namespace {

NumericReport double_zeta_at(int r, int s, long n, int terms) {
  const auto& ratios = bernoulli_ratios();

  // Inner tails T_r(m) = Σ_{l>m} l^{-r}, m = n-1 down to 1.
  const NumericReport inner = power_tail(r, n, terms);
  std::vector<real> tails(static_cast<std::size_t>(n));
  tails[static_cast<std::size_t>(n - 1)] = inner.value;
  for (long m = n - 2; m >= 1; --m)
    tails[static_cast<std::size_t>(m)] =
        tails[static_cast<std::size_t>(m + 1)] +
        std::pow(static_cast<real>(m + 1), static_cast<real>(-r));

  real head = 0, weight_sum = 0;
  for (long m = 1; m < n; ++m) {
    const real w = std::pow(static_cast<real>(m), static_cast<real>(-s));
    head += w * tails[static_cast<std::size_t>(m)];
    weight_sum += w;
  }

  // n >= N: T_r(m) = m^{1-r}/(r-1) - m^{-r}/2 + Σ_j c_j m^{-r-2j+1} + R(m),
  // c_j = B_{2j}/(2j)! (r)_{2j-1},  |R(m)| <= |c_{M+1}| m^{-r-2M-1}.
  real outer = 0, outer_bound = 0, magnitude = 0;
  auto add = [&](real coeff, int exponent) {
    const NumericReport t = power_tail(exponent, n, terms);
    outer += coeff * t.value;
    outer_bound += std::fabs(coeff) * t.bound;
    magnitude += std::fabs(coeff * t.value);
  };
  add(1 / static_cast<real>(r - 1), s + r - 1);
  add(-0.5L, s + r);
  real rising = r;
  for (int j = 1; j <= terms; ++j) {
    add(ratios[j] * rising, s + r + 2 * j - 1);
    rising *= static_cast<real>(r + 2 * j - 1) * static_cast<real>(r + 2 * j);
  }
  const int a = s + r + 2 * terms + 1;
  const real nn = static_cast<real>(n);
  const real remainder_sum = std::pow(nn, static_cast<real>(-a)) * (1 + nn / (a - 1));
  outer_bound += std::fabs(ratios[terms + 1]) * rising * remainder_sum;

  NumericReport out;
  out.value = head + outer;
  out.bound = inner.bound * weight_sum + outer_bound +
              4 * (n + 4 * terms + 8) * kUnitRoundoff * (std::fabs(head) + magnitude);
  out.truncation = n;
  return out;
}

}  // namespace

NumericReport double_zeta(int r, int s, const Precision& prec) {
  if (r < 2)
    throw DomainError("double_zeta: r must be >= 2 (Z_{1,s} has no convergent value)");
  if (s < 1) throw DomainError("double_zeta: s must be >= 1");
  check_precision(prec);
  long n = prec.truncation > 0 ? prec.truncation : kStartTruncation;
  NumericReport out = double_zeta_at(r, s, n, prec.correction_terms);
  while (out.bound > prec.epsilon / 2 && prec.truncation == 0) {
    if (n >= kMaxTruncation) throw DomainError("double_zeta: tail bound does not converge");
    n *= 2;
    out = double_zeta_at(r, s, n, prec.correction_terms);
  }
  return out;
}

NumericReport realize_z(int r, int s, const Realization& realization) {
  if (r == 1) {
    NumericReport out;
    out.value = realization.kappa;
    return out;
  }
  return double_zeta(r, s, realization.precision);
}

NumericReport realize_p(int r, int s, const Realization& realization) {
  if (r < 1 || s < 1) throw DomainError("realize_p: indices must be >= 1");
  NumericReport out;
  if (r > 1 && s > 1) {
    const auto a = zeta(r, realization.precision);
    const auto b = zeta(s, realization.precision);
    out.value = a.value * b.value;
    out.bound = a.bound * b.value + b.bound * a.value + a.bound * b.bound +
                2 * kUnitRoundoff * out.value;
    return out;
  }
  const int k = r + s;
  const auto dz = double_zeta(k - 1, 1, realization.precision);
  const auto zk = zeta(k, realization.precision);
  out.value = realization.kappa + dz.value + zk.value;
  out.bound = dz.bound + zk.bound + 4 * kUnitRoundoff * (std::fabs(out.value) + 1);
  return out;
}

NumericReport verify_numeric(const Relation& rel, const Realization& realization) {
  validate(rel);
  real lhs = 0, bound = 0, magnitude = 0;
  for (const auto& [r, c] : rel.coeffs) {
    if (c == 0) continue;
    const real coeff = c.convert_to<real>();
    const auto v = realize_z(r, rel.weight - r, realization);
    lhs += coeff * v.value;
    bound += std::fabs(coeff) * v.bound;
    magnitude += std::fabs(coeff * v.value);
  }
  const real lambda = rel.lambda.convert_to<real>();
  const auto zk = zeta(rel.weight, realization.precision);
  const real rhs = lambda * zk.value;
  bound += std::fabs(lambda) * zk.bound;
  magnitude += std::fabs(rhs);
  bound += 4 * (static_cast<real>(rel.coeffs.size()) + 2) * kUnitRoundoff * magnitude;

  NumericReport out;
  out.value = lhs;
  out.residual = std::fabs(lhs - rhs);
  out.bound = bound;
  return out;
}

NumericReport c_constant(int d, int i, const Precision& prec) {
  if (d < 1) throw DomainError("c_constant: d must be >= 1");
  if (i < 0 || i >= d) throw DomainError("c_constant: i must lie in [0, d-1]");
  check_precision(prec);
  // ζ(j) - 1 <= 2·2^{-j} for j >= 3, so the terms beyond J add at most 2^{1-J}.
  int last = 2;
  while (std::ldexp(1.0L, 1 - last) > prec.epsilon / 4) ++last;
  NumericReport out;
  for (int j = 2; j <= last; ++j) {
    if (j % d != i) continue;
    const auto term = zeta_minus_one(j, prec);
    out.value += term.value;
    out.bound += term.bound;
  }
  out.bound += std::ldexp(1.0L, 1 - last) + 2 * last * kUnitRoundoff * out.value;
  out.truncation = last;
  return out;
}

NumericReport restricted_sum(int k, int d, int i, const Precision& prec) {
  if (k < 3) throw DomainError("restricted_sum: k must be >= 3");
  if (d < 1) throw DomainError("restricted_sum: d must be >= 1");
  if (i < 0 || i >= d) throw DomainError("restricted_sum: i must lie in [0, d-1]");
  real sum = 0, sum_bound = 0;
  for (int r = 2; r <= k - 1; ++r) {
    if (r % d != i) continue;
    const auto v = double_zeta(r, k - r, prec);
    sum += v.value;
    sum_bound += v.bound;
  }
  const auto zk = zeta(k, prec);
  NumericReport out;
  out.value = sum / zk.value;
  out.bound = (sum_bound + std::fabs(out.value) * zk.bound) / (zk.value - zk.bound) +
              2 * k * kUnitRoundoff * std::fabs(out.value);
  return out;
}

std::vector<ConvergenceRow> convergence_table(int d, int i, const std::vector<int>& ks,
                                              const Precision& prec) {
  std::vector<ConvergenceRow> rows;
  for (int k : ks) rows.push_back({k, restricted_sum(k, d, i, prec)});
  return rows;
}

}  // namespace dzv
