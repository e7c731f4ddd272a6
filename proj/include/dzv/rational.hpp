// Exact scalars: arbitrary-precision integers and rationals backed by GMP.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace dzv {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
inline BigInt binom(long n, long k) {
  if (n < 0) throw DomainError("binom: n must be non-negative");
  if (k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// ∫₀¹ tᵃ(1−t)ᵇ dt = a!·b!/(a+b+1)!.
inline Rational beta_integral(long a, long b) {
  if (a < 0 || b < 0) throw DomainError("beta_integral: exponents must be non-negative");
  return Rational(factorial(a) * factorial(b), factorial(a + b + 1));
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// "num/den", den omitted when 1.
inline std::string to_string(const Rational& q) { return q.str(); }

/// Accepts "a", "a/b" with optional sign on either part; result is canonical.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw DomainError("malformed rational: '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw DomainError("malformed rational: '" + std::string(text) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw DomainError("malformed rational: '" + std::string(text) + "'");
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

}  // namespace dzv
