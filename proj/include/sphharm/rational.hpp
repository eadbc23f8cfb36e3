// Exact rational arithmetic and exact values of the form q * pi^(k/2).
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sphharm {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// x (x+1) ... (x+k-1); 1 for k = 0.
Rational rising_factorial(const Rational& x, int k);
/// x (x-1) ... (x-k+1); 1 for k = 0.
Rational falling_factorial(const Rational& x, int k);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Always "num/den", including integers ("3/1").
std::string to_string(const Rational& q);
/// Accepts "num/den" or an integer literal. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// %.17g rendering used by every text output.
std::string format_double(double x);

/// Exact value coeff * pi^(half_pi_power / 2).
///
/// Gamma at integers and half-integers always lands in this form, so solid
/// angles, monomial sphere integrals and Legendre norms are all represented
/// exactly and compared with operator==.
struct PiMultiple {
  Rational coeff{0};
  int half_pi_power = 0;

  double value() const;
  bool is_zero() const { return coeff == 0; }

  friend PiMultiple operator*(const PiMultiple& a, const PiMultiple& b);
  friend PiMultiple operator/(const PiMultiple& a, const PiMultiple& b);
  friend PiMultiple operator*(const Rational& a, const PiMultiple& b);
  /// Zero values compare equal regardless of their pi power.
  friend bool operator==(const PiMultiple& a, const PiMultiple& b);
};

/// Gamma(m / 2) for m >= 1.
PiMultiple gamma_half(int m);

/// "3/4*pi^(3/2)", "2*pi", "1/3".
std::string to_string(const PiMultiple& v);

}  // namespace sphharm
