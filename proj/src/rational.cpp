#include "sphharm/rational.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace sphharm {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational rising_factorial(const Rational& x, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= x + i;
  return r;
}

Rational falling_factorial(const Rational& x, int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r *= x - i;
  return r;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r(BigInt(s, 10));
      return r;
    }
    BigInt num(s.substr(0, slash), 10);
    BigInt den(s.substr(slash + 1), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + s + "'");
  }
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double PiMultiple::value() const {
  return to_double(coeff) * std::pow(std::numbers::pi, 0.5 * half_pi_power);
}

PiMultiple operator*(const PiMultiple& a, const PiMultiple& b) {
  return {Rational(a.coeff * b.coeff), a.half_pi_power + b.half_pi_power};
}

PiMultiple operator/(const PiMultiple& a, const PiMultiple& b) {
  if (b.coeff == 0) throw std::domain_error("PiMultiple: division by zero");
  return {Rational(a.coeff / b.coeff), a.half_pi_power - b.half_pi_power};
}

PiMultiple operator*(const Rational& a, const PiMultiple& b) {
  return {Rational(a * b.coeff), b.half_pi_power};
}

bool operator==(const PiMultiple& a, const PiMultiple& b) {
  if (a.coeff == 0 || b.coeff == 0) return a.coeff == b.coeff;
  return a.coeff == b.coeff && a.half_pi_power == b.half_pi_power;
}

PiMultiple gamma_half(int m) {
  if (m < 1) throw std::domain_error("gamma_half: argument must be positive");
  if (m % 2 == 0) return {Rational(factorial(static_cast<unsigned>(m / 2 - 1))), 0};
  // Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
  const unsigned k = static_cast<unsigned>((m - 1) / 2);
  BigInt four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  Rational c(factorial(2 * k), four_k * factorial(k));
  c.canonicalize();
  return {c, 1};
}

std::string to_string(const PiMultiple& v) {
  if (v.coeff == 0 || v.half_pi_power == 0) {
    if (v.coeff.get_den() == 1) return v.coeff.get_num().get_str();
    return to_string(v.coeff);
  }
  std::string c = v.coeff.get_den() == 1 ? v.coeff.get_num().get_str() : to_string(v.coeff);
  std::string pi = "pi";
  if (v.half_pi_power % 2 == 0) {
    if (v.half_pi_power != 2) pi += "^" + std::to_string(v.half_pi_power / 2);
  } else {
    pi += "^(" + std::to_string(v.half_pi_power) + "/2)";
  }
  return c + "*" + pi;
}

}  // namespace sphharm
