#include "sphharm/legendre.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

#include "sphharm/geometry.hpp"
#include "sphharm/harmonic.hpp"

namespace sphharm {

namespace {

void check_dimension(int p) {
  if (p < 2) throw std::domain_error("Legendre polynomials need p >= 2");
}

void check_degree(int n) {
  if (n < 0) throw std::domain_error("Legendre degree must be nonnegative");
}

}  // namespace

LegendreTable::LegendreTable(int p, int n_max) : p_(p) {
  check_dimension(p);
  check_degree(n_max);
  polys_.push_back(Poly1D({Rational(1)}));
  if (n_max >= 1) polys_.push_back(poly_x());
  for (int n = 1; n < n_max; ++n) {
    Rational a(2 * n + p - 2, n + p - 2);
    Rational c(n, n + p - 2);
    a.canonicalize();
    c.canonicalize();
    polys_.push_back(poly_x() * polys_[n] * a - polys_[n - 1] * c);
  }
  for (const auto& q : polys_) to_real_cached_.push_back(to_real(q));
}

std::vector<double> legendre_eval_all(int p, int n, double t) {
  check_dimension(p);
  check_degree(n);
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  v[0] = 1.0;
  if (n >= 1) v[1] = t;
  for (int k = 1; k < n; ++k)
    v[k + 1] = ((2.0 * k + p - 2) * t * v[k] - k * v[k - 1]) / (k + p - 2.0);
  return v;
}

double legendre_eval(int p, int n, double t) { return legendre_eval_all(p, n, t).back(); }

Poly1D legendre_coeffs(int p, int n) { return LegendreTable(p, n).coeffs(n); }

Rational legendre_leading_coefficient(int p, int n) {
  check_dimension(p);
  check_degree(n);
  Rational shift(p - 3, 2);
  shift.canonicalize();
  Rational den = falling_factorial(shift + n, n);
  mpq_mul_2exp(den.get_mpq_t(), den.get_mpq_t(), static_cast<unsigned long>(n));
  return Rational(falling_factorial(Rational(2 * n + p - 3), n) / den);
}

double RodriguesTerms::operator()(double t) const {
  const double u = (1.0 - t) * (1.0 + t);
  double s = 0.0;
  for (const auto& term : terms)
    s += to_double(term.coeff) * std::pow(t, term.t_power) * std::pow(u, term.one_minus_t2_power);
  return s;
}

Poly1D RodriguesTerms::expand() const {
  const Poly1D u({Rational(1), Rational(0), Rational(-1)});
  Poly1D out;
  for (const auto& term : terms) {
    Poly1D piece = Poly1D::monomial(term.t_power, term.coeff);
    for (int i = 0; i < term.one_minus_t2_power; ++i) piece = piece * u;
    out += piece;
  }
  return out;
}

RodriguesTerms rodrigues_terms(int p, int n) {
  check_dimension(p);
  check_degree(n);
  Rational shift(p - 3, 2);
  shift.canonicalize();
  const Rational b0 = shift + n;
  // (t power, k) -> coefficient of t^a (1-t^2)^{b0-k}
  std::map<std::pair<int, int>, Rational> cur{{{0, 0}, Rational(1)}};
  for (int step = 0; step < n; ++step) {
    std::map<std::pair<int, int>, Rational> next;
    for (const auto& [key, c] : cur) {
      const auto [a, k] = key;
      if (a > 0) next[{a - 1, k}] += c * a;
      Rational e = b0 - k;
      if (e != 0) next[{a + 1, k + 1}] += c * e * -2;
    }
    cur.clear();
    for (auto& [key, c] : next)
      if (c != 0) cur.emplace(key, std::move(c));
  }
  Rational scale = falling_factorial(b0, n);
  mpq_mul_2exp(scale.get_mpq_t(), scale.get_mpq_t(), static_cast<unsigned long>(n));
  scale = 1 / scale;
  if (n % 2) scale = -scale;
  RodriguesTerms out;
  // multiplying by (1-t^2)^{(3-p)/2} leaves integer exponent n - k
  for (const auto& [key, c] : cur) out.terms.push_back({key.first, n - key.second, Rational(c * scale)});
  return out;
}

double rodrigues_eval(int p, int n, double t) { return rodrigues_terms(p, n)(t); }

double ode_residual(int p, int n, double t) {
  const Poly1D pn = legendre_coeffs(p, n);
  const Poly1D d1 = pn.derivative();
  const Poly1D d2 = d1.derivative();
  return (1.0 - t * t) * to_real(d2)(t) + (1.0 - p) * t * to_real(d1)(t) +
         static_cast<double>(n) * (n + p - 2) * to_real(pn)(t);
}

PiMultiple legendre_norm_sq(int p, int n) {
  check_dimension(p);
  check_degree(n);
  Rational inv_n(BigInt(1), count_harmonic(p, n));
  inv_n.canonicalize();
  return inv_n * (solid_angle(p) / solid_angle(p - 1));
}

Poly1D dimension_shift(int p, int n, int j) {
  check_dimension(p);
  if (j < 0 || j > n) throw std::domain_error("dimension_shift: need 0 <= j <= n");
  Poly1D d = legendre_coeffs(p, n);
  for (int i = 0; i < j; ++i) d = d.derivative();
  const Rational at_one = d.evaluate(Rational(1));
  if (at_one == 0) throw std::logic_error("dimension_shift: derivative vanishes at t = 1");
  return d * Rational(1 / at_one);
}

double integral_representation_eval(int p, int n, double t) {
  if (p < 3) throw std::domain_error("integral representation needs p >= 3");
  check_degree(n);
  if (!(std::abs(t) <= 1.0)) throw std::domain_error("integral representation needs |t| <= 1");
  Rational e(p - 4, 2);
  e.canonicalize();
  const IntervalRule rule = gauss_rule(Weight(e, e), n / 2 + 1);
  const double root = std::sqrt((1.0 - t) * (1.0 + t));
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i)
    sum += rule.weights[i] * std::pow(std::complex<double>(t, rule.nodes[i] * root), n);
  return (solid_angle(p - 2) / solid_angle(p - 1)).value() * sum.real();
}

double funk_hecke_coeff(int p, int n, const std::function<double(double)>& f, int nodes) {
  check_dimension(p);
  check_degree(n);
  const IntervalRule rule = gauss_rule(Weight::ultraspherical(p), nodes);
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i)
    terms[i] = rule.weights[i] * f(rule.nodes[i]) * legendre_eval(p, n, rule.nodes[i]);
  return solid_angle(p - 1).value() * pairwise_sum(terms);
}

double generating_function_partial(int p, double t, double r, int N) {
  check_dimension(p);
  if (!(std::abs(r) <= 0.9)) throw std::domain_error("generating function: need |r| <= 0.9");
  if (!(std::abs(t) <= 1.0)) throw std::domain_error("generating function: need |t| <= 1");
  if (N < 0) throw std::domain_error("generating function: N must be nonnegative");
  const std::vector<double> pn = legendre_eval_all(p, N, t);
  double s = 0.0, rn = 1.0;
  for (int n = 0; n <= N; ++n) {
    s += rn * count_harmonic(p, n).get_d() * pn[n];
    rn *= r;
  }
  return s;
}

double generating_function_closed_form(int p, double t, double r) {
  return (1.0 - r * r) / std::pow(1.0 - 2.0 * r * t + r * r, 0.5 * p);
}

}  // namespace sphharm
