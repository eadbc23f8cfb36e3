#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sphharm/geometry.hpp"
#include "sphharm/harmonic.hpp"
#include "sphharm/legendre.hpp"

using namespace sphharm;
using std::numbers::pi;

namespace {

Rational q(long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::vector<double> grid(int points) {
  std::vector<double> t;
  for (int i = 0; i < points; ++i) t.push_back(-1.0 + 2.0 * i / (points - 1));
  return t;
}

}  // namespace

TEST_CASE("evaluation examples") {
  for (int p = 2; p <= 7; ++p) CHECK(legendre_eval(p, 0, 0.3) == 1.0);
  CHECK(legendre_eval(3, 2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(legendre_eval(2, 3, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  for (int p = 2; p <= 7; ++p)
    for (int n = 0; n <= 15; ++n) {
      CHECK(legendre_eval(p, n, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(legendre_eval(p, n, -1.0) == doctest::Approx(n % 2 ? -1.0 : 1.0).epsilon(1e-14));
    }
  CHECK_THROWS_AS(legendre_eval(1, 2, 0.0), std::domain_error);
}

TEST_CASE("exact coefficients") {
  CHECK(legendre_coeffs(3, 2) == Poly1D({q(-1, 2), q(0), q(3, 2)}));
  CHECK(legendre_coeffs(5, 1) == Poly1D({q(0), q(1)}));
  CHECK(legendre_coeffs(6, 0) == Poly1D({q(1)}));
  for (int p = 2; p <= 7; ++p) {
    const LegendreTable table(p, 16);
    CHECK(table.n_max() == 16);
    for (int n = 0; n <= 16; ++n) {
      const Poly1D& c = table.coeffs(n);
      CHECK(c.degree() == n);
      CHECK(c.evaluate(q(1)) == 1);
      for (int k = 0; k <= n; ++k)
        if ((n - k) % 2) CHECK(c.coefficient(k) == 0);
      CHECK(c.leading() == legendre_leading_coefficient(p, n));
      CHECK(table(n, 0.37) == doctest::Approx(legendre_eval(p, n, 0.37)).epsilon(1e-12).scale(1.0));
    }
  }
  CHECK(legendre_leading_coefficient(3, 2) == q(3, 2));
  CHECK(legendre_leading_coefficient(2, 2) == q(2));
}

TEST_CASE("p = 2 is Chebyshev and p = 3 is classical Legendre") {
  for (int n = 0; n <= 12; ++n) {
    const auto t = oracle::chebyshev(n);
    const Poly1D c2 = legendre_coeffs(2, n);
    for (int k = 0; k <= n; ++k) CHECK(to_double(c2.coefficient(k)) == t[k]);
    const auto l = oracle::classical_legendre(n);
    const Poly1D c3 = legendre_coeffs(3, n);
    for (int k = 0; k <= n; ++k) CHECK(std::abs(to_double(c3.coefficient(k)) - l[k]) <= 1e-14 * std::abs(l[k]));
  }
  for (double t : grid(21))
    for (int n = 0; n <= 10; ++n)
      CHECK(legendre_eval(2, n, t) == doctest::Approx(std::cos(n * std::acos(t))).epsilon(1e-12).scale(1.0));
}

TEST_CASE("bound on [-1, 1]") {
  for (int p = 2; p <= 7; ++p)
    for (int n = 0; n <= 15; ++n)
      for (double t : grid(201)) CHECK(std::abs(legendre_eval(p, n, t)) <= 1.0 + 1e-12);
}

TEST_CASE("Rodrigues form") {
  CHECK(rodrigues_eval(3, 0, 0.2) == 1.0);
  CHECK(rodrigues_eval(3, 1, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(rodrigues_eval(4, 2, 0.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  double worst = 0.0;
  for (int p = 2; p <= 7; ++p)
    for (int n = 0; n <= 10; ++n) {
      CHECK(rodrigues_terms(p, n).expand() == legendre_coeffs(p, n));
      for (double t : grid(21)) worst = std::max(worst, std::abs(rodrigues_eval(p, n, t) - legendre_eval(p, n, t)));
    }
  CHECK(worst <= 1e-9);
}

TEST_CASE("differential equation") {
  CHECK(ode_residual(4, 0, 0.3) == 0.0);
  CHECK(std::abs(ode_residual(3, 2, 0.7)) <= 1e-12);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CHECK(std::abs(ode_residual(6, 5, u(rng))) <= 1e-10);
  for (int p = 2; p <= 7; ++p)
    for (int n = 0; n <= 10; ++n)
      for (double t : grid(21)) CHECK(std::abs(ode_residual(p, n, t)) <= 1e-10 * (1 + n * n));
}

TEST_CASE("norms and orthogonality") {
  CHECK(legendre_norm_sq(3, 2) == PiMultiple{q(2, 5), 0});
  CHECK(legendre_norm_sq(2, 3) == PiMultiple{q(1, 2), 2});
  CHECK(legendre_norm_sq(2, 0) == PiMultiple{q(1), 2});
  for (int p = 2; p <= 7; ++p) {
    const Weight w = Weight::ultraspherical(p);
    const LegendreTable table(p, 15);
    for (int n = 0; n <= 15; ++n)
      for (int m = 0; m <= n; ++m) {
        const double ip = inner_product(table.coeffs(n), table.coeffs(m), w);
        if (n == m) CHECK(ip == doctest::Approx(legendre_norm_sq(p, n).value()).epsilon(1e-10));
        else CHECK(std::abs(ip) <= 1e-10);
      }
  }
}

TEST_CASE("proportional to the Jacobi Rodrigues family") {
  for (int p = 2; p <= 7; ++p) {
    const Weight w = Weight::ultraspherical(p);
    for (int n = 0; n <= 10; ++n) {
      const RealPoly1D a = to_real(legendre_coeffs(p, n)), b = to_real(jacobi_rodrigues(n, w));
      const double s = a.leading() / b.leading();
      for (int k = 0; k <= n; ++k) CHECK(std::abs(a.coefficient(k) - s * b.coefficient(k)) <= 1e-9);
    }
  }
}

TEST_CASE("recurrence coefficients of the Legendre family") {
  for (int p = 2; p <= 7; ++p) {
    const LegendreTable table(p, 12);
    std::vector<Poly1D> phis;
    for (int n = 0; n <= 12; ++n) phis.push_back(table.coeffs(n));
    const RecurrenceCoeffs rc = recurrence_coeffs(phis, Weight::ultraspherical(p));
    for (int n = 0; n < 12; ++n) {
      // p = 2, n = 0 is the degenerate 0/0 step; P_1 = t there
      if (!(p == 2 && n == 0)) CHECK(rc.A[n] == doctest::Approx((2.0 * n + p - 2) / (n + p - 2)).epsilon(1e-10));
      CHECK(std::abs(rc.B[n]) <= 1e-10);
      if (n > 0) CHECK(rc.C[n] == doctest::Approx(n / (n + p - 2.0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("dimension shift") {
  CHECK(dimension_shift(3, 2, 0) == legendre_coeffs(3, 2));
  CHECK(dimension_shift(3, 2, 1) == poly_x());
  CHECK(dimension_shift(2, 4, 1) == LegendreTable(4, 3).coeffs(3));
  for (int p = 2; p <= 7; ++p)
    for (int n = 0; n <= 8; ++n)
      for (int j = 0; j <= n; ++j) CHECK(dimension_shift(p, n, j) == legendre_coeffs(p + 2 * j, n - j));
  CHECK_THROWS_AS(dimension_shift(3, 2, 3), std::domain_error);
}

TEST_CASE("integral representation") {
  CHECK(integral_representation_eval(3, 2, 0.5) == doctest::Approx(-0.125).epsilon(1e-13));
  for (int p = 3; p <= 7; ++p) {
    CHECK(integral_representation_eval(p, 0, 0.3) == doctest::Approx(1.0).epsilon(1e-14));
    for (int n = 0; n <= 10; ++n) {
      CHECK(integral_representation_eval(p, n, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
      for (double t : grid(21))
        CHECK(std::abs(integral_representation_eval(p, n, t) - legendre_eval(p, n, t)) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(integral_representation_eval(2, 3, 0.1), std::domain_error);
}

TEST_CASE("Funk-Hecke coefficients") {
  for (int p = 2; p <= 6; ++p) {
    const double omega = solid_angle(p).value();
    CHECK(funk_hecke_coeff(p, 0, [](double) { return 1.0; }) == doctest::Approx(omega).epsilon(1e-12));
    for (int n = 0; n <= 5; ++n)
      for (int m = 0; m <= 5; ++m) {
        const double lam = funk_hecke_coeff(p, n, [&](double t) { return legendre_eval(p, m, t); });
        if (m == n) CHECK(lam == doctest::Approx(omega / count_harmonic(p, n).get_d()).epsilon(1e-12));
        else CHECK(std::abs(lam) <= 1e-10);
      }
  }
}

TEST_CASE("Funk-Hecke: sphere-side integral against the eigenvalue") {
  const auto f = [](double t) { return std::pow(t, 5) - 0.5 * t * t + 2.0; };
  for (int p = 3; p <= 5; ++p) {
    std::vector<double> eta(p, 0.0);
    eta[0] = 1.0;
    for (int n = 0; n <= 4; ++n) {
      const SphereRule rule = sphere_quadrature(p, 2 * n + 5);
      const double lam = funk_hecke_coeff(p, n, f);
      const HarmonicBasis basis(p, n);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const double lhs = rule.integrate([&](std::span<const double> xi) { return f(xi[0]) * basis.evaluate(j, xi); });
        CHECK(std::abs(lhs - lam * basis.evaluate(j, eta)) <= 1e-7);
      }
    }
  }
}

TEST_CASE("generating function") {
  CHECK(generating_function_partial(3, 0.4, 0.0, 10) == 1.0);
  CHECK(generating_function_closed_form(3, 0.4, 0.0) == 1.0);
  CHECK(generating_function_closed_form(3, 1.0, 0.5) == doctest::Approx(6.0));
  CHECK(generating_function_partial(3, 1.0, 0.5, 80) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(std::abs(generating_function_partial(4, 0.0, 0.3, 40) - 0.91 / (1.09 * 1.09)) <= 1e-10);
  for (int p = 2; p <= 6; ++p)
    for (double r : {0.1, 0.3, 0.5})
      for (double t : grid(11))
        CHECK(std::abs(generating_function_partial(p, t, r, 60) - generating_function_closed_form(p, t, r)) <= 1e-10);
  // error decays geometrically in N
  double prev = 1.0;
  for (int N : {5, 10, 20, 40}) {
    const double e = std::abs(generating_function_partial(5, 0.3, 0.6, N) - generating_function_closed_form(5, 0.3, 0.6));
    CHECK(e < prev);
    prev = e;
  }
  CHECK_THROWS_AS(generating_function_partial(3, 0.0, 0.95, 10), std::domain_error);
}
