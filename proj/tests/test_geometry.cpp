#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "sphharm/geometry.hpp"
#include "sphharm/polynomial.hpp"

using namespace sphharm;
using std::numbers::pi;

TEST_CASE("solid angles in exact pi-power form") {
  CHECK(solid_angle(1) == PiMultiple{Rational(2), 0});
  CHECK(solid_angle(2) == PiMultiple{Rational(2), 2});
  CHECK(solid_angle(3) == PiMultiple{Rational(4), 2});
  CHECK(solid_angle(4) == PiMultiple{Rational(2), 4});
  CHECK(solid_angle(5) == PiMultiple{Rational(8, 3), 4});
  CHECK(to_string(solid_angle(3)) == "4*pi");
  for (int p = 1; p <= 12; ++p) {
    const double direct = 2.0 * std::pow(pi, p / 2.0) / std::tgamma(p / 2.0);
    CHECK(solid_angle(p).value() == doctest::Approx(direct).epsilon(1e-14));
  }
  CHECK_THROWS_AS(solid_angle(0), std::domain_error);
}

TEST_CASE("spherical to cartesian examples") {
  auto x = spherical_to_cartesian({1.0, 0.0, {}});
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(0.0));

  x = spherical_to_cartesian({2.0, pi / 2, {pi / 2}});
  CHECK(std::abs(x[0]) < 1e-15);
  CHECK(x[1] == doctest::Approx(2.0));
  CHECK(std::abs(x[2]) < 1e-15);

  x = spherical_to_cartesian({1.0, 1.234, {0.7, 0.0}});
  CHECK(std::abs(x[0]) < 1e-15);
  CHECK(std::abs(x[1]) < 1e-15);
  CHECK(std::abs(x[2]) < 1e-15);
  CHECK(x[3] == doctest::Approx(1.0));

  CHECK_THROWS_AS(spherical_to_cartesian({1.0, 2 * pi, {}}), std::domain_error);
  CHECK_THROWS_AS(spherical_to_cartesian({-1.0, 0.0, {}}), std::domain_error);
  CHECK_THROWS_AS(spherical_to_cartesian({1.0, 0.0, {3.5}}), std::domain_error);
}

TEST_CASE("cartesian to spherical examples and singular set") {
  std::vector<double> a{0.0, 1.0};
  auto s = cartesian_to_spherical(a);
  CHECK(s.r == doctest::Approx(1.0));
  CHECK(s.phi == doctest::Approx(pi / 2));

  std::vector<double> b{-1.0, 0.0, 0.0};
  s = cartesian_to_spherical(b);
  CHECK(s.phi == doctest::Approx(pi));
  CHECK(s.thetas[0] == doctest::Approx(pi / 2));

  std::vector<double> c{0.0, 0.0, -3.0};
  s = cartesian_to_spherical(c);
  CHECK(s.r == doctest::Approx(3.0));
  CHECK(s.thetas[0] == doctest::Approx(pi));
  CHECK(s.phi == 0.0);

  std::vector<double> d{0.0, 0.0, 0.0, 2.0};
  s = cartesian_to_spherical(d);
  CHECK(s.thetas[1] == 0.0);
  CHECK(s.thetas[0] == 0.0);

  std::vector<double> e{0.0, 0.0, 0.0, -2.0};
  s = cartesian_to_spherical(e);
  CHECK(s.thetas[1] == doctest::Approx(pi));
  CHECK(s.thetas[0] == doctest::Approx(pi));

  std::vector<double> zero(4, 0.0);
  CHECK_THROWS_AS(cartesian_to_spherical(zero), std::domain_error);
}

TEST_CASE("round trip on random points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ur(1e-3, 10.0), uphi(0.0, 2 * pi), uth(0.0, pi);
  double worst = 0.0;
  for (int p = 2; p <= 8; ++p) {
    for (int i = 0; i < 200; ++i) {
      SphericalPoint pt{ur(rng), uphi(rng), {}};
      for (int k = 0; k < p - 2; ++k) pt.thetas.push_back(uth(rng));
      const auto x = spherical_to_cartesian(pt);
      double nrm = 0.0;
      for (double v : x) nrm += v * v;
      CHECK(std::sqrt(nrm) == doctest::Approx(pt.r).epsilon(1e-12));
      const auto back = spherical_to_cartesian(cartesian_to_spherical(x));
      for (int k = 0; k < p; ++k) worst = std::max(worst, std::abs(back[k] - x[k]) / pt.r);
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("line element matches the embedding Jacobian") {
  CHECK(line_element_coeffs({5.0, 0.3, {}}) == std::vector<double>{1.0, 25.0});
  const auto eq = line_element_coeffs({1.0, 0.0, {pi / 2}});
  for (double g : eq) CHECK(g == doctest::Approx(1.0));
  const auto eq5 = line_element_coeffs({1.0, 1.0, {pi / 2, pi / 2, pi / 2}});
  for (double g : eq5) CHECK(g == doctest::Approx(1.0));

  // g_ii = |dx/dq_i|^2 by central differences, q = (r, t_{p-2}, ..., t_1, phi)
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uth(0.2, pi - 0.2);
  for (int p = 2; p <= 6; ++p) {
    SphericalPoint pt{1.7, 2.1, {}};
    for (int k = 0; k < p - 2; ++k) pt.thetas.push_back(uth(rng));
    const auto g = line_element_coeffs(pt);
    const double h = 1e-5;
    for (int i = 0; i < p; ++i) {
      auto bump = [&](double delta) {
        SphericalPoint q = pt;
        if (i == 0) q.r += delta;
        else if (i == p - 1) q.phi += delta;
        else q.thetas[p - 2 - i] += delta;
        return spherical_to_cartesian(q);
      };
      const auto plus = bump(h), minus = bump(-h);
      double len = 0.0;
      for (int k = 0; k < p; ++k) len += std::pow((plus[k] - minus[k]) / (2 * h), 2);
      CHECK(g[i] == doctest::Approx(len).epsilon(1e-8));
    }
  }
}

TEST_CASE("monomial sphere integrals") {
  CHECK(monomial_sphere_integral({0, 0, 0}) == PiMultiple{Rational(4), 2});
  CHECK(monomial_sphere_integral({1, 0, 0}).is_zero());
  CHECK(monomial_sphere_integral({2, 0, 0}) == PiMultiple{Rational(4, 3), 2});
  CHECK(monomial_sphere_integral({4, 0, 0, 0}) == PiMultiple{Rational(1, 4), 4});
  CHECK(monomial_sphere_integral({2}) == PiMultiple{Rational(2), 0});

  for (int p = 1; p <= 6; ++p)
    for (int n = 0; n <= 8; ++n)
      for (const auto& a : oracle::all_monomials(p, n)) {
        const double want = oracle::monomial_integral_gamma(a);
        CHECK(monomial_sphere_integral(a).value() == doctest::Approx(want).epsilon(1e-12));
      }
}

TEST_CASE("sphere quadrature exactness and weight sums") {
  for (int p = 2; p <= 6; ++p) {
    for (int d : {0, 1, 4, 8}) {
      const SphereRule rule = sphere_quadrature(p, d);
      CHECK(rule.exact_degree() >= d);
      CHECK(rule.weight_sum() == doctest::Approx(solid_angle(p).value()).epsilon(1e-12));
      for (double w : rule.weights()) CHECK(w > 0.0);
      for (std::size_t i = 0; i < rule.size(); ++i) {
        double s = 0.0;
        for (double v : rule.node(i)) s += v * v;
        REQUIRE(std::abs(std::sqrt(s) - 1.0) < 1e-14);
      }
    }
    const SphereRule rule = sphere_quadrature(p, 8);
    for (int n = 0; n <= 8; ++n)
      for (const auto& a : monomials_of_degree(p, n)) {
        const double got = rule.integrate([&](std::span<const double> x) {
          double m = 1.0;
          for (int i = 0; i < p; ++i) m *= std::pow(x[i], a[i]);
          return m;
        });
        const double want = monomial_sphere_integral(a).value();
        if (want == 0.0) CHECK(std::abs(got) < 1e-12);
        else CHECK(got == doctest::Approx(want).epsilon(1e-10));
      }
  }
  const SphereRule r4 = sphere_quadrature(4, 4);
  const double x1_4 = r4.integrate([](std::span<const double> x) { return std::pow(x[0], 4); });
  CHECK(x1_4 == doctest::Approx(pi * pi / 4).epsilon(1e-12));
}

TEST_CASE("pole-aligned rule integrates monomials for arbitrary poles") {
  std::mt19937_64 rng(3);
  for (int p = 2; p <= 5; ++p) {
    const auto pole = oracle::random_unit(p, rng);
    const SphereRule rule = pole_aligned_quadrature(p, pole, 6, 9);
    CHECK(rule.weight_sum() == doctest::Approx(solid_angle(p).value()).epsilon(1e-12));
    for (int n = 0; n <= 6; ++n)
      for (const auto& a : monomials_of_degree(p, n)) {
        const double got = rule.integrate([&](std::span<const double> x) {
          double m = 1.0;
          for (int i = 0; i < p; ++i) m *= std::pow(x[i], a[i]);
          return m;
        });
        const double want = monomial_sphere_integral(a).value();
        CHECK(got == doctest::Approx(want).epsilon(1e-10).scale(1.0));
      }
  }
  std::vector<double> bad{1.0, 1.0, 0.0};
  CHECK_THROWS_AS(pole_aligned_quadrature(3, bad, 4, 4), std::domain_error);
}

TEST_CASE("zonal integral reduces sphere integrals of f(<xi,eta>)") {
  for (int p = 2; p <= 6; ++p)
    CHECK(zonal_integral(p, [](double) { return 1.0; }) == doctest::Approx(solid_angle(p).value()).epsilon(1e-12));
  CHECK(std::abs(zonal_integral(3, [](double t) { return t; })) < 1e-14);
  CHECK(zonal_integral(3, [](double t) { return t * t; }) == doctest::Approx(4 * pi / 3).epsilon(1e-13));

  std::mt19937_64 rng(8);
  const auto f = [](double t) { return std::pow(t, 10) - 3 * std::pow(t, 7) + t * t - 0.25; };
  for (int p = 2; p <= 6; ++p) {
    const auto eta = oracle::random_unit(p, rng);
    const SphereRule rule = sphere_quadrature(p, 10);
    const double sphere = rule.integrate([&](std::span<const double> x) {
      double t = 0.0;
      for (int i = 0; i < p; ++i) t += x[i] * eta[i];
      return f(t);
    });
    CHECK(zonal_integral(p, f) == doctest::Approx(sphere).epsilon(1e-9));
  }
  CHECK_THROWS_AS(zonal_integral(3, [](double t) { return 1.0 / (t - t); }), EvaluationError);
}

TEST_CASE("quadrature serialization") {
  const SphereRule rule = sphere_quadrature(2, 1);
  const std::string csv = to_csv(rule);
  CHECK(csv.rfind("x1,x2,weight\n", 0) == 0);
  const auto j = to_json(rule);
  CHECK(j["p"] == 2);
  CHECK(j["exact_degree"] == rule.exact_degree());
  CHECK(j["nodes"].size() == rule.size());
  CHECK(j["weights"].size() == rule.size());
}
