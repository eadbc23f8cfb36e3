// Registered identity checks for `sphharm verify`.
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "cli.hpp"
#include "sphharm/bvp.hpp"
#include "sphharm/geometry.hpp"
#include "sphharm/harmonic.hpp"
#include "sphharm/legendre.hpp"

namespace sphharm::cli {

namespace {

struct Range {
  int lo, hi;
};

struct Check {
  Range p, n;
  double tol;
  std::function<double(Range p, Range n, const VerifyOptions&)> residual;
};

std::vector<double> random_unit(int p, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(p);
  double s = 0.0;
  for (double& c : v) {
    c = g(rng);
    s += c * c;
  }
  s = std::sqrt(s);
  for (double& c : v) c /= s;
  return v;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> t_grid(int points) {
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = -1.0 + 2.0 * i / (points - 1);
  return t;
}

double orthogonality(Range pr, Range nr, const VerifyOptions&) {
  double worst = 0.0;
  for (int p = pr.lo; p <= pr.hi; ++p) {
    const Weight w = Weight::ultraspherical(p);
    const LegendreTable table(p, nr.hi);
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (int m = 0; m <= n; ++m) {
        const double ip = inner_product(table.coeffs(n), table.coeffs(m), w);
        if (m != n) {
          worst = std::max(worst, std::abs(ip));
        } else {
          const double expect = legendre_norm_sq(p, n).value();
          worst = std::max(worst, std::abs(ip - expect) / expect);
        }
      }
    }
  }
  return worst;
}

double rodrigues(Range pr, Range nr, const VerifyOptions& opt) {
  double worst = 0.0;
  const auto ts = t_grid(std::max(opt.samples, 2));
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const RodriguesTerms rt = rodrigues_terms(p, n);
      for (double t : ts) {
        const double rec = legendre_eval(p, n, t);
        worst = std::max(worst, std::abs(rec - rt(t)));
        if (p >= 3) worst = std::max(worst, std::abs(rec - integral_representation_eval(p, n, t)));
      }
    }
  return worst;
}

double ode(Range pr, Range nr, const VerifyOptions& opt) {
  double worst = 0.0;
  const auto ts = t_grid(std::max(opt.samples, 2));
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int n = nr.lo; n <= nr.hi; ++n)
      for (double t : ts) worst = std::max(worst, std::abs(ode_residual(p, n, t)) / (1.0 + n * n));
  return worst;
}

double addition(Range pr, Range nr, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  double worst = 0.0;
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const auto basis = cached_basis(p, n);
      for (int s = 0; s < opt.samples; ++s) {
        const auto xi = random_unit(p, rng);
        const auto eta = random_unit(p, rng);
        const double lhs = addition_theorem_eval(*basis, xi, eta);
        worst = std::max(worst, std::abs(lhs - legendre_eval(p, n, std::clamp(dot(xi, eta), -1.0, 1.0))));
      }
    }
  return worst;
}

double generating(Range pr, Range nr, const VerifyOptions&) {
  const auto ts = t_grid(11);
  const std::vector<double> rs{0.1, 0.3, 0.5};
  double worst = 0.0;
  for (int p = pr.lo; p <= pr.hi; ++p) worst = std::max(worst, generating_function_consistency(p, ts, rs, nr.hi));
  return worst;
}

double harmonicity(Range pr, Range nr, const VerifyOptions&) {
  double worst = 0.0;
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      for (const auto& h : harmonic_basis_raw(p, n))
        if (!is_harmonic(h)) worst = std::max(worst, to_real(laplacian(h)).max_abs_coefficient());
      const ExactPolynomial l = legendre_harmonic(p, n);
      if (!is_harmonic(l)) worst = std::max(worst, to_real(laplacian(l)).max_abs_coefficient());
    }
  return worst;
}

double counting(Range pr, Range nr, const VerifyOptions&) {
  double worst = 0.0;
  for (int p = pr.lo; p <= pr.hi; ++p)
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const BigInt expect = count_harmonic(p, n);
      const BigInt k_diff = count_homogeneous(p, n) - count_homogeneous(p, n - 2);
      const auto basis = cached_basis(p, n);
      const BigInt rank = static_cast<unsigned long>(exact_rank(basis->gram_exact()));
      const BigInt d1 = abs(expect - k_diff), d2 = abs(expect - rank);
      worst = std::max({worst, d1.get_d(), d2.get_d()});
    }
  return worst;
}

// f(t) = t^6 - 2 t^3 + t/2 + 1, eta = e_1
double funk_hecke(Range pr, Range nr, const VerifyOptions&) {
  const auto kernel = [](double t) { return std::pow(t, 6) - 2.0 * t * t * t + 0.5 * t + 1.0; };
  double worst = 0.0;
  for (int p = pr.lo; p <= pr.hi; ++p) {
    std::vector<double> eta(p, 0.0);
    eta[0] = 1.0;
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const SphereRule rule = sphere_quadrature(p, 2 * n + 6);
      const double lambda = funk_hecke_coeff(p, n, kernel);
      const auto basis = cached_basis(p, n);
      for (std::size_t j = 0; j < basis->size(); ++j) {
        const double lhs =
            rule.integrate([&](std::span<const double> xi) { return kernel(xi[0]) * basis->evaluate(j, xi); });
        worst = std::max(worst, std::abs(lhs - lambda * basis->evaluate(j, eta)));
      }
    }
  }
  return worst;
}

// series vs Poisson integral for x1^a x2^b + x_p boundary data
double bvp(Range pr, Range nr, const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> radius(0.0, 0.8);
  double worst = 0.0;
  for (int p = std::max(pr.lo, 3); p <= pr.hi; ++p)
    for (int d = std::max(nr.lo, 0); d <= nr.hi; ++d) {
      ExactPolynomial f(p);
      MultiIndex a(p, 0);
      a[0] = d - d / 2;
      a[1] = d / 2;
      f.add_term(a, Rational(1));
      MultiIndex last(p, 0);
      last[p - 1] = 1;
      f.add_term(last, Rational(1, 2));
      const BoundaryData data = BoundaryData::polynomial(f);
      const BvpSolution sol = project_boundary(data, std::max(d, 1));
      for (int s = 0; s < std::min(opt.samples, 50); ++s) {
        auto x = random_unit(p, rng);
        const double r = radius(rng);
        for (double& c : x) c *= r;
        worst = std::max(worst, std::abs(series_eval(sol, x) - poisson_eval(data, x)));
      }
    }
  return worst;
}

const std::map<std::string, Check>& registry() {
  static const std::map<std::string, Check> checks{
      {"addition", {{3, 5}, {0, 6}, 1e-8, addition}},
      {"bvp", {{3, 5}, {0, 4}, 1e-6, bvp}},
      {"counting", {{2, 5}, {0, 6}, 0.5, counting}},
      {"funk-hecke", {{3, 5}, {0, 4}, 1e-7, funk_hecke}},
      {"generating-function", {{3, 5}, {60, 60}, 1e-8, generating}},
      {"harmonicity", {{2, 6}, {0, 8}, 1e-12, harmonicity}},
      {"ode", {{2, 7}, {0, 10}, 1e-10, ode}},
      {"orthogonality", {{2, 7}, {0, 10}, 1e-10, orthogonality}},
      {"rodrigues", {{2, 7}, {0, 10}, 1e-9, rodrigues}},
  };
  return checks;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& [name, c] : registry()) names.push_back(name);
  return names;
}

bool is_check(const std::string& name) { return registry().count(name) > 0; }

CheckResult run_check(const std::string& name, const VerifyOptions& opt) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown check: " + name);
  const Check& c = it->second;
  Range pr = c.p, nr = c.n;
  if (opt.p) pr = {*opt.p, *opt.p};
  if (opt.n) nr = {*opt.n, *opt.n};
  const double tol = opt.tol.value_or(c.tol);
  const double res = c.residual(pr, nr, opt);
  return {name, pr.lo, pr.hi, nr.lo, nr.hi, res, tol, res <= tol};
}

nlohmann::json to_json(const CheckResult& r) {
  return {{"check", r.check},
          {"p_range", {r.p_min, r.p_max}},
          {"n_range", {r.n_min, r.n_max}},
          {"max_residual", r.max_residual},
          {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

}  // namespace sphharm::cli
