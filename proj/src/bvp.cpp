#include "sphharm/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sphharm/geometry.hpp"
#include "sphharm/legendre.hpp"

namespace sphharm {

namespace {

double norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

void check_point(int p, std::span<const double> x, const char* what) {
  if (static_cast<int>(x.size()) != p) throw std::domain_error(std::string(what) + ": dimension mismatch");
}

// Polar Gauss nodes needed to resolve the Poisson kernel at radius r: the
// kernel's pole in t sits at (1+r^2)/(2r), so the error decays like r^{2m}.
int poisson_polar_nodes(double r, int degree) {
  int m = degree / 2 + 1;
  if (r > 0.0) m += static_cast<int>(std::ceil(std::log(1e-17) / (2.0 * std::log(r))));
  return std::min(m + 8, 4000);
}

}  // namespace

BoundaryData BoundaryData::polynomial(ExactPolynomial f) {
  const int p = f.nvars();
  return BoundaryData(p, std::move(f), nullptr);
}

BoundaryData BoundaryData::callable(int p, Callable f) {
  if (p < 2) throw std::domain_error("BoundaryData: p must be at least 2");
  if (!f) throw std::invalid_argument("BoundaryData: empty callable");
  return BoundaryData(p, std::nullopt, std::move(f));
}

double BoundaryData::operator()(std::span<const double> xi) const {
  const double v = poly_ ? poly_->evaluate(xi) : fn_(xi);
  if (!std::isfinite(v)) throw EvaluationError("boundary data is not finite at a quadrature node");
  return v;
}

std::shared_ptr<const HarmonicBasis> cached_basis(int p, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const HarmonicBasis>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
  }
  auto basis = std::make_shared<const HarmonicBasis>(p, n);
  std::lock_guard lock(mu);
  return cache.emplace(std::make_pair(p, n), basis).first->second;
}

double BvpSolution::coefficient_norm_sq() const {
  double s = 0.0;
  for (const auto& row : coefficients)
    for (double c : row) s += c * c;
  return s;
}

namespace {

struct Projection {
  std::vector<std::vector<double>> coefficients;
  double norm_sq;
};

Projection project_with(const BoundaryData& f, const std::vector<std::shared_ptr<const HarmonicBasis>>& bases,
                        int degree) {
  const int p = f.dimension();
  const SphereRule rule = sphere_quadrature(p, degree);
  const std::size_t M = rule.size();
  std::vector<double> fw(M), terms(M);
  for (std::size_t i = 0; i < M; ++i) {
    fw[i] = f(rule.node(i)) * rule.weights()[i];
    terms[i] = fw[i] * f(rule.node(i));
  }
  Projection out;
  out.norm_sq = pairwise_sum(terms);
  for (const auto& basis : bases) {
    std::vector<double> row;
    for (const auto& y : basis->members()) {
      for (std::size_t i = 0; i < M; ++i) terms[i] = fw[i] * y.evaluate(rule.node(i));
      row.push_back(pairwise_sum(terms));
    }
    out.coefficients.push_back(std::move(row));
  }
  return out;
}

}  // namespace

BvpSolution project_boundary(const BoundaryData& f, int n_max, std::optional<int> quad_degree) {
  if (n_max < 0) throw std::domain_error("project_boundary: n_max must be nonnegative");
  const int p = f.dimension();
  int degree;
  if (f.is_polynomial()) {
    const int needed = n_max + f.degree();
    degree = quad_degree.value_or(needed);
    if (degree < needed)
      throw std::invalid_argument("project_boundary: quadrature degree " + std::to_string(degree) +
                                  " is below n_max + deg f = " + std::to_string(needed));
  } else {
    degree = quad_degree.value_or(kDefaultCallableQuadDegree);
    if (degree < 2) throw std::invalid_argument("project_boundary: quadrature degree must be at least 2");
  }

  BvpSolution sol;
  sol.p = p;
  sol.n_max = n_max;
  sol.quadrature_degree = degree;
  for (int n = 0; n <= n_max; ++n) sol.bases.push_back(cached_basis(p, n));
  Projection main = project_with(f, sol.bases, degree);
  sol.coefficients = std::move(main.coefficients);
  sol.boundary_norm_sq = main.norm_sq;
  if (!f.is_polynomial()) {
    const Projection coarse = project_with(f, sol.bases, degree - 2);
    for (std::size_t n = 0; n < coarse.coefficients.size(); ++n)
      for (std::size_t j = 0; j < coarse.coefficients[n].size(); ++j)
        sol.quadrature_error =
            std::max(sol.quadrature_error, std::abs(coarse.coefficients[n][j] - sol.coefficients[n][j]));
  }
  return sol;
}

double series_eval(const BvpSolution& sol, std::span<const double> x) {
  check_point(sol.p, x, "series_eval");
  if (norm(x) > 1.0) throw std::domain_error("series_eval: point lies outside the unit ball");
  // members are homogeneous, so Y(x) = |x|^n Y(x/|x|) without dividing by |x|
  double s = 0.0;
  for (std::size_t n = 0; n < sol.coefficients.size(); ++n) {
    const auto& members = sol.bases[n]->members();
    for (std::size_t j = 0; j < members.size(); ++j) s += sol.coefficients[n][j] * members[j].evaluate(x);
  }
  return s;
}

RealPolynomial series_polynomial(const BvpSolution& sol) {
  RealPolynomial out(sol.p);
  for (std::size_t n = 0; n < sol.coefficients.size(); ++n) {
    const auto& members = sol.bases[n]->members();
    for (std::size_t j = 0; j < members.size(); ++j) out += members[j] * sol.coefficients[n][j];
  }
  return out;
}

double green_function(int p, std::span<const double> x, std::span<const double> x0) {
  if (p < 3) throw std::domain_error("green_function: only p >= 3 is supported");
  check_point(p, x, "green_function");
  check_point(p, x0, "green_function");
  const double rx = norm(x), r0 = norm(x0);
  if (rx > 1.0 + 1e-12) throw std::domain_error("green_function: x lies outside the unit ball");
  if (r0 >= 1.0) throw std::domain_error("green_function: x0 must lie inside the unit ball");
  double rho_sq = 0.0;
  for (int i = 0; i < p; ++i) rho_sq += (x[i] - x0[i]) * (x[i] - x0[i]);
  if (rho_sq == 0.0) throw std::domain_error("green_function: singular at x = x0");
  const double e = 2.0 - p;
  const double omega = solid_angle(p).value();
  const double rho = std::sqrt(rho_sq);
  if (r0 == 0.0) return (std::pow(rx, e) - 1.0) / (e * omega);
  // |x0| * |x - x0/|x0|^2| = | |x0| x - x0/|x0| |
  double img_sq = 0.0;
  for (int i = 0; i < p; ++i) {
    const double d = r0 * x[i] - x0[i] / r0;
    img_sq += d * d;
  }
  return (std::pow(rho, e) - std::pow(std::sqrt(img_sq), e)) / (e * omega);
}

double poisson_eval(const BoundaryData& f, std::span<const double> x0, std::optional<int> quad_degree) {
  const int p = f.dimension();
  if (p < 3) throw std::domain_error("poisson_eval: only p >= 3 is supported");
  check_point(p, x0, "poisson_eval");
  const double r = norm(x0);
  if (r >= 1.0) throw std::domain_error("poisson_eval: x0 must lie inside the unit ball");
  const int degree = quad_degree.value_or(f.is_polynomial() ? f.degree() : kDefaultCallableQuadDegree);
  if (degree < 0) throw std::invalid_argument("poisson_eval: quadrature degree must be nonnegative");

  SphereRule rule = [&] {
    if (r == 0.0) return sphere_quadrature(p, degree);
    std::vector<double> pole(x0.begin(), x0.end());
    for (double& v : pole) v /= r;
    return pole_aligned_quadrature(p, pole, degree, poisson_polar_nodes(r, degree));
  }();

  const double one_minus = (1.0 - r) * (1.0 + r);
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const auto xi = rule.node(i);
    double d2 = 0.0;
    for (int k = 0; k < p; ++k) d2 += (xi[k] - x0[k]) * (xi[k] - x0[k]);
    terms[i] = rule.weights()[i] * f(xi) * one_minus / std::pow(d2, 0.5 * p);
  }
  return pairwise_sum(terms) / solid_angle(p).value();
}

double generating_function_consistency(int p, std::span<const double> t_grid, std::span<const double> r_grid, int N) {
  double worst = 0.0;
  for (double r : r_grid)
    for (double t : t_grid)
      worst = std::max(worst, std::abs(generating_function_partial(p, t, r, N) - generating_function_closed_form(p, t, r)));
  return worst;
}

}  // namespace sphharm
