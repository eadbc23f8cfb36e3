// Dirichlet problem for the Laplacian on the unit ball of R^p: harmonic series
// solution, Green's function by images, and the Poisson integral.
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "sphharm/harmonic.hpp"
#include "sphharm/polynomial.hpp"

namespace sphharm {

inline constexpr int kDefaultCallableQuadDegree = 40;

/// Boundary values on S^{p-1}: either the restriction of a polynomial or an
/// arbitrary callable.
class BoundaryData {
 public:
  using Callable = std::function<double(std::span<const double>)>;

  static BoundaryData polynomial(ExactPolynomial f);
  static BoundaryData callable(int p, Callable f);

  int dimension() const { return p_; }
  bool is_polynomial() const { return poly_.has_value(); }
  const ExactPolynomial& poly() const { return *poly_; }
  /// Total degree of the polynomial; -1 for callables.
  int degree() const { return poly_ ? std::max(poly_->degree(), 0) : -1; }

  /// Throws EvaluationError if the value is not finite.
  double operator()(std::span<const double> xi) const;

 private:
  BoundaryData(int p, std::optional<ExactPolynomial> poly, Callable fn)
      : p_(p), poly_(std::move(poly)), fn_(std::move(fn)) {}

  int p_;
  std::optional<ExactPolynomial> poly_;
  Callable fn_;
};

/// Bases Y_{n,j} for n = 0..n_max, built once per (p, n) and shared.
std::shared_ptr<const HarmonicBasis> cached_basis(int p, int n);

struct BvpSolution {
  int p = 0;
  int n_max = 0;
  /// coefficients[n][j] pairs with bases[n]->members()[j].
  std::vector<std::vector<double>> coefficients;
  std::vector<std::shared_ptr<const HarmonicBasis>> bases;
  int quadrature_degree = 0;
  /// Max coefficient change between quadrature degrees d and d-2 (callables only).
  double quadrature_error = 0.0;
  /// Integral of f^2 over the sphere, same quadrature.
  double boundary_norm_sq = 0.0;

  double coefficient_norm_sq() const;
};

/// c_{n,j} = integral of f Y_{n,j} over S^{p-1}. quad_degree defaults to
/// n_max + deg f for polynomials (smaller values are rejected with
/// std::invalid_argument) and to kDefaultCallableQuadDegree for callables.
BvpSolution project_boundary(const BoundaryData& f, int n_max, std::optional<int> quad_degree = std::nullopt);

/// sum |x|^n c_{n,j} Y_{n,j}(x/|x|), |x| <= 1.
double series_eval(const BvpSolution& sol, std::span<const double> x);
/// The series as one polynomial in x.
RealPolynomial series_polynomial(const BvpSolution& sol);

/// (rho^{2-p} - (|x0| rho')^{2-p}) / ((2-p) Omega_{p-1}) with rho' the distance
/// to the image point x0/|x0|^2; p >= 3.
double green_function(int p, std::span<const double> x, std::span<const double> x0);

/// (1/Omega) * integral of f(xi) (1-|x0|^2)/|xi-x0|^p over the sphere. The
/// quadrature's polar axis points at x0 and its polar node count follows the
/// kernel's decay rate; quad_degree sets exactness in the other directions and
/// defaults to deg f (polynomials) or kDefaultCallableQuadDegree. p >= 3.
double poisson_eval(const BoundaryData& f, std::span<const double> x0, std::optional<int> quad_degree = std::nullopt);

/// max over the grids of |generating_function_partial - closed form|.
double generating_function_consistency(int p, std::span<const double> t_grid, std::span<const double> r_grid, int N);

}  // namespace sphharm
