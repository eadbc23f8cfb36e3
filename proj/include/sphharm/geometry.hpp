// Spherical coordinates in R^p, solid angles, and quadrature on S^{p-1}.
//
// Coordinates follow the nested-projection convention:
//   x_1 = r sin(t_{p-2}) ... sin(t_1) cos(phi)
//   x_2 = r sin(t_{p-2}) ... sin(t_1) sin(phi)
//   x_k = r sin(t_{p-2}) ... sin(t_{k-1}) cos(t_{k-2}),   3 <= k <= p
// so x_p = r cos(t_{p-2}) and thetas[k-1] holds t_k.
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "sphharm/polynomial.hpp"
#include "sphharm/quadrature.hpp"
#include "sphharm/rational.hpp"

namespace sphharm {

struct SphericalPoint {
  double r = 0.0;
  double phi = 0.0;
  std::vector<double> thetas;  // t_1..t_{p-2}

  int dimension() const { return static_cast<int>(thetas.size()) + 2; }
};

/// Throws std::domain_error unless r >= 0, phi in [0, 2pi), thetas in [0, pi].
void validate(const SphericalPoint& pt);

/// Omega_{p-1} = 2 pi^{p/2} / Gamma(p/2), the measure of S^{p-1}.
PiMultiple solid_angle(int p);

std::vector<double> spherical_to_cartesian(const SphericalPoint& pt);
/// Inverse map. phi uses atan2. When the projection onto the leading
/// coordinates vanishes, phi is 0 and each undetermined theta is 0 or pi by the
/// sign of the first nonzero coordinate after it.
SphericalPoint cartesian_to_spherical(std::span<const double> x);

/// Diagonal metric (g_rr, g_{t_{p-2}}, ..., g_{t_1}, g_phiphi) of
/// ds^2 = dr^2 + r^2 dw^2.
std::vector<double> line_element_coeffs(const SphericalPoint& pt);

/// Integral of xi^alpha over S^{p-1} divided by Omega_{p-1}:
/// prod (1/2)_{a_i} / (p/2)_{|a|} with alpha = 2a, zero if any alpha_i is odd.
Rational normalized_monomial_integral(const MultiIndex& alpha);
/// Integral of xi^alpha over S^{p-1}, p = alpha.size().
PiMultiple monomial_sphere_integral(const MultiIndex& alpha);

/// Tensor product rule exact for all polynomials of total degree <= degree:
/// uniform in phi, Gauss-Jacobi in cos(t_k) with weight (1-t^2)^{(k-1)/2}.
SphereRule sphere_quadrature(int p, int degree);

/// Product rule whose polar axis is `pole` (unit vector): the pole-angle
/// direction gets `polar_nodes` Gauss nodes, the remaining directions are
/// exact to `degree`. For p == 2 the polar direction is phi itself and
/// `polar_nodes` sets the half-count of uniform points.
SphereRule pole_aligned_quadrature(int p, std::span<const double> pole, int degree, int polar_nodes);

/// Omega_{p-2} * integral of f(t) (1-t^2)^{(p-3)/2} over [-1, 1]: the integral
/// over S^{p-1} of any function of <xi, eta> alone. Throws EvaluationError on
/// non-finite f values.
double zonal_integral(int p, const std::function<double(double)>& f, int nodes = 64);

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sphharm
