#include "sphharm/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sphharm/orthopoly.hpp"

namespace sphharm {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

void validate(const SphericalPoint& pt) {
  if (!(pt.r >= 0.0)) throw std::domain_error("SphericalPoint: r must be nonnegative");
  if (!(pt.phi >= 0.0 && pt.phi < kTwoPi)) throw std::domain_error("SphericalPoint: phi must lie in [0, 2pi)");
  for (double t : pt.thetas)
    if (!(t >= 0.0 && t <= std::numbers::pi))
      throw std::domain_error("SphericalPoint: theta must lie in [0, pi]");
}

PiMultiple solid_angle(int p) {
  if (p < 1) throw std::domain_error("solid_angle: p must be at least 1");
  return PiMultiple{Rational(2), p} / gamma_half(p);
}

std::vector<double> spherical_to_cartesian(const SphericalPoint& pt) {
  validate(pt);
  const int p = pt.dimension();
  std::vector<double> x(p);
  // walk outward from the phi plane: scale accumulates sin(t_k) for k above
  double scale = pt.r;
  for (int k = p - 2; k >= 1; --k) {
    const double t = pt.thetas[k - 1];
    x[k + 1] = scale * std::cos(t);
    scale *= std::sin(t);
  }
  x[0] = scale * std::cos(pt.phi);
  x[1] = scale * std::sin(pt.phi);
  return x;
}

SphericalPoint cartesian_to_spherical(std::span<const double> x) {
  const int p = static_cast<int>(x.size());
  if (p < 2) throw std::domain_error("cartesian_to_spherical: need p >= 2");
  // rho[k] = |(x_1, ..., x_k)|
  std::vector<double> rho(p + 1, 0.0);
  double acc = 0.0;
  for (int k = 1; k <= p; ++k) {
    acc += x[k - 1] * x[k - 1];
    rho[k] = std::sqrt(acc);
  }
  if (rho[p] == 0.0) throw std::domain_error("cartesian_to_spherical: zero vector has no direction");

  SphericalPoint pt;
  pt.r = rho[p];
  pt.thetas.assign(p - 2, 0.0);
  for (int k = 1; k <= p - 2; ++k) {
    const double along = x[k + 1];
    const double across = rho[k + 1];
    double t;
    if (across > 0.0) {
      t = std::atan2(across, along);
    } else if (along != 0.0) {
      t = along > 0.0 ? 0.0 : std::numbers::pi;
    } else {
      t = 0.0;
      for (int j = k + 2; j < p; ++j) {
        if (x[j] != 0.0) {
          t = x[j] > 0.0 ? 0.0 : std::numbers::pi;
          break;
        }
      }
    }
    pt.thetas[k - 1] = t;
  }
  if (rho[2] > 0.0) {
    double phi = std::atan2(x[1], x[0]);
    if (phi < 0.0) phi += kTwoPi;
    if (phi >= kTwoPi) phi = 0.0;
    pt.phi = phi;
  }
  return pt;
}

std::vector<double> line_element_coeffs(const SphericalPoint& pt) {
  validate(pt);
  const int p = pt.dimension();
  std::vector<double> g;
  g.reserve(p);
  g.push_back(1.0);
  double s = pt.r * pt.r;
  g.push_back(s);
  for (int k = p - 2; k >= 1; --k) {
    const double sn = std::sin(pt.thetas[k - 1]);
    s *= sn * sn;
    g.push_back(s);
  }
  return g;
}

Rational normalized_monomial_integral(const MultiIndex& alpha) {
  const int p = static_cast<int>(alpha.size());
  if (p < 1) throw std::domain_error("monomial integral: empty multi-index");
  int half_total = 0;
  Rational num(1);
  const Rational half(1, 2);
  for (int a : alpha) {
    if (a < 0) throw std::domain_error("monomial integral: negative exponent");
    if (a % 2) return Rational(0);
    num *= rising_factorial(half, a / 2);
    half_total += a / 2;
  }
  Rational hp(p, 2);
  hp.canonicalize();
  return Rational(num / rising_factorial(hp, half_total));
}

PiMultiple monomial_sphere_integral(const MultiIndex& alpha) {
  return normalized_monomial_integral(alpha) * solid_angle(static_cast<int>(alpha.size()));
}

namespace {

struct RawRule {
  std::vector<double> coords;
  std::vector<double> weights;
};

// theta_nodes[k-1] is the node count for t_k.
RawRule product_rule(int p, int phi_points, const std::vector<int>& theta_nodes) {
  RawRule cur;
  const double dphi = kTwoPi / phi_points;
  for (int j = 0; j < phi_points; ++j) {
    const double phi = dphi * j;
    cur.coords.push_back(std::cos(phi));
    cur.coords.push_back(std::sin(phi));
    cur.weights.push_back(dphi);
  }
  for (int k = 1; k <= p - 2; ++k) {
    Rational e(k - 1, 2);
    e.canonicalize();
    const IntervalRule g = gauss_rule(Weight(e, e), theta_nodes[k - 1]);
    const int dim = k + 1;  // current point length
    RawRule next;
    next.coords.reserve(cur.coords.size() / dim * (dim + 1) * g.size());
    for (std::size_t a = 0; a < g.size(); ++a) {
      const double t = g.nodes[a];
      const double s = std::sqrt((1.0 - t) * (1.0 + t));
      for (std::size_t i = 0; i < cur.weights.size(); ++i) {
        for (int d = 0; d < dim; ++d) next.coords.push_back(s * cur.coords[i * dim + d]);
        next.coords.push_back(t);
        next.weights.push_back(cur.weights[i] * g.weights[a]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

SphereRule sphere_quadrature(int p, int degree) {
  if (p < 2) throw std::domain_error("sphere_quadrature: p must be at least 2");
  if (degree < 0) throw std::domain_error("sphere_quadrature: degree must be nonnegative");
  const int m = degree / 2 + 1;
  RawRule r = product_rule(p, 2 * m, std::vector<int>(std::max(p - 2, 0), m));
  return SphereRule(p, std::move(r.coords), std::move(r.weights), 2 * m - 1);
}

SphereRule pole_aligned_quadrature(int p, std::span<const double> pole, int degree, int polar_nodes) {
  if (p < 2) throw std::domain_error("pole_aligned_quadrature: p must be at least 2");
  if (static_cast<int>(pole.size()) != p) throw std::domain_error("pole_aligned_quadrature: pole dimension");
  if (degree < 0 || polar_nodes < 1) throw std::domain_error("pole_aligned_quadrature: bad node counts");
  double nrm = 0.0;
  for (double v : pole) nrm += v * v;
  nrm = std::sqrt(nrm);
  if (std::abs(nrm - 1.0) > 1e-12) throw std::domain_error("pole_aligned_quadrature: pole must be a unit vector");

  const int m = degree / 2 + 1;
  RawRule r;
  int exact;
  int axis;  // coordinate that the rule treats as its polar axis
  if (p == 2) {
    const int points = std::max(2 * m, 2 * polar_nodes);
    r = product_rule(2, points, {});
    exact = 2 * m - 1;
    axis = 0;
  } else {
    std::vector<int> nodes(p - 2, m);
    nodes.back() = polar_nodes;
    r = product_rule(p, 2 * m, nodes);
    exact = std::min(2 * m - 1, 2 * polar_nodes - 1);
    axis = p - 1;
  }

  // Householder reflection sending e_axis to pole.
  std::vector<double> v(pole.begin(), pole.end());
  for (double& c : v) c = -c;
  v[axis] += 1.0;
  double vv = 0.0;
  for (double c : v) vv += c * c;
  if (vv > 1e-30) {
    const std::size_t n = r.weights.size();
    for (std::size_t i = 0; i < n; ++i) {
      double* x = r.coords.data() + i * p;
      double dot = 0.0;
      for (int d = 0; d < p; ++d) dot += v[d] * x[d];
      const double f = 2.0 * dot / vv;
      for (int d = 0; d < p; ++d) x[d] -= f * v[d];
    }
  }
  return SphereRule(p, std::move(r.coords), std::move(r.weights), exact);
}

double zonal_integral(int p, const std::function<double(double)>& f, int nodes) {
  if (p < 2) throw std::domain_error("zonal_integral: p must be at least 2");
  const IntervalRule rule = gauss_rule(Weight::ultraspherical(p), nodes);
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = f(rule.nodes[i]);
    if (!std::isfinite(v))
      throw EvaluationError("zonal_integral: integrand is not finite at t = " + format_double(rule.nodes[i]));
    terms[i] = rule.weights[i] * v;
  }
  return solid_angle(p - 1).value() * pairwise_sum(terms);
}

}  // namespace sphharm
