// Legendre polynomials P_{n,p}(t) of dimension p: the degree-n zonal spherical
// harmonics of S^{p-1} normalized by P_n(1) = 1.
#pragma once

#include <functional>
#include <vector>

#include "sphharm/orthopoly.hpp"
#include "sphharm/rational.hpp"

namespace sphharm {

inline constexpr int kDefaultLegendreTableSize = 32;

/// Exact coefficients of P_{0,p}..P_{n_max,p}, built once by the recurrence
/// (n+p-2) P_{n+1} = (2n+p-2) t P_n - n P_{n-1}.
class LegendreTable {
 public:
  explicit LegendreTable(int p, int n_max = kDefaultLegendreTableSize);

  int dimension() const { return p_; }
  int n_max() const { return static_cast<int>(polys_.size()) - 1; }
  const Poly1D& coeffs(int n) const { return polys_.at(n); }
  double operator()(int n, double t) const { return to_real_cached_.at(n)(t); }

 private:
  int p_;
  std::vector<Poly1D> polys_;
  std::vector<RealPoly1D> to_real_cached_;
};

/// Forward three-term recurrence in floating point.
double legendre_eval(int p, int n, double t);
/// All of P_0(t)..P_n(t) from one recurrence sweep.
std::vector<double> legendre_eval_all(int p, int n, double t);

Poly1D legendre_coeffs(int p, int n);
/// (2n+p-3)_n / (2^n (n+(p-3)/2)_n) with falling factorials.
Rational legendre_leading_coefficient(int p, int n);

/// Exact expansion of the Rodrigues form
///   (-1)^n / (2^n (n+(p-3)/2)_n) (1-t^2)^{(3-p)/2} (d/dt)^n (1-t^2)^{n+(p-3)/2}
/// as sum_{a,k} c_{a,k} t^a (1-t^2)^{n-k}. The n-fold derivative is taken
/// symbolically, so no half-integer power is ever evaluated.
struct RodriguesTerms {
  struct Term {
    int t_power;
    int one_minus_t2_power;
    Rational coeff;
  };
  std::vector<Term> terms;

  double operator()(double t) const;
  Poly1D expand() const;
};
RodriguesTerms rodrigues_terms(int p, int n);
double rodrigues_eval(int p, int n, double t);

/// (1-t^2) P'' + (1-p) t P' + n(n+p-2) P at t.
double ode_residual(int p, int n, double t);

/// Omega_{p-1} / (N(p,n) Omega_{p-2}): squared norm of P_n under (1-t^2)^{(p-3)/2}.
PiMultiple legendre_norm_sq(int p, int n);

/// (d/dt)^j P_{n,p} divided by its value at t = 1; equals P_{n-j,p+2j}.
Poly1D dimension_shift(int p, int n, int j);

/// Omega_{p-3}/Omega_{p-2} * integral of (t + i s sqrt(1-t^2))^n (1-s^2)^{(p-4)/2} ds, p >= 3.
double integral_representation_eval(int p, int n, double t);

/// lambda_n = Omega_{p-2} * integral of f(t) P_n(t) (1-t^2)^{(p-3)/2} dt.
double funk_hecke_coeff(int p, int n, const std::function<double(double)>& f, int nodes = 64);

/// sum_{n<=N} r^n N(p,n) P_n(t)
double generating_function_partial(int p, double t, double r, int N);
/// (1 - r^2) / (1 - 2rt + r^2)^{p/2}
double generating_function_closed_form(int p, double t, double r);

}  // namespace sphharm
