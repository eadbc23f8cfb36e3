// Harmonic homogeneous polynomials and orthonormal spherical harmonic bases.
#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "sphharm/polynomial.hpp"
#include "sphharm/rational.hpp"

namespace sphharm {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// K(p, n) = C(p+n-1, n): homogeneous monomials of degree n in p variables.
/// Zero for n < 0.
BigInt count_homogeneous(int p, int n);
/// N(p, n) = (2n+p-2)/n * C(n+p-3, n-1) for n >= 1, and 1 for n = 0.
BigInt count_harmonic(int p, int n);

/// A linearly independent spanning set of the degree-n harmonic homogeneous
/// polynomials in p variables, built from monomial seeds in x_1..x_{p-1}:
/// H = sum_j x_p^j h_{n-j}, h_{n-j-2} = -Lap_{p-1} h_{n-j} / ((j+2)(j+1)).
/// Seeds of degree n come first, then seeds of degree n-1; each group in
/// ascending lexicographic multi-index order.
std::vector<ExactPolynomial> harmonic_basis_raw(int p, int n);

/// Integral of f g over S^{p-1} divided by Omega_{p-1}, exact.
Rational normalized_sphere_inner_product(const ExactPolynomial& f, const ExactPolynomial& g);

/// Rank over the rationals by fraction-exact Gaussian elimination.
std::size_t exact_rank(RationalMatrix m);

/// Orthonormal basis {Y_{n,j}} of degree-n spherical harmonics on S^{p-1}.
class HarmonicBasis {
 public:
  HarmonicBasis(int p, int n);

  int dimension() const { return p_; }
  int degree() const { return n_; }
  std::size_t size() const { return members_.size(); }

  const std::vector<ExactPolynomial>& raw() const { return raw_; }
  /// Exact Gram matrix of raw(), in units of Omega_{p-1}.
  const RationalMatrix& gram_exact() const { return gram_; }
  /// Unit lower triangular T with Y_i proportional to sum_j T_ij raw_j.
  const RationalMatrix& transform() const { return transform_; }
  /// Squared sphere norms of sum_j T_ij raw_j, in units of Omega_{p-1}.
  const std::vector<Rational>& pivots() const { return pivots_; }
  const std::vector<RealPolynomial>& members() const { return members_; }

  /// Y_{n,j}(x); homogeneous, so this is |x|^n Y_{n,j}(x/|x|) off the sphere.
  double evaluate(std::size_t j, std::span<const double> x) const { return members_.at(j).evaluate(x); }
  std::vector<double> evaluate_all(std::span<const double> x) const;

 private:
  int p_, n_;
  std::vector<ExactPolynomial> raw_;
  RationalMatrix gram_;
  RationalMatrix transform_;
  std::vector<Rational> pivots_;
  std::vector<RealPolynomial> members_;
};

/// Builds HarmonicBasis(p, n). The exact Gram matrix is factored as
/// L D L^t in rational arithmetic; only the final 1/sqrt(D_i Omega) is
/// floating point.
HarmonicBasis orthonormalize(int p, int n);

/// The unique harmonic homogeneous polynomial that is invariant under
/// rotations fixing e_1 and equals 1 at e_1:
/// L_n(x) = sum_k a_k x_1^k |x|^{n-k} with P_{n,p}(t) = sum_k a_k t^k.
ExactPolynomial legendre_harmonic(int p, int n);

/// (Omega_{p-1} / N(p,n)) sum_j Y_{n,j}(xi) Y_{n,j}(eta) for unit xi, eta.
double addition_theorem_eval(const HarmonicBasis& basis, std::span<const double> xi,
                             std::span<const double> eta);

/// {p, n, size, solid_angle, members: [{nvars, terms: [{alpha, coeff}]}],
///  gram: [["num/den", ...], ...] (units of solid_angle)}
nlohmann::json to_json(const HarmonicBasis& basis);

}  // namespace sphharm
