// Weighted orthogonal polynomials on [-1, 1] for Jacobi weights
// w(x) = (1-x)^alpha (1+x)^beta, alpha, beta > -1.
#pragma once

#include <functional>
#include <span>
#include <vector>

#include <json.hpp>

#include "sphharm/quadrature.hpp"
#include "sphharm/rational.hpp"

namespace sphharm {

/// Dense univariate polynomial, coefficient k multiplies x^k.
template <class Coeff>
class Polynomial1D {
 public:
  Polynomial1D() = default;
  explicit Polynomial1D(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial1D monomial(int k, const Coeff& c = Coeff(1)) {
    std::vector<Coeff> v(static_cast<std::size_t>(k) + 1, Coeff(0));
    v[k] = c;
    return Polynomial1D(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Coeff>& coefficients() const { return c_; }
  Coeff coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Coeff(0);
  }
  Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

  double operator()(double x) const {
    double s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + to_double(*it);
    return s;
  }
  Coeff evaluate(const Coeff& x) const {
    Coeff s(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = Coeff(s * x + *it);
    return s;
  }

  Polynomial1D derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Coeff(c_[k] * static_cast<long>(k));
    return Polynomial1D(std::move(d));
  }

  Polynomial1D& operator+=(const Polynomial1D& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Polynomial1D& operator-=(const Polynomial1D& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  Polynomial1D& operator*=(const Coeff& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  friend Polynomial1D operator+(Polynomial1D a, const Polynomial1D& b) { return a += b; }
  friend Polynomial1D operator-(Polynomial1D a, const Polynomial1D& b) { return a -= b; }
  friend Polynomial1D operator*(Polynomial1D a, const Coeff& s) { return a *= s; }
  friend Polynomial1D operator*(const Coeff& s, Polynomial1D a) { return a *= s; }
  friend Polynomial1D operator*(const Polynomial1D& a, const Polynomial1D& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial1D(std::move(r));
  }
  friend bool operator==(const Polynomial1D& a, const Polynomial1D& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using Poly1D = Polynomial1D<Rational>;
using RealPoly1D = Polynomial1D<double>;

RealPoly1D to_real(const Poly1D& q);
/// x (the identity polynomial).
Poly1D poly_x();

/// w(x) = (1-x)^alpha (1+x)^beta with rational exponents > -1.
class Weight {
 public:
  Weight(Rational alpha, Rational beta);
  /// (1-t^2)^((p-3)/2), the Legendre weight for dimension p >= 2.
  static Weight ultraspherical(int p);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  bool symmetric() const { return alpha_ == beta_; }
  double operator()(double x) const;
  /// Total mass integral of w over [-1, 1].
  double mass() const;

 private:
  Rational alpha_, beta_;
};

/// Integral of x^k w / integral of w; rational for rational alpha, beta.
Rational normalized_moment(const Weight& w, int k);
/// <f, g>_w / mass(w), exact.
Rational normalized_inner_product(const Poly1D& f, const Poly1D& g, const Weight& w);

/// Gauss rule with m nodes, exact for polynomials of degree <= 2m-1 against w.
IntervalRule gauss_rule(const Weight& w, int m);

/// <f, g>_w via the smallest Gauss rule exact for deg f + deg g.
double inner_product(const Poly1D& f, const Poly1D& g, const Weight& w);
double inner_product(const RealPoly1D& f, const RealPoly1D& g, const Weight& w);
/// <f, g>_w for general callables with a fixed 128-node rule.
double inner_product(const std::function<double(double)>& f, const std::function<double(double)>& g,
                     const Weight& w);
inline constexpr int kCallableGaussNodes = 128;

/// Monic orthogonal polynomials phi_0..phi_{n_max}, exact.
std::vector<Poly1D> gram_schmidt(const Weight& w, int n_max);

/// phi_{n+1} = (A_n x + B_n) phi_n - C_n phi_{n-1}, n = 0..size-2, C_0 = 0.
struct RecurrenceCoeffs {
  std::vector<double> A, B, C;
};
nlohmann::json to_json(const RecurrenceCoeffs& rc);

/// Extracts A_n, B_n, C_n from the leading coefficients and norms of an
/// orthogonal family. Throws std::invalid_argument if the family is not
/// orthogonal under w or fails the recurrence.
RecurrenceCoeffs recurrence_coeffs(std::span<const Poly1D> phis, const Weight& w);

/// (1/w) (d/dx)^n [w (1-x^2)^n], expanded by the Leibniz rule.
Poly1D jacobi_rodrigues(int n, const Weight& w);

/// Bernstein polynomial of f on [0, 1] in the monomial basis.
Poly1D bernstein(const std::function<Rational(const Rational&)>& f, int n);
/// Same, with the double samples f(k/n) taken as exact rationals.
Poly1D bernstein(const std::function<double(double)>& f, int n);

/// L2_w-best polynomial of degree <= n: sum a_k phi_k, a_k = <f,phi_k>/|phi_k|^2.
RealPoly1D best_approximation(const std::function<double(double)>& f, const Weight& w, int n);

struct ParsevalReport {
  /// partial_sums[n] = sum_{k<=n} <f, phihat_k>^2
  std::vector<double> partial_sums;
  double norm_sq = 0.0;
};
ParsevalReport parseval_report(const std::function<double(double)>& f, const Weight& w, int n_max);

}  // namespace sphharm
