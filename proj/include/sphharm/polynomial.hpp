// Sparse multivariate polynomials keyed by exponent multi-index.
//
// Polynomial<Rational> carries the exact algebra (Laplacian, Euler operator,
// harmonicity as an exact decision). Polynomial<double> holds everything that
// passed through an irrational operation: rotations, sphere normalization.
#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphharm/rational.hpp"

namespace sphharm {

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& alpha) {
  return std::accumulate(alpha.begin(), alpha.end(), 0);
}

template <class Coeff>
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Coeff>;

  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::domain_error("Polynomial: need at least one variable");
  }

  static Polynomial constant(int nvars, const Coeff& c) {
    Polynomial q(nvars);
    q.add_term(MultiIndex(nvars, 0), c);
    return q;
  }
  static Polynomial monomial(const MultiIndex& alpha, const Coeff& c = Coeff(1)) {
    Polynomial q(static_cast<int>(alpha.size()));
    q.add_term(alpha, c);
    return q;
  }
  /// x_{i+1} (zero-based index i).
  static Polynomial variable(int nvars, int i) {
    MultiIndex a(nvars, 0);
    a.at(i) = 1;
    return monomial(a);
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Max total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [a, c] : terms_) d = std::max(d, total_degree(a));
    return d;
  }

  Coeff coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const MultiIndex& alpha, const Coeff& c) {
    if (static_cast<int>(alpha.size()) != nvars_)
      throw std::domain_error("Polynomial: multi-index length does not match nvars");
    if (c == Coeff(0)) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Coeff(0)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_same(o);
    for (const auto& [a, c] : o.terms_) add_term(a, Coeff(-c));
    return *this;
  }
  Polynomial& operator*=(const Coeff& s) {
    if (s == Coeff(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
  friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    Polynomial r(a.nvars_);
    MultiIndex sum(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) sum[i] = ea[i] + eb[i];
        r.add_term(sum, Coeff(ca * cb));
      }
    }
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Direct sum of c_alpha x^alpha in multi-index order.
  double evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_)
      throw std::domain_error("Polynomial::evaluate: dimension mismatch");
    const int d = std::max(degree(), 0);
    std::vector<double> pw(static_cast<std::size_t>(nvars_) * (d + 1));
    for (int i = 0; i < nvars_; ++i) {
      double* row = pw.data() + static_cast<std::size_t>(i) * (d + 1);
      row[0] = 1.0;
      for (int k = 1; k <= d; ++k) row[k] = row[k - 1] * x[i];
    }
    double s = 0.0;
    for (const auto& [a, c] : terms_) {
      double m = to_double(c);
      for (int i = 0; i < nvars_; ++i)
        if (a[i] != 0) m *= pw[static_cast<std::size_t>(i) * (d + 1) + a[i]];
      s += m;
    }
    return s;
  }

  double max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [a, c] : terms_) m = std::max(m, std::abs(to_double(c)));
    return m;
  }

 private:
  void check_same(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::domain_error("Polynomial: nvars mismatch");
  }

  int nvars_;
  Terms terms_;
};

using ExactPolynomial = Polynomial<Rational>;
using RealPolynomial = Polynomial<double>;

RealPolynomial to_real(const ExactPolynomial& q);

template <class Coeff>
Polynomial<Coeff> partial_derivative(const Polynomial<Coeff>& q, int i) {
  Polynomial<Coeff> r(q.nvars());
  for (const auto& [a, c] : q.terms()) {
    if (a[i] == 0) continue;
    MultiIndex b = a;
    b[i] -= 1;
    r.add_term(b, Coeff(c * a[i]));
  }
  return r;
}

/// Sum of second partials; exact for rational coefficients.
template <class Coeff>
Polynomial<Coeff> laplacian(const Polynomial<Coeff>& q) {
  Polynomial<Coeff> r(q.nvars());
  for (const auto& [a, c] : q.terms()) {
    for (int i = 0; i < q.nvars(); ++i) {
      if (a[i] < 2) continue;
      MultiIndex b = a;
      b[i] -= 2;
      r.add_term(b, Coeff(c * (a[i] * (a[i] - 1))));
    }
  }
  return r;
}

/// sum_i x_i dq/dx_i. Scales each term by its total degree.
template <class Coeff>
Polynomial<Coeff> euler_apply(const Polynomial<Coeff>& q) {
  Polynomial<Coeff> r(q.nvars());
  for (const auto& [a, c] : q.terms()) r.add_term(a, Coeff(c * total_degree(a)));
  return r;
}

/// Degree if every term has the same total degree. The zero polynomial reports 0.
template <class Coeff>
std::optional<int> is_homogeneous(const Polynomial<Coeff>& q) {
  if (q.is_zero()) return 0;
  const int n = total_degree(q.terms().begin()->first);
  for (const auto& [a, c] : q.terms())
    if (total_degree(a) != n) return std::nullopt;
  return n;
}

inline bool is_harmonic(const ExactPolynomial& q) { return laplacian(q).is_zero(); }

/// p x p orthogonal matrix, validated on construction (R^t R = I to 1e-12).
class RotationMatrix {
 public:
  RotationMatrix(int p, std::vector<double> row_major);

  int dimension() const { return p_; }
  double operator()(int i, int j) const { return m_[static_cast<std::size_t>(i) * p_ + j]; }
  std::vector<double> apply(std::span<const double> x) const;

  static RotationMatrix identity(int p);
  /// Plane rotation by angle in the (i, j) coordinate plane.
  static RotationMatrix plane(int p, int i, int j, double angle);
  /// Orthonormalized seeded Gaussian matrix.
  static RotationMatrix random(int p, unsigned long long seed);

 private:
  int p_;
  std::vector<double> m_;
};

/// q(Rx) expanded in monomials. Exact input, floating output.
RealPolynomial rotate(const ExactPolynomial& q, const RotationMatrix& r);
RealPolynomial rotate(const RealPolynomial& q, const RotationMatrix& r);

/// "3/2*x1^2 - x2*x3 + 1"
std::string to_string(const ExactPolynomial& q);
std::string to_string(const RealPolynomial& q);

/// {nvars, terms: [{alpha, num, den}]}; num/den are integers when they fit in
/// 64 bits and decimal strings otherwise. Both forms are accepted on input.
nlohmann::json to_json(const ExactPolynomial& q);
ExactPolynomial polynomial_from_json(const nlohmann::json& j);

/// All exponent vectors of length nvars and total degree n, lexicographically ascending.
std::vector<MultiIndex> monomials_of_degree(int nvars, int n);

/// (x_1^2 + ... + x_p^2)^k
ExactPolynomial radius_power(int p, int k);

}  // namespace sphharm
