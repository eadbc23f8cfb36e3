#include "sphharm/orthopoly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <type_traits>

namespace sphharm {

RealPoly1D to_real(const Poly1D& q) {
  std::vector<double> c;
  c.reserve(q.coefficients().size());
  for (const auto& x : q.coefficients()) c.push_back(to_double(x));
  return RealPoly1D(std::move(c));
}

Poly1D poly_x() { return Poly1D::monomial(1); }

Weight::Weight(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ <= -1 || beta_ <= -1) throw std::domain_error("Weight: exponents must exceed -1");
}

Weight Weight::ultraspherical(int p) {
  if (p < 2) throw std::domain_error("Weight::ultraspherical: p must be at least 2");
  Rational e(p - 3, 2);
  e.canonicalize();
  return {e, e};
}

double Weight::operator()(double x) const {
  return std::pow(1.0 - x, to_double(alpha_)) * std::pow(1.0 + x, to_double(beta_));
}

double Weight::mass() const {
  const double a = to_double(alpha_), b = to_double(beta_);
  return std::exp2(a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) / std::tgamma(a + b + 2.0);
}

Rational normalized_moment(const Weight& w, int k) {
  // x = 2u - 1 turns the integral into a sum of Beta functions whose ratios
  // to B(beta+1, alpha+1) are (beta+1)_j / (alpha+beta+2)_j.
  Rational s(0);
  Rational ratio(1);
  const Rational b1 = w.beta() + 1;
  const Rational ab2 = w.alpha() + w.beta() + 2;
  for (int j = 0; j <= k; ++j) {
    if (j > 0) ratio *= (b1 + (j - 1)) / (ab2 + (j - 1));
    Rational term(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j)));
    mpq_mul_2exp(term.get_mpq_t(), term.get_mpq_t(), static_cast<unsigned long>(j));
    term *= ratio;
    if ((k - j) % 2) s -= term;
    else s += term;
  }
  return s;
}

Rational normalized_inner_product(const Poly1D& f, const Poly1D& g, const Weight& w) {
  if (f.is_zero() || g.is_zero()) return Rational(0);
  const int top = f.degree() + g.degree();
  std::vector<Rational> mom(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) mom[k] = normalized_moment(w, k);
  Rational s(0);
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coefficient(i) == 0) continue;
    for (int j = 0; j <= g.degree(); ++j) s += f.coefficients()[i] * g.coefficients()[j] * mom[i + j];
  }
  return s;
}

namespace {

// Monic Jacobi recurrence p_{k+1} = (x - a_k) p_k - b_k p_{k-1}, closed form.
Rational jacobi_a(const Weight& w, int k) {
  const Rational& al = w.alpha();
  const Rational& be = w.beta();
  if (al == be) return Rational(0);
  const Rational s = al + be;
  if (k == 0) return Rational((be - al) / (s + 2));
  return Rational((be * be - al * al) / ((2 * k + s) * (2 * k + s + 2)));
}

Rational jacobi_b(const Weight& w, int k) {
  const Rational& al = w.alpha();
  const Rational& be = w.beta();
  const Rational s = al + be;
  if (k == 1) {
    Rational d = (2 + s) * (2 + s) * (3 + s);
    return Rational(4 * (1 + al) * (1 + be) / d);
  }
  const Rational t = 2 * k + s;
  return Rational(4 * k * (k + al) * (k + be) * (k + s) / (t * t * (t + 1) * (t - 1)));
}

}  // namespace

IntervalRule gauss_rule(const Weight& w, int m) {
  if (m < 1) throw std::domain_error("gauss_rule: need at least one node");
  std::vector<double> a(m), sqrt_b(m);  // sqrt_b[k] = sqrt(b_k), k >= 1
  for (int k = 0; k < m; ++k) {
    a[k] = to_double(jacobi_a(w, k));
    sqrt_b[k] = k == 0 ? 0.0 : std::sqrt(to_double(jacobi_b(w, k)));
  }
  std::vector<double> nodes(m);
  if (m == 1) {
    nodes[0] = a[0];
  } else {
    Eigen::VectorXd diag(m), sub(m - 1);
    for (int k = 0; k < m; ++k) diag(k) = a[k];
    for (int k = 1; k < m; ++k) sub(k - 1) = sqrt_b[k];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    for (int k = 0; k < m; ++k) nodes[k] = es.eigenvalues()(k);
  }

  const double mass = w.mass();
  const double sqrt_b_m = std::sqrt(to_double(jacobi_b(w, m)));
  // Orthonormal recurrence values q_0..q_{m-1} at x, and q_m with derivative.
  auto orthonormal = [&](double x, std::vector<double>* q, double* qm, double* dqm) {
    double prev = 0.0, cur = 1.0 / std::sqrt(mass);
    double dprev = 0.0, dcur = 0.0;
    if (q) (*q)[0] = cur;
    for (int k = 0; k < m; ++k) {
      const double nb = k + 1 < m ? sqrt_b[k + 1] : sqrt_b_m;
      const double next = ((x - a[k]) * cur - sqrt_b[k] * prev) / nb;
      const double dnext = (cur + (x - a[k]) * dcur - sqrt_b[k] * dprev) / nb;
      prev = cur;
      cur = next;
      dprev = dcur;
      dcur = dnext;
      if (q && k + 1 < m) (*q)[k + 1] = cur;
    }
    if (qm) *qm = cur;
    if (dqm) *dqm = dcur;
  };

  for (double& x : nodes) {
    for (int it = 0; it < 4; ++it) {
      double qm = 0.0, dqm = 0.0;
      orthonormal(x, nullptr, &qm, &dqm);
      if (dqm == 0.0) break;
      const double dx = qm / dqm;
      x -= dx;
      if (std::abs(dx) <= 1e-17) break;
    }
  }
  std::sort(nodes.begin(), nodes.end());
  if (w.symmetric()) {
    for (int i = 0; i < m / 2; ++i) {
      const double v = 0.5 * (nodes[m - 1 - i] - nodes[i]);
      nodes[i] = -v;
      nodes[m - 1 - i] = v;
    }
    if (m % 2) nodes[m / 2] = 0.0;
  }

  IntervalRule rule;
  rule.nodes = nodes;
  rule.weights.resize(m);
  rule.exact_degree = 2 * m - 1;
  std::vector<double> q(m);
  for (int i = 0; i < m; ++i) {
    orthonormal(nodes[i], &q, nullptr, nullptr);
    double s = 0.0;
    for (double v : q) s += v * v;
    rule.weights[i] = 1.0 / s;
  }
  if (w.symmetric()) {
    for (int i = 0; i < m / 2; ++i) {
      const double v = 0.5 * (rule.weights[i] + rule.weights[m - 1 - i]);
      rule.weights[i] = rule.weights[m - 1 - i] = v;
    }
  }
  return rule;
}

double inner_product(const Poly1D& f, const Poly1D& g, const Weight& w) {
  return inner_product(to_real(f), to_real(g), w);
}

double inner_product(const RealPoly1D& f, const RealPoly1D& g, const Weight& w) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  const int m = (f.degree() + g.degree()) / 2 + 1;
  return gauss_rule(w, m).integrate([&](double x) { return f(x) * g(x); });
}

double inner_product(const std::function<double(double)>& f, const std::function<double(double)>& g,
                     const Weight& w) {
  return gauss_rule(w, kCallableGaussNodes).integrate([&](double x) { return f(x) * g(x); });
}

std::vector<Poly1D> gram_schmidt(const Weight& w, int n_max) {
  if (n_max < 0) throw std::domain_error("gram_schmidt: n_max must be nonnegative");
  std::vector<Poly1D> phis;
  std::vector<Rational> norms;
  for (int n = 0; n <= n_max; ++n) {
    const Poly1D xn = Poly1D::monomial(n);
    Poly1D phi = xn;
    for (int k = 0; k < n; ++k) {
      Rational c = normalized_inner_product(xn, phis[k], w) / norms[k];
      phi -= phis[k] * c;
    }
    norms.push_back(normalized_inner_product(phi, phi, w));
    phis.push_back(std::move(phi));
  }
  return phis;
}

nlohmann::json to_json(const RecurrenceCoeffs& rc) {
  return {{"A", rc.A}, {"B", rc.B}, {"C", rc.C}};
}

RecurrenceCoeffs recurrence_coeffs(std::span<const Poly1D> phis, const Weight& w) {
  const int count = static_cast<int>(phis.size());
  std::vector<Rational> norms(count);
  for (int i = 0; i < count; ++i) {
    if (phis[i].degree() != i)
      throw std::invalid_argument("recurrence_coeffs: phi_" + std::to_string(i) + " has degree " +
                                  std::to_string(phis[i].degree()));
    norms[i] = normalized_inner_product(phis[i], phis[i], w);
    for (int j = 0; j < i; ++j) {
      if (normalized_inner_product(phis[i], phis[j], w) != 0)
        throw std::invalid_argument("recurrence_coeffs: <phi_" + std::to_string(i) + ", phi_" +
                                    std::to_string(j) + "> is nonzero; family is not orthogonal");
    }
  }
  RecurrenceCoeffs rc;
  Rational prev_a(0);
  for (int n = 0; n + 1 < count; ++n) {
    const Rational kn = phis[n].leading();
    const Rational kn1 = phis[n + 1].leading();
    const Rational ln = phis[n].coefficient(n - 1);
    const Rational ln1 = phis[n + 1].coefficient(n);
    const Rational an = kn1 / kn;
    const Rational bn = an * (ln1 / kn1 - ln / kn);
    const Rational cn = n == 0 ? Rational(0) : Rational((an / prev_a) * (norms[n] / norms[n - 1]));
    Poly1D residual = phis[n + 1] - (poly_x() * an + Poly1D({bn})) * phis[n];
    if (n > 0) residual += phis[n - 1] * cn;
    if (!residual.is_zero())
      throw std::invalid_argument("recurrence_coeffs: three-term identity fails at n = " + std::to_string(n));
    rc.A.push_back(to_double(an));
    rc.B.push_back(to_double(bn));
    rc.C.push_back(to_double(cn));
    prev_a = an;
  }
  return rc;
}

Poly1D jacobi_rodrigues(int n, const Weight& w) {
  if (n < 0) throw std::domain_error("jacobi_rodrigues: n must be nonnegative");
  const Poly1D one_minus_x({Rational(1), Rational(-1)});
  const Poly1D one_plus_x({Rational(1), Rational(1)});
  std::vector<Poly1D> pow_minus{Poly1D({Rational(1)})}, pow_plus{Poly1D({Rational(1)})};
  for (int k = 1; k <= n; ++k) {
    pow_minus.push_back(pow_minus.back() * one_minus_x);
    pow_plus.push_back(pow_plus.back() * one_plus_x);
  }
  Poly1D psi;
  for (int k = 0; k <= n; ++k) {
    Rational c(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)));
    c *= falling_factorial(w.alpha() + n, k) * falling_factorial(w.beta() + n, n - k);
    if (k % 2) c = -c;
    psi += pow_minus[n - k] * pow_plus[k] * c;
  }
  return psi;
}

namespace {

// Monomial form by forward differences: B_n(x) = sum_j C(n,j) (Delta^j f)(0) x^j
// with step 1/n.
Poly1D bernstein_from_values(std::vector<Rational> d) {
  const int n = static_cast<int>(d.size()) - 1;
  std::vector<Rational> c(d.size());
  for (int j = 0; j <= n; ++j) {
    c[j] = d[0] * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)));
    for (int k = 0; k + j < n; ++k) d[k] = d[k + 1] - d[k];
  }
  return Poly1D(std::move(c));
}

}  // namespace

Poly1D bernstein(const std::function<Rational(const Rational&)>& f, int n) {
  if (n < 1) throw std::domain_error("bernstein: n must be at least 1");
  std::vector<Rational> values;
  for (int k = 0; k <= n; ++k) {
    Rational node(k, n);
    node.canonicalize();
    values.push_back(f(node));
  }
  return bernstein_from_values(std::move(values));
}

Poly1D bernstein(const std::function<double(double)>& f, int n) {
  if (n < 1) throw std::domain_error("bernstein: n must be at least 1");
  std::vector<Rational> values;
  for (int k = 0; k <= n; ++k) {
    const double v = f(static_cast<double>(k) / n);
    if (!std::isfinite(v)) throw std::domain_error("bernstein: f is not finite at a node");
    values.emplace_back(v);
  }
  return bernstein_from_values(std::move(values));
}

RealPoly1D best_approximation(const std::function<double(double)>& f, const Weight& w, int n) {
  if (n < 0) throw std::domain_error("best_approximation: n must be nonnegative");
  const IntervalRule rule = gauss_rule(w, kCallableGaussNodes);
  RealPoly1D approx;
  for (const Poly1D& phi_exact : gram_schmidt(w, n)) {
    const RealPoly1D phi = to_real(phi_exact);
    const double num = rule.integrate([&](double x) { return f(x) * phi(x); });
    const double den = rule.integrate([&](double x) { return phi(x) * phi(x); });
    approx += phi * (num / den);
  }
  return approx;
}

ParsevalReport parseval_report(const std::function<double(double)>& f, const Weight& w, int n_max) {
  const IntervalRule rule = gauss_rule(w, kCallableGaussNodes);
  ParsevalReport report;
  report.norm_sq = rule.integrate([&](double x) { return f(x) * f(x); });
  double running = 0.0;
  for (const Poly1D& phi_exact : gram_schmidt(w, n_max)) {
    const RealPoly1D phi = to_real(phi_exact);
    const double norm = std::sqrt(rule.integrate([&](double x) { return phi(x) * phi(x); }));
    const double c = rule.integrate([&](double x) { return f(x) * phi(x); }) / norm;
    running += c * c;
    report.partial_sums.push_back(running);
  }
  return report;
}

}  // namespace sphharm
