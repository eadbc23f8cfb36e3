#include "sphharm/polynomial.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace sphharm {

RealPolynomial to_real(const ExactPolynomial& q) {
  RealPolynomial r(q.nvars());
  for (const auto& [a, c] : q.terms()) r.add_term(a, to_double(c));
  return r;
}

RotationMatrix::RotationMatrix(int p, std::vector<double> row_major) : p_(p), m_(std::move(row_major)) {
  if (p < 1 || m_.size() != static_cast<std::size_t>(p) * p)
    throw std::domain_error("RotationMatrix: expected p*p entries");
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) {
      double s = 0.0;
      for (int k = 0; k < p; ++k) s += (*this)(k, i) * (*this)(k, j);
      if (std::abs(s - (i == j ? 1.0 : 0.0)) > 1e-12)
        throw std::domain_error("RotationMatrix: matrix is not orthogonal");
    }
  }
}

std::vector<double> RotationMatrix::apply(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != p_) throw std::domain_error("RotationMatrix::apply: dimension mismatch");
  std::vector<double> y(p_, 0.0);
  for (int i = 0; i < p_; ++i)
    for (int j = 0; j < p_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

RotationMatrix RotationMatrix::identity(int p) {
  std::vector<double> m(static_cast<std::size_t>(p) * p, 0.0);
  for (int i = 0; i < p; ++i) m[static_cast<std::size_t>(i) * p + i] = 1.0;
  return {p, std::move(m)};
}

RotationMatrix RotationMatrix::plane(int p, int i, int j, double angle) {
  if (i == j || i < 0 || j < 0 || i >= p || j >= p)
    throw std::domain_error("RotationMatrix::plane: invalid coordinate plane");
  std::vector<double> m(static_cast<std::size_t>(p) * p, 0.0);
  for (int k = 0; k < p; ++k) m[static_cast<std::size_t>(k) * p + k] = 1.0;
  const double c = std::cos(angle), s = std::sin(angle);
  m[static_cast<std::size_t>(i) * p + i] = c;
  m[static_cast<std::size_t>(j) * p + j] = c;
  m[static_cast<std::size_t>(i) * p + j] = -s;
  m[static_cast<std::size_t>(j) * p + i] = s;
  return {p, std::move(m)};
}

RotationMatrix RotationMatrix::random(int p, unsigned long long seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd a(p, p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) a(i, j) = normal(gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < p; ++j)
    if (r(j, j) < 0) q.col(j) *= -1.0;
  // one more Gram-Schmidt sweep to push R^t R - I to rounding level
  for (int j = 0; j < p; ++j) {
    for (int k = 0; k < j; ++k) q.col(j) -= q.col(k).dot(q.col(j)) * q.col(k);
    q.col(j).normalize();
  }
  std::vector<double> m(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) m[static_cast<std::size_t>(i) * p + j] = q(i, j);
  return {p, std::move(m)};
}

namespace {

template <class Coeff>
RealPolynomial rotate_impl(const Polynomial<Coeff>& q, const RotationMatrix& r) {
  const int p = q.nvars();
  if (r.dimension() != p) throw std::domain_error("rotate: dimension mismatch");
  const int d = std::max(q.degree(), 0);
  // powers[i][k] = (sum_j R_ij x_j)^k
  std::vector<std::vector<RealPolynomial>> powers(p);
  for (int i = 0; i < p; ++i) {
    RealPolynomial lin(p);
    for (int j = 0; j < p; ++j) {
      MultiIndex e(p, 0);
      e[j] = 1;
      lin.add_term(e, r(i, j));
    }
    powers[i].push_back(RealPolynomial::constant(p, 1.0));
    for (int k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * lin);
  }
  RealPolynomial out(p);
  for (const auto& [a, c] : q.terms()) {
    RealPolynomial t = RealPolynomial::constant(p, to_double(c));
    for (int i = 0; i < p; ++i)
      if (a[i] > 0) t = t * powers[i][a[i]];
    out += t;
  }
  return out;
}

template <class Coeff>
std::string render(const Polynomial<Coeff>& q, auto coeff_text) {
  if (q.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first reads naturally
  std::vector<std::pair<MultiIndex, Coeff>> terms(q.terms().begin(), q.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    return total_degree(x.first) > total_degree(y.first);
  });
  for (const auto& [a, c] : terms) {
    const bool negative = c < 0;
    Coeff mag = negative ? Coeff(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool is_const = total_degree(a) == 0;
    const bool unit = mag == Coeff(1);
    if (!unit || is_const) os << coeff_text(mag);
    bool need_star = !unit || is_const;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (need_star) os << '*';
      os << 'x' << (i + 1);
      if (a[i] > 1) os << '^' << a[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace

RealPolynomial rotate(const ExactPolynomial& q, const RotationMatrix& r) { return rotate_impl(q, r); }
RealPolynomial rotate(const RealPolynomial& q, const RotationMatrix& r) { return rotate_impl(q, r); }

std::string to_string(const ExactPolynomial& q) {
  return render(q, [](const Rational& c) {
    return c.get_den() == 1 ? c.get_num().get_str() : to_string(c);
  });
}

std::string to_string(const RealPolynomial& q) {
  return render(q, [](double c) { return format_double(c); });
}

namespace {

nlohmann::json bigint_json(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) return BigInt(j.get<std::string>(), 10);
  throw std::invalid_argument("polynomial JSON: num/den must be integers or decimal strings");
}

}  // namespace

nlohmann::json to_json(const ExactPolynomial& q) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [a, c] : q.terms())
    terms.push_back({{"alpha", a}, {"num", bigint_json(c.get_num())}, {"den", bigint_json(c.get_den())}});
  return {{"nvars", q.nvars()}, {"terms", terms}};
}

ExactPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON: expected {nvars, terms}");
  const int nvars = j.at("nvars").get<int>();
  ExactPolynomial q(nvars);
  for (const auto& t : j.at("terms")) {
    auto alpha = t.at("alpha").get<MultiIndex>();
    if (static_cast<int>(alpha.size()) != nvars)
      throw std::invalid_argument("polynomial JSON: alpha length does not match nvars");
    for (int e : alpha)
      if (e < 0) throw std::invalid_argument("polynomial JSON: negative exponent");
    BigInt num = bigint_from_json(t.at("num"));
    BigInt den = t.contains("den") ? bigint_from_json(t.at("den")) : BigInt(1);
    if (den == 0) throw std::invalid_argument("polynomial JSON: zero denominator");
    Rational c(num, den);
    c.canonicalize();
    q.add_term(alpha, c);
  }
  return q;
}

std::vector<MultiIndex> monomials_of_degree(int nvars, int n) {
  std::vector<MultiIndex> out;
  if (n < 0) return out;
  MultiIndex a(nvars, 0);
  // enumerate in lexicographic order: the first exponent is the most significant
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == nvars - 1) {
      a[i] = remaining;
      out.push_back(a);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      a[i] = e;
      self(self, i + 1, remaining - e);
    }
  };
  rec(rec, 0, n);
  return out;
}

ExactPolynomial radius_power(int p, int k) {
  ExactPolynomial r2(p);
  for (int i = 0; i < p; ++i) {
    MultiIndex e(p, 0);
    e[i] = 2;
    r2.add_term(e, Rational(1));
  }
  ExactPolynomial out = ExactPolynomial::constant(p, Rational(1));
  for (int i = 0; i < k; ++i) out = out * r2;
  return out;
}

}  // namespace sphharm
