#include "sphharm/harmonic.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "sphharm/geometry.hpp"
#include "sphharm/legendre.hpp"

namespace sphharm {

BigInt count_homogeneous(int p, int n) {
  if (p < 1) throw std::domain_error("count_homogeneous: p must be positive");
  if (n < 0) return 0;
  return binomial(static_cast<unsigned>(p + n - 1), static_cast<unsigned>(n));
}

BigInt count_harmonic(int p, int n) {
  if (p < 2) throw std::domain_error("count_harmonic: p must be at least 2");
  if (n < 0) return 0;
  if (n == 0) return 1;
  BigInt c = binomial(static_cast<unsigned>(n + p - 3), static_cast<unsigned>(n - 1));
  c *= 2 * n + p - 2;
  return BigInt(c / n);
}

namespace {

// Lifts q(x_1..x_{p-1}) to x_p^j q in p variables.
void add_lifted(ExactPolynomial& out, const ExactPolynomial& q, int j) {
  MultiIndex b(out.nvars());
  for (const auto& [a, c] : q.terms()) {
    std::copy(a.begin(), a.end(), b.begin());
    b.back() = j;
    out.add_term(b, c);
  }
}

ExactPolynomial harmonic_from_seed(int p, int n, const ExactPolynomial& seed, int seed_degree) {
  ExactPolynomial out(p);
  // h holds h_{n-j}; it starts at j = n - seed_degree.
  ExactPolynomial h = seed;
  for (int j = n - seed_degree; j <= n && !h.is_zero(); j += 2) {
    add_lifted(out, h, j);
    h = laplacian(h) * Rational(-1, (j + 2) * (j + 1));
  }
  return out;
}

// parity pattern of a term; every raw harmonic has a single pattern in
// x_1..x_{p-1}, so Gram entries across patterns vanish.
unsigned parity_key(const MultiIndex& a) {
  unsigned key = 0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) key |= static_cast<unsigned>(a[i] & 1) << i;
  return key;
}

class MomentCache {
 public:
  const Rational& operator()(const MultiIndex& alpha) {
    auto it = cache_.find(alpha);
    if (it == cache_.end()) it = cache_.emplace(alpha, normalized_monomial_integral(alpha)).first;
    return it->second;
  }

 private:
  std::map<MultiIndex, Rational> cache_;
};

Rational inner_product_cached(const ExactPolynomial& f, const ExactPolynomial& g, MomentCache& moments) {
  if (f.nvars() != g.nvars()) throw std::domain_error("sphere inner product: nvars mismatch");
  Rational s(0);
  MultiIndex sum(f.nvars());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      bool even = true;
      for (int i = 0; i < f.nvars() && even; ++i) {
        sum[i] = a[i] + b[i];
        even = (sum[i] % 2) == 0;
      }
      if (!even) continue;
      s += ca * cb * moments(sum);
    }
  }
  return s;
}

}  // namespace

std::vector<ExactPolynomial> harmonic_basis_raw(int p, int n) {
  if (p < 2) throw std::domain_error("harmonic_basis_raw: p must be at least 2");
  if (n < 0) throw std::domain_error("harmonic_basis_raw: degree must be nonnegative");
  std::vector<ExactPolynomial> out;
  for (int d : {n, n - 1}) {
    if (d < 0) continue;
    for (const MultiIndex& a : monomials_of_degree(p - 1, d))
      out.push_back(harmonic_from_seed(p, n, ExactPolynomial::monomial(a), d));
  }
  return out;
}

Rational normalized_sphere_inner_product(const ExactPolynomial& f, const ExactPolynomial& g) {
  MomentCache moments;
  return inner_product_cached(f, g, moments);
}

std::size_t exact_rank(RationalMatrix m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

HarmonicBasis::HarmonicBasis(int p, int n) : p_(p), n_(n), raw_(harmonic_basis_raw(p, n)) {
  const std::size_t N = raw_.size();
  std::vector<unsigned> key(N);
  for (std::size_t i = 0; i < N; ++i) key[i] = parity_key(raw_[i].terms().begin()->first);

  MomentCache moments;
  gram_.assign(N, std::vector<Rational>(N, Rational(0)));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (key[i] != key[j]) continue;
      gram_[i][j] = inner_product_cached(raw_[i], raw_[j], moments);
      gram_[j][i] = gram_[i][j];
    }
  }

  // G = L D L^t, exact.
  RationalMatrix L(N, std::vector<Rational>(N, Rational(0)));
  pivots_.assign(N, Rational(0));
  for (std::size_t i = 0; i < N; ++i) {
    L[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (key[i] != key[j]) continue;
      Rational s = gram_[i][j];
      for (std::size_t k = 0; k < j; ++k)
        if (L[i][k] != 0 && L[j][k] != 0) s -= L[i][k] * L[j][k] * pivots_[k];
      L[i][j] = s / pivots_[j];
    }
    Rational d = gram_[i][i];
    for (std::size_t k = 0; k < i; ++k)
      if (L[i][k] != 0) d -= L[i][k] * L[i][k] * pivots_[k];
    if (d <= 0) throw std::logic_error("orthonormalize: raw harmonic set is linearly dependent");
    pivots_[i] = d;
  }

  // T = L^{-1}
  transform_.assign(N, std::vector<Rational>(N, Rational(0)));
  for (std::size_t i = 0; i < N; ++i) {
    transform_[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (key[i] != key[j]) continue;
      Rational s(0);
      for (std::size_t k = j; k < i; ++k)
        if (L[i][k] != 0 && transform_[k][j] != 0) s -= L[i][k] * transform_[k][j];
      transform_[i][j] = s;
    }
  }

  const double omega = solid_angle(p).value();
  members_.reserve(N);
  for (std::size_t i = 0; i < N; ++i) {
    ExactPolynomial combo(p);
    for (std::size_t j = 0; j <= i; ++j)
      if (transform_[i][j] != 0) combo += raw_[j] * transform_[i][j];
    members_.push_back(to_real(combo) * (1.0 / std::sqrt(to_double(pivots_[i]) * omega)));
  }
}

std::vector<double> HarmonicBasis::evaluate_all(std::span<const double> x) const {
  std::vector<double> out;
  out.reserve(members_.size());
  for (const auto& y : members_) out.push_back(y.evaluate(x));
  return out;
}

HarmonicBasis orthonormalize(int p, int n) { return HarmonicBasis(p, n); }

ExactPolynomial legendre_harmonic(int p, int n) {
  const Poly1D pn = legendre_coeffs(p, n);
  ExactPolynomial out(p);
  for (int k = 0; k <= pn.degree(); ++k) {
    const Rational a = pn.coefficient(k);
    if (a == 0) continue;
    if ((n - k) % 2) throw std::logic_error("legendre_harmonic: Legendre polynomial has wrong parity");
    MultiIndex e(p, 0);
    e[0] = k;
    out += ExactPolynomial::monomial(e, a) * radius_power(p, (n - k) / 2);
  }
  return out;
}

namespace {

void check_unit(std::span<const double> v, int p, const char* what) {
  if (static_cast<int>(v.size()) != p) throw std::domain_error(std::string(what) + ": dimension mismatch");
  double s = 0.0;
  for (double c : v) s += c * c;
  if (std::abs(std::sqrt(s) - 1.0) > 1e-10) throw std::domain_error(std::string(what) + ": not a unit vector");
}

}  // namespace

double addition_theorem_eval(const HarmonicBasis& basis, std::span<const double> xi, std::span<const double> eta) {
  check_unit(xi, basis.dimension(), "addition theorem");
  check_unit(eta, basis.dimension(), "addition theorem");
  std::vector<double> terms;
  terms.reserve(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) terms.push_back(basis.evaluate(j, xi) * basis.evaluate(j, eta));
  const double scale = solid_angle(basis.dimension()).value() / static_cast<double>(basis.size());
  return scale * pairwise_sum(terms);
}

nlohmann::json to_json(const HarmonicBasis& basis) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& y : basis.members()) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [a, c] : y.terms()) terms.push_back({{"alpha", a}, {"coeff", c}});
    members.push_back({{"nvars", y.nvars()}, {"terms", terms}});
  }
  nlohmann::json gram = nlohmann::json::array();
  for (const auto& row : basis.gram_exact()) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    gram.push_back(r);
  }
  return {{"p", basis.dimension()},
          {"n", basis.degree()},
          {"size", basis.size()},
          {"solid_angle", to_string(solid_angle(basis.dimension()))},
          {"members", members},
          {"gram", gram}};
}

}  // namespace sphharm
