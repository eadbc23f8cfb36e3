// Independent reference computations shared by the test binaries. Nothing here
// calls into the library's own closed forms.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

inline std::vector<double> random_unit(int p, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v(p);
  double s = 0.0;
  for (double& c : v) {
    c = g(rng);
    s += c * c;
  }
  s = std::sqrt(s);
  for (double& c : v) c /= s;
  return v;
}

inline std::vector<double> random_ball(int p, double r_max, std::mt19937_64& rng) {
  auto v = random_unit(p, rng);
  const double r = std::uniform_real_distribution<double>(0.0, r_max)(rng);
  for (double& c : v) c *= r;
  return v;
}

/// Every exponent vector of length p summing to n, by plain recursion.
inline void enumerate(int p, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= n; ++k) {
    cur.push_back(k);
    enumerate(p, n - k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> all_monomials(int p, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  if (n >= 0) enumerate(p, n, cur, out);
  return out;
}

/// Gamma-function form 2 prod Gamma((a_i+1)/2) / Gamma((|a|+p)/2).
inline double monomial_integral_gamma(const std::vector<int>& a) {
  for (int v : a)
    if (v % 2) return 0.0;
  double lg = std::log(2.0);
  int total = 0;
  for (int v : a) {
    lg += std::lgamma((v + 1) / 2.0);
    total += v;
  }
  lg -= std::lgamma((total + static_cast<double>(a.size())) / 2.0);
  return std::exp(lg);
}

/// Classical Legendre polynomial coefficients via
/// P_n(t) = 2^{-n} sum_k (-1)^k C(n,k) C(2n-2k, n) t^{n-2k}.
inline std::vector<double> classical_legendre(int n) {
  std::vector<double> c(n + 1, 0.0);
  auto binom = [](int a, int b) {
    double r = 1.0;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  for (int k = 0; 2 * k <= n; ++k)
    c[n - 2 * k] = std::pow(-1.0, k) * binom(n, k) * binom(2 * n - 2 * k, n) / std::pow(2.0, n);
  return c;
}

/// Chebyshev T_n coefficients from T_{n+1} = 2t T_n - T_{n-1}.
inline std::vector<double> chebyshev(int n) {
  std::vector<std::vector<double>> T{{1.0}, {0.0, 1.0}};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (int i = 0; i <= k; ++i) next[i + 1] += 2.0 * T[k][i];
    for (int i = 0; i < k; ++i) next[i] -= T[k - 1][i];
    T.push_back(next);
  }
  return T[n];
}

/// Composite Simpson on [a, b] with 2*half intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int half) {
  const int m = 2 * half;
  const double h = (b - a) / m;
  double s = f(a) + f(b);
  for (int i = 1; i < m; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
/// three-term recurrence, started from the Chebyshev-like guess.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int m) {
  std::vector<double> x(m), w(m);
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5)), dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (m == 1) p0 = 1.0, p1 = z;
      dp = m * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    x[i] = z;
    w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return {x, w};
}

}  // namespace oracle
