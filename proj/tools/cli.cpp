#include "cli.hpp"

#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sphharm/bvp.hpp"
#include "sphharm/geometry.hpp"
#include "sphharm/harmonic.hpp"
#include "sphharm/legendre.hpp"
#include "sphharm/orthopoly.hpp"

namespace sphharm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int p = 3;
  int n = 0;
  int n_max = 4;
  int degree = 4;
  std::optional<std::string> format;
  std::string out_path;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  int samples = 100;

  std::string legendre_mode;
  std::optional<double> eval_t;
  std::string kernel = "exp";
  std::string alpha = "0", beta = "0";
  std::string problem_path;
  std::vector<std::string> checks;
};

bool want_json(const Config& c, const char* fallback) { return c.format.value_or(fallback) == "json"; }

nlohmann::json bigint_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string join_alpha(const MultiIndex& a) {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ";" : "") + std::to_string(a[i]);
  return s;
}

void cmd_count(const Config& c, std::ostream& out) {
  const BigInt K = count_homogeneous(c.p, c.n);
  const BigInt N = count_harmonic(c.p, c.n);
  if (want_json(c, "csv")) {
    out << nlohmann::json{{"p", c.p}, {"n", c.n}, {"K", bigint_json(K)}, {"N", bigint_json(N)}}.dump(2) << "\n";
  } else {
    out << "p,n,K,N\n" << c.p << "," << c.n << "," << K.get_str() << "," << N.get_str() << "\n";
  }
}

void cmd_legendre(const Config& c, std::ostream& out) {
  std::string mode = c.legendre_mode;
  if (mode.empty()) mode = c.eval_t ? "eval" : "coeffs";
  const bool json = want_json(c, "csv");
  if (mode == "coeffs") {
    const Poly1D q = legendre_coeffs(c.p, c.n);
    if (json) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (int k = 0; k <= c.n; ++k) coeffs.push_back(to_string(q.coefficient(k)));
      out << nlohmann::json{{"p", c.p}, {"n", c.n}, {"coeffs", coeffs}}.dump(2) << "\n";
    } else {
      out << "k,coeff\n";
      for (int k = 0; k <= c.n; ++k) out << k << "," << to_string(q.coefficient(k)) << "\n";
    }
  } else if (mode == "eval") {
    if (!c.eval_t) throw UsageError("legendre eval requires --eval T");
    const double t = *c.eval_t;
    if (!(std::abs(t) <= 1.0)) throw UsageError("--eval must lie in [-1, 1]");
    const double v = legendre_eval(c.p, c.n, t);
    if (json) {
      out << nlohmann::json{{"p", c.p}, {"n", c.n}, {"t", t}, {"value", v}}.dump(2) << "\n";
    } else {
      out << "p,n,t,value\n" << c.p << "," << c.n << "," << format_double(t) << "," << format_double(v) << "\n";
    }
  } else {
    const int points = std::max(c.samples, 2);
    const LegendreTable table(c.p, c.n_max);
    nlohmann::json rows = nlohmann::json::array();
    if (!json) {
      out << "t";
      for (int n = 0; n <= c.n_max; ++n) out << ",P" << n;
      out << "\n";
    }
    for (int i = 0; i < points; ++i) {
      const double t = -1.0 + 2.0 * i / (points - 1);
      const auto vals = legendre_eval_all(c.p, c.n_max, t);
      if (json) {
        rows.push_back({{"t", t}, {"values", vals}});
      } else {
        out << format_double(t);
        for (double v : vals) out << "," << format_double(v);
        out << "\n";
      }
    }
    if (json) out << nlohmann::json{{"p", c.p}, {"n_max", c.n_max}, {"rows", rows}}.dump(2) << "\n";
  }
}

void cmd_basis(const Config& c, std::ostream& out) {
  const HarmonicBasis basis(c.p, c.n);
  if (want_json(c, "json")) {
    out << to_json(basis).dump(2) << "\n";
    return;
  }
  out << "member,alpha,coeff\n";
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [a, v] : basis.members()[j].terms()) out << j << "," << join_alpha(a) << "," << format_double(v) << "\n";
}

void cmd_quadrature(const Config& c, std::ostream& out) {
  if (c.degree < 0) throw UsageError("--degree must be nonnegative");
  const bool json = want_json(c, "csv");
  if (c.p == 1) {
    const IntervalRule rule = gauss_rule(Weight(Rational(0), Rational(0)), c.degree / 2 + 1);
    out << (json ? to_json(rule).dump(2) + "\n" : to_csv(rule));
    return;
  }
  const SphereRule rule = sphere_quadrature(c.p, c.degree);
  out << (json ? to_json(rule).dump(2) + "\n" : to_csv(rule));
}

std::function<double(double)> builtin_kernel(const std::string& name) {
  if (name == "exp") return [](double t) { return std::exp(t); };
  if (name == "abs") return [](double t) { return std::abs(t); };
  if (name == "cube") return [](double t) { return t * t * t; };
  if (name == "poisson-half") return [](double t) { return 0.75 / std::pow(1.25 - t, 1.5); };
  throw UsageError("unknown kernel: " + name);
}

void cmd_funk_hecke(const Config& c, std::ostream& out) {
  const auto f = builtin_kernel(c.kernel);
  std::vector<double> lambdas;
  for (int n = 0; n <= c.n_max; ++n) lambdas.push_back(funk_hecke_coeff(c.p, n, f));
  if (want_json(c, "csv")) {
    out << nlohmann::json{{"p", c.p}, {"kernel", c.kernel}, {"lambda", lambdas}}.dump(2) << "\n";
  } else {
    out << "n,lambda\n";
    for (int n = 0; n <= c.n_max; ++n) out << n << "," << format_double(lambdas[n]) << "\n";
  }
}

void cmd_orthopoly(const Config& c, std::ostream& out) {
  const Weight w(parse_rational(c.alpha), parse_rational(c.beta));
  const auto phis = gram_schmidt(w, c.n_max);
  if (want_json(c, "csv")) {
    nlohmann::json polys = nlohmann::json::array();
    for (const auto& q : phis) {
      nlohmann::json row = nlohmann::json::array();
      for (const auto& v : q.coefficients()) row.push_back(to_string(v));
      polys.push_back(row);
    }
    out << nlohmann::json{{"alpha", to_string(w.alpha())},
                          {"beta", to_string(w.beta())},
                          {"monic", polys},
                          {"recurrence", to_json(recurrence_coeffs(phis, w))}}
               .dump(2)
        << "\n";
  } else {
    out << "n,k,coeff\n";
    for (std::size_t n = 0; n < phis.size(); ++n)
      for (int k = 0; k <= phis[n].degree(); ++k) out << n << "," << k << "," << to_string(phis[n].coefficient(k)) << "\n";
  }
}

BoundaryData builtin_boundary(int p, const std::string& name) {
  using Span = std::span<const double>;
  if (name == "constant") return BoundaryData::callable(p, [](Span) { return 1.0; });
  if (name == "exp_x1") return BoundaryData::callable(p, [](Span x) { return std::exp(x[0]); });
  if (name == "abs_x1") return BoundaryData::callable(p, [](Span x) { return std::abs(x[0]); });
  if (name == "cos_pi_x1") return BoundaryData::callable(p, [](Span x) { return std::cos(std::numbers::pi * x[0]); });
  throw UsageError("unknown builtin boundary: " + name);
}

void cmd_solve(const Config& c, std::ostream& out) {
  std::ifstream in(c.problem_path);
  if (!in) throw UsageError("cannot open problem file: " + c.problem_path);
  nlohmann::json problem;
  try {
    problem = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("problem file is not valid JSON: ") + e.what());
  }
  try {
    const int p = problem.at("p").get<int>();
    const int n_max = problem.at("n_max").get<int>();
    const auto& b = problem.at("boundary");
    const std::string type = b.at("type").get<std::string>();
    std::optional<BoundaryData> data;
    if (type == "polynomial") {
      data = BoundaryData::polynomial(polynomial_from_json(b.at("polynomial")));
      if (data->dimension() != p) throw UsageError("boundary polynomial has the wrong number of variables");
    } else if (type == "builtin") {
      data = builtin_boundary(p, b.at("name").get<std::string>());
    } else {
      throw UsageError("boundary type must be \"polynomial\" or \"builtin\"");
    }
    std::optional<int> qd;
    if (problem.contains("quad_degree")) qd = problem["quad_degree"].get<int>();
    const BvpSolution sol = project_boundary(*data, n_max, qd);

    const bool json = want_json(c, "csv");
    nlohmann::json rows = nlohmann::json::array();
    if (!json) {
      for (int i = 1; i <= p; ++i) out << "x" << i << ",";
      out << "series_value,poisson_value,abs_diff\n";
    }
    for (const auto& pt : problem.at("eval_points")) {
      const auto x = pt.get<std::vector<double>>();
      if (static_cast<int>(x.size()) != p) throw UsageError("eval point has the wrong dimension");
      const double s = series_eval(sol, x);
      // the Poisson kernel path is p >= 3 only; p = 2 reports the series alone
      if (p < 3) {
        if (json) rows.push_back({{"x", x}, {"series_value", s}, {"poisson_value", nullptr}, {"abs_diff", nullptr}});
        else {
          for (double xi : x) out << format_double(xi) << ",";
          out << format_double(s) << ",,\n";
        }
        continue;
      }
      const double v = poisson_eval(*data, x, qd);
      if (json) {
        rows.push_back({{"x", x}, {"series_value", s}, {"poisson_value", v}, {"abs_diff", std::abs(s - v)}});
      } else {
        for (double xi : x) out << format_double(xi) << ",";
        out << format_double(s) << "," << format_double(v) << "," << format_double(std::abs(s - v)) << "\n";
      }
    }
    if (json)
      out << nlohmann::json{{"p", p}, {"n_max", n_max}, {"quadrature_error", sol.quadrature_error}, {"rows", rows}}.dump(2)
          << "\n";
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed problem file: ") + e.what());
  }
}

int cmd_verify(const Config& c, const VerifyOptions& opt, std::ostream& out) {
  for (const auto& name : c.checks)
    if (!is_check(name)) throw UsageError("unknown check: " + name);
  std::vector<CheckResult> results;
  for (const auto& name : c.checks) results.push_back(run_check(name, opt));
  bool ok = true;
  if (want_json(c, "json")) {
    nlohmann::json report = nlohmann::json::array();
    for (const auto& r : results) report.push_back(to_json(r));
    out << report.dump(2) << "\n";
  } else {
    out << "check,p_min,p_max,n_min,n_max,max_residual,tolerance,pass\n";
    for (const auto& r : results)
      out << r.check << "," << r.p_min << "," << r.p_max << "," << r.n_min << "," << r.n_max << ","
          << format_double(r.max_residual) << "," << format_double(r.tolerance) << "," << (r.pass ? "true" : "false")
          << "\n";
  }
  for (const auto& r : results) ok = ok && r.pass;
  return ok ? 0 : 1;
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out_path, "Write output to PATH instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Spherical harmonics, Legendre polynomials and the Dirichlet problem on the unit ball", "sphharm"};
  app.require_subcommand(1);

  const auto p_opt = [&](CLI::App* sub, int lo) {
    return sub->add_option("--p", c.p, "Ambient dimension")->check(CLI::Range(lo, 64));
  };
  const auto n_opt = [&](CLI::App* sub) {
    return sub->add_option("--n", c.n, "Degree")->check(CLI::Range(0, 200));
  };
  const auto n_max_opt = [&](CLI::App* sub) {
    return sub->add_option("--n-max", c.n_max, "Largest degree")->check(CLI::Range(0, 200));
  };

  auto* count = app.add_subcommand("count", "K(p,n) homogeneous and N(p,n) harmonic dimensions");
  p_opt(count, 2);
  n_opt(count);
  add_common(count, c);

  auto* legendre = app.add_subcommand("legendre", "Legendre polynomials P_{n,p}");
  legendre->add_option("mode", c.legendre_mode, "coeffs | eval | table")
      ->check(CLI::IsMember({"coeffs", "eval", "table"}));
  p_opt(legendre, 2);
  n_opt(legendre);
  n_max_opt(legendre);
  legendre->add_option("--eval", c.eval_t, "Evaluation point t in [-1, 1]");
  legendre->add_option("--samples", c.samples, "Grid points for table mode")->check(CLI::Range(2, 100000));
  add_common(legendre, c);

  auto* basis = app.add_subcommand("basis", "Orthonormal spherical harmonic basis");
  p_opt(basis, 2);
  n_opt(basis)->check(CLI::Range(0, 30));
  add_common(basis, c);

  auto* quad = app.add_subcommand("quadrature", "Product quadrature rule on S^{p-1}");
  p_opt(quad, 1);
  quad->add_option("--degree", c.degree, "Polynomial exactness degree")->check(CLI::Range(0, 400));
  add_common(quad, c);

  auto* fh = app.add_subcommand("funk-hecke", "Funk-Hecke eigenvalues of a builtin zonal kernel");
  p_opt(fh, 2);
  n_max_opt(fh);
  fh->add_option("--kernel", c.kernel, "exp | abs | cube | poisson-half")
      ->check(CLI::IsMember({"exp", "abs", "cube", "poisson-half"}));
  add_common(fh, c);

  auto* op = app.add_subcommand("orthopoly", "Monic orthogonal polynomials for (1-x)^alpha (1+x)^beta");
  op->add_option("--alpha", c.alpha, "Rational exponent > -1");
  op->add_option("--beta", c.beta, "Rational exponent > -1");
  n_max_opt(op)->check(CLI::Range(0, 40));
  add_common(op, c);

  auto* solve = app.add_subcommand("solve", "Dirichlet problem from a JSON problem file");
  solve->add_option("problem", c.problem_path, "Problem file")->required();
  add_common(solve, c);

  auto* verify = app.add_subcommand("verify", "Run identity checks and report residuals");
  verify->add_option("checks", c.checks, "Check names");
  auto* vp = p_opt(verify, 2);
  auto* vn = n_opt(verify);
  verify->add_option("--seed", c.seed, "RNG seed");
  verify->add_option("--tol", c.tol, "Tolerance override")->check(CLI::PositiveNumber);
  verify->add_option("--samples", c.samples, "Random samples per case")->check(CLI::Range(1, 1000000));
  add_common(verify, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    out << target->help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    const CLI::App* target = &app;
    for (const auto* sub : app.get_subcommands()) target = sub;
    err << "error: " << e.what() << "\n\n" << target->help();
    return 2;
  }

  std::ostringstream buffer;
  std::ostream& sink = c.out_path.empty() ? out : static_cast<std::ostream&>(buffer);
  int code = 0;
  try {
    if (count->parsed()) cmd_count(c, sink);
    else if (legendre->parsed()) cmd_legendre(c, sink);
    else if (basis->parsed()) cmd_basis(c, sink);
    else if (quad->parsed()) cmd_quadrature(c, sink);
    else if (fh->parsed()) cmd_funk_hecke(c, sink);
    else if (op->parsed()) cmd_orthopoly(c, sink);
    else if (solve->parsed()) cmd_solve(c, sink);
    else if (verify->parsed()) {
      VerifyOptions opt;
      if (vp->count()) opt.p = c.p;
      if (vn->count()) opt.n = c.n;
      opt.tol = c.tol;
      opt.samples = c.samples;
      opt.seed = c.seed;
      code = cmd_verify(c, opt, sink);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!c.out_path.empty()) {
    std::ofstream file(c.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << c.out_path << "\n";
      return 1;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace sphharm::cli
