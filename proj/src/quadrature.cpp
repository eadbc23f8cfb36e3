#include "sphharm/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sphharm {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double IntervalRule::integrate(const std::function<double(double)>& f) const {
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) terms[i] = weights[i] * f(nodes[i]);
  return pairwise_sum(terms);
}

SphereRule::SphereRule(int p, std::vector<double> coords, std::vector<double> weights,
                       int exact_degree)
    : p_(p), coords_(std::move(coords)), weights_(std::move(weights)), exact_degree_(exact_degree) {
  if (p < 1 || coords_.size() != weights_.size() * static_cast<std::size_t>(p))
    throw std::invalid_argument("SphereRule: coordinate/weight size mismatch");
}

double SphereRule::integrate(const std::function<double(std::span<const double>)>& f) const {
  std::vector<double> terms(size());
  for (std::size_t i = 0; i < size(); ++i) terms[i] = weights_[i] * f(node(i));
  return pairwise_sum(terms);
}

std::string to_csv(const IntervalRule& rule) {
  std::ostringstream os;
  os << "x,weight\n";
  for (std::size_t i = 0; i < rule.size(); ++i)
    os << format_double(rule.nodes[i]) << ',' << format_double(rule.weights[i]) << '\n';
  return os.str();
}

std::string to_csv(const SphereRule& rule) {
  std::ostringstream os;
  for (int k = 1; k <= rule.dimension(); ++k) os << 'x' << k << ',';
  os << "weight\n";
  for (std::size_t i = 0; i < rule.size(); ++i) {
    for (double c : rule.node(i)) os << format_double(c) << ',';
    os << format_double(rule.weights()[i]) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const IntervalRule& rule) {
  return {{"p", 1}, {"exact_degree", rule.exact_degree}, {"nodes", rule.nodes},
          {"weights", rule.weights}};
}

nlohmann::json to_json(const SphereRule& rule) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < rule.size(); ++i) {
    auto n = rule.node(i);
    nodes.push_back(std::vector<double>(n.begin(), n.end()));
  }
  return {{"p", rule.dimension()}, {"exact_degree", rule.exact_degree()}, {"nodes", nodes},
          {"weights", rule.weights()}};
}

}  // namespace sphharm
