// Quadrature rule containers shared by the interval and sphere builders.
#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "sphharm/rational.hpp"

namespace sphharm {

/// Sum with pairwise (cascade) reduction in a fixed order.
double pairwise_sum(std::span<const double> values);

/// Nodes in (-1, 1) and positive weights for a weighted 1-D integral.
struct IntervalRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exact_degree = 0;

  std::size_t size() const { return nodes.size(); }
  double weight_sum() const { return pairwise_sum(weights); }
  double integrate(const std::function<double(double)>& f) const;
};

/// Product rule on the unit sphere S^{p-1} in R^p. Nodes are stored row-major.
class SphereRule {
 public:
  SphereRule(int p, std::vector<double> coords, std::vector<double> weights, int exact_degree);

  int dimension() const { return p_; }
  int exact_degree() const { return exact_degree_; }
  std::size_t size() const { return weights_.size(); }
  std::span<const double> node(std::size_t i) const {
    return {coords_.data() + i * static_cast<std::size_t>(p_), static_cast<std::size_t>(p_)};
  }
  const std::vector<double>& weights() const { return weights_; }
  double weight_sum() const { return pairwise_sum(weights_); }

  double integrate(const std::function<double(std::span<const double>)>& f) const;

 private:
  int p_;
  std::vector<double> coords_;
  std::vector<double> weights_;
  int exact_degree_;
};

std::string to_csv(const IntervalRule& rule);
std::string to_csv(const SphereRule& rule);
nlohmann::json to_json(const IntervalRule& rule);
nlohmann::json to_json(const SphereRule& rule);

}  // namespace sphharm
