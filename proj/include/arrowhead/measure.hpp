#pragma once

#include <array>

#include "arrowhead/curve.hpp"
#include "arrowhead/vertex_function.hpp"

namespace arrowhead {

// How the integral of a spline centred on a vertex shared by two trapezes is
// assembled from the two trapeze measures.
enum class SharedVertexRule {
  half_sum,  // (1/8)(mu(T) + mu(T'))
  additive,  // (1/4)(mu(T) + mu(T'))
};

// Self-similar probability measure on the trapezoidal domain, given by one
// weight per homothety. Total mass is 1.
class MeasureModel {
 public:
  MeasureModel() = default;

  // Throws invalid_argument unless every weight is in (0, 1) and they sum to
  // 1 within 1e-12.
  static MeasureModel make(std::array<double, 3> weights,
                           SharedVertexRule rule = SharedVertexRule::half_sum);

  const std::array<double, 3>& weights() const noexcept { return weights_; }
  SharedVertexRule shared_rule() const noexcept { return rule_; }
  bool is_uniform() const noexcept;

 private:
  MeasureModel(std::array<double, 3> weights, SharedVertexRule rule)
      : weights_(weights), rule_(rule) {}

  std::array<double, 3> weights_{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  SharedVertexRule rule_ = SharedVertexRule::half_sum;
};

std::array<double, 3> measure_weights(const MeasureModel& model);

// mu(T_{m,j}): product of the branch weights along the ternary digits of j-1
// (m-1 digits, most significant first). 3^(1-m) under uniform weights.
double trapeze_measure(const MeasureModel& model, int m, std::size_t j);

// sum_j mu(T_{m,j}) * (1/4) * sum over the four corners of u.
double integrate(const GraphLevel& level, const VertexFunction& u, const MeasureModel& model = {});

// Integral of the level-m spline centred at a non-endpoint vertex:
// (1/4) mu(T) inside a single trapeze, the shared rule on a trapeze junction.
double spline_integral(int m, ChainIndex center, const MeasureModel& model = {});
double spline_integral(const GraphLevel& level, ChainIndex center, const MeasureModel& model = {});

}  // namespace arrowhead
