#include "arrowhead/measure.hpp"

#include <cmath>

#include "arrowhead/error.hpp"

namespace arrowhead {

MeasureModel MeasureModel::make(std::array<double, 3> weights, SharedVertexRule rule) {
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0 && w < 1.0)) throw Error(ErrorCode::invalid_argument, "measure weights must lie in (0, 1)");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw Error(ErrorCode::invalid_argument, "measure weights must sum to 1");
  return MeasureModel(weights, rule);
}

bool MeasureModel::is_uniform() const noexcept {
  return weights_[0] == weights_[1] && weights_[1] == weights_[2];
}

std::array<double, 3> measure_weights(const MeasureModel& model) { return model.weights(); }

double trapeze_measure(const MeasureModel& model, int m, std::size_t j) {
  if (m < 1) throw Error(ErrorCode::domain, "trapeze_measure: level must be >= 1");
  const auto count = static_cast<std::size_t>(pow3(m - 1));
  if (j < 1 || j > count) throw Error(ErrorCode::domain, "trapeze_measure: index out of range");

  // Digits of j-1 in base 3, most significant first.
  std::size_t address = j - 1;
  std::size_t place = count / 3;
  double mass = 1.0;
  for (int digit = 0; digit < m - 1; ++digit) {
    mass *= model.weights()[address / place];
    address %= place;
    place /= 3;
  }
  return mass;
}

double integrate(const GraphLevel& level, const VertexFunction& u, const MeasureModel& model) {
  if (u.level() != level.level()) throw Error(ErrorCode::size_mismatch, "integrate: level mismatch");
  const int m = level.level();
  const auto count = static_cast<std::size_t>(pow3(m - 1));
  double total = 0.0;
  for (std::size_t j = 1; j <= count; ++j) {
    const std::size_t first = 3 * (j - 1);
    const double corner_sum = u[first] + u[first + 1] + u[first + 2] + u[first + 3];
    total += trapeze_measure(model, m, j) * 0.25 * corner_sum;
  }
  return total;
}

double spline_integral(int m, ChainIndex center, const MeasureModel& model) {
  const std::size_t last = static_cast<std::size_t>(vertex_count(m));
  if (center.value <= 1 || center.value >= last) {
    throw Error(ErrorCode::domain, "spline_integral: center must not be an endpoint");
  }
  const std::size_t position = center.value - 1;
  if (position % 3 != 0) return 0.25 * trapeze_measure(model, m, position / 3 + 1);

  const double left = trapeze_measure(model, m, position / 3);
  const double right = trapeze_measure(model, m, position / 3 + 1);
  const double factor = model.shared_rule() == SharedVertexRule::half_sum ? 0.125 : 0.25;
  return factor * (left + right);
}

double spline_integral(const GraphLevel& level, ChainIndex center, const MeasureModel& model) {
  return spline_integral(level.level(), center, model);
}

}  // namespace arrowhead
