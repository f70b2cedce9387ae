#include "arrowhead/vertex_function.hpp"

#include <algorithm>
#include <sstream>

#include "arrowhead/error.hpp"

namespace arrowhead {

VertexFunction::VertexFunction(int level, std::vector<double> values)
    : level_(level), values_(std::move(values)) {
  if (level < 1) throw Error(ErrorCode::domain, "vertex function: level must be >= 1");
  if (values_.size() != vertex_count(level)) {
    std::ostringstream os;
    os << "vertex function of level " << level << " needs " << vertex_count(level)
       << " values, got " << values_.size();
    throw Error(ErrorCode::size_mismatch, os.str());
  }
}

VertexFunction VertexFunction::constant(int level, double c) {
  return VertexFunction(level, std::vector<double>(vertex_count(level), c));
}

VertexFunction VertexFunction::indicator(int level, ChainIndex at) {
  VertexFunction u = constant(level, 0.0);
  if (at.value < 1 || at.value > u.size()) throw Error(ErrorCode::domain, "chain index out of range");
  u.values_[at.value - 1] = 1.0;
  return u;
}

VertexFunction VertexFunction::sample(int level, const std::function<double(double)>& f) {
  const std::size_t n = vertex_count(level);
  const double step = 1.0 / static_cast<double>(n - 1);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = f(static_cast<double>(i) * step);
  return VertexFunction(level, std::move(values));
}

double VertexFunction::at(ChainIndex i) const {
  if (i.value < 1 || i.value > values_.size()) throw Error(ErrorCode::domain, "chain index out of range");
  return values_[i.value - 1];
}

bool VertexFunction::is_constant() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [&](double x) { return x == values_.front(); });
}

void require_same_level(const VertexFunction& u, const VertexFunction& v) {
  if (u.level() != v.level()) {
    std::ostringstream os;
    os << "vertex functions live on levels " << u.level() << " and " << v.level();
    throw Error(ErrorCode::size_mismatch, os.str());
  }
}

std::array<std::size_t, 4> v1_positions(int m) {
  const auto third = static_cast<std::size_t>(pow3(m - 1));
  return {0, third, 2 * third, 3 * third};
}

bool is_v1_position(int m, std::size_t position) {
  const auto third = static_cast<std::size_t>(pow3(m - 1));
  return position % third == 0;
}

}  // namespace arrowhead
