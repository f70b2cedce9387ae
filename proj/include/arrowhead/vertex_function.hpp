#pragma once

#include <functional>
#include <span>
#include <vector>

#include "arrowhead/curve.hpp"

namespace arrowhead {

// Real values on V_m, stored in chain order (position 0 is A).
class VertexFunction {
 public:
  // Throws size_mismatch unless values.size() == 3^m + 1.
  VertexFunction(int level, std::vector<double> values);

  static VertexFunction constant(int level, double c);
  // Kronecker data: 1 at the given chain index, 0 elsewhere.
  static VertexFunction indicator(int level, ChainIndex at);
  // u(X_i) = f(arc coordinate of X_i).
  static VertexFunction sample(int level, const std::function<double(double)>& f);

  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double operator[](std::size_t position) const { return values_[position]; }
  double& operator[](std::size_t position) { return values_[position]; }
  double at(ChainIndex i) const;

  bool is_constant() const noexcept;

 private:
  int level_;
  std::vector<double> values_;
};

// Throws size_mismatch when the two functions live on different levels.
void require_same_level(const VertexFunction& u, const VertexFunction& v);

// Chain positions (0-based) of the copy of V_1 = {A, B, C, D} inside V_m.
std::array<std::size_t, 4> v1_positions(int m);
bool is_v1_position(int m, std::size_t position);

}  // namespace arrowhead
