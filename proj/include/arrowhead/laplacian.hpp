#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "arrowhead/energy.hpp"
#include "arrowhead/measure.hpp"

namespace arrowhead {

// Values of an operator at the interior chain indices 2 .. 3^m, i.e. on
// V_m minus the endpoints.
class LaplacianField {
 public:
  LaplacianField(int level, std::vector<double> interior_values,
                 std::optional<ConductanceScheme> scheme = std::nullopt);

  int level() const noexcept { return level_; }
  std::span<const double> values() const noexcept { return values_; }
  const std::optional<ConductanceScheme>& scheme() const noexcept { return scheme_; }

  // Throws domain for an endpoint or out-of-range index.
  double at(ChainIndex i) const;

  // Largest |value| over interior vertices, optionally skipping the copy of V_1.
  double sup_norm(bool exclude_v1 = false) const;

 private:
  int level_;
  std::vector<double> values_;
  std::optional<ConductanceScheme> scheme_;
};

// Delta_m u(X) = u(left) + u(right) - 2 u(X) at every interior vertex.
LaplacianField graph_laplacian_apply(const VertexFunction& u);

bool is_harmonic(const VertexFunction& u, double tol = 1e-12);

struct SplineFunction {
  int level = 1;
  ChainIndex center;
  VertexFunction values;
  double integral = 0.0;
};

SplineFunction spline_function(int level, ChainIndex center, const MeasureModel& model = {});

// f_m(X) = c_m * (integral of psi_X)^-1 * Delta_m u(X). Under the renormalized
// scheme and the uniform measure this is (4/3) 9^m Delta_m u(X).
LaplacianField pointwise_laplacian(const VertexFunction& u, const ConductanceScheme& scheme = {},
                                   const MeasureModel& model = {});

struct ConvergenceRow {
  int level = 0;
  double sup_value = 0.0;      // sup |f_m| over V_m \ V_1
  double sup_deviation = 0.0;  // sup |f_m - f_{m-1}| over common vertices; 0 for the first row
  double decay = 0.0;          // sup_deviation / previous sup_deviation; NaN when undefined
};

// Samples f_m of u_generator(s) for every m in [m_first, m_last] and compares
// successive levels on V_{m-1} \ V_1.
std::vector<ConvergenceRow> convergence_probe(const std::function<double(double)>& u_generator,
                                              int m_first, int m_last,
                                              const ConductanceScheme& scheme = {},
                                              const MeasureModel& model = {},
                                              int depth_limit = kDefaultDepthLimit);

// |E_m(u, v) + c_m sum_{X in V_m \ V_1} v(X) Delta_m u(X)| for v vanishing on
// V_1. Throws invalid_argument otherwise.
double summation_by_parts_check(const VertexFunction& u, const VertexFunction& v,
                                const ConductanceScheme& scheme = {});

}  // namespace arrowhead
