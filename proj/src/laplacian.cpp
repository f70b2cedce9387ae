#include "arrowhead/laplacian.hpp"

#include <cmath>
#include <limits>

#include "arrowhead/error.hpp"

namespace arrowhead {

LaplacianField::LaplacianField(int level, std::vector<double> interior_values,
                               std::optional<ConductanceScheme> scheme)
    : level_(level), values_(std::move(interior_values)), scheme_(scheme) {
  if (values_.size() != pow3(level) - 1) throw Error(ErrorCode::size_mismatch, "laplacian field: wrong size");
}

double LaplacianField::at(ChainIndex i) const {
  if (i.value < 2 || i.value > values_.size() + 1) {
    throw Error(ErrorCode::domain, "laplacian field is defined on interior vertices only");
  }
  return values_[i.value - 2];
}

double LaplacianField::sup_norm(bool exclude_v1) const {
  double sup = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (exclude_v1 && is_v1_position(level_, k + 1)) continue;
    sup = std::max(sup, std::abs(values_[k]));
  }
  return sup;
}

LaplacianField graph_laplacian_apply(const VertexFunction& u) {
  std::vector<double> out(u.size() - 2);
  for (std::size_t i = 1; i + 1 < u.size(); ++i) out[i - 1] = u[i - 1] + u[i + 1] - 2.0 * u[i];
  return LaplacianField(u.level(), std::move(out));
}

bool is_harmonic(const VertexFunction& u, double tol) {
  return graph_laplacian_apply(u).sup_norm() <= tol;
}

SplineFunction spline_function(int level, ChainIndex center, const MeasureModel& model) {
  const double integral = spline_integral(level, center, model);
  return SplineFunction{level, center, VertexFunction::indicator(level, center), integral};
}

LaplacianField pointwise_laplacian(const VertexFunction& u, const ConductanceScheme& scheme,
                                   const MeasureModel& model) {
  const int m = u.level();
  const double c = conductance(scheme, m);
  const LaplacianField discrete = graph_laplacian_apply(u);
  std::vector<double> out(discrete.values().size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double mass = spline_integral(m, ChainIndex{k + 2}, model);
    if (!(mass > 0.0)) throw Error(ErrorCode::internal, "pointwise_laplacian: zero spline integral");
    out[k] = c * discrete.values()[k] / mass;
  }
  return LaplacianField(m, std::move(out), scheme);
}

std::vector<ConvergenceRow> convergence_probe(const std::function<double(double)>& u_generator,
                                              int m_first, int m_last, const ConductanceScheme& scheme,
                                              const MeasureModel& model, int depth_limit) {
  if (m_first < 2 || m_last < m_first) throw Error(ErrorCode::domain, "convergence_probe: need 2 <= m_first <= m_last");
  if (m_last > depth_limit) throw Error(ErrorCode::resource, "convergence_probe: level exceeds depth limit");

  std::vector<ConvergenceRow> rows;
  std::optional<LaplacianField> previous;
  for (int m = m_first; m <= m_last; ++m) {
    LaplacianField field = pointwise_laplacian(VertexFunction::sample(m, u_generator), scheme, model);
    ConvergenceRow row;
    row.level = m;
    row.sup_value = field.sup_norm(true);
    row.decay = std::numeric_limits<double>::quiet_NaN();
    if (previous) {
      // Interior vertex k (0-based position) of level m-1 sits at 3k on level m.
      const int coarse = m - 1;
      const std::size_t coarse_last = static_cast<std::size_t>(pow3(coarse));
      for (std::size_t k = 1; k < coarse_last; ++k) {
        if (is_v1_position(coarse, k)) continue;
        const double diff = field.values()[3 * k - 1] - previous->values()[k - 1];
        row.sup_deviation = std::max(row.sup_deviation, std::abs(diff));
      }
      const double prior = rows.back().sup_deviation;
      if (rows.size() >= 2 && prior > 0.0) row.decay = row.sup_deviation / prior;
    }
    rows.push_back(row);
    previous = std::move(field);
  }
  return rows;
}

double summation_by_parts_check(const VertexFunction& u, const VertexFunction& v,
                                const ConductanceScheme& scheme) {
  require_same_level(u, v);
  const int m = u.level();
  for (std::size_t p : v1_positions(m)) {
    if (v[p] != 0.0) throw Error(ErrorCode::invalid_argument, "summation_by_parts_check: v must vanish on V_1");
  }
  const LaplacianField lap = graph_laplacian_apply(u);
  double edge_sum = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) edge_sum += (u[i + 1] - u[i]) * (v[i + 1] - v[i]);
  double vertex_sum = 0.0;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (is_v1_position(m, i)) continue;
    vertex_sum += v[i] * lap.values()[i - 1];
  }
  return conductance(scheme, m) * std::abs(edge_sum + vertex_sum);
}

}  // namespace arrowhead
