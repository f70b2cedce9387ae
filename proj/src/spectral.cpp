#include "arrowhead/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "arrowhead/error.hpp"

namespace arrowhead {

namespace {

constexpr double kPi = std::numbers::pi;

// Chain positions of the Dirichlet vertices, ascending.
std::vector<std::size_t> boundary_positions(int m, Boundary boundary) {
  const auto last = static_cast<std::size_t>(pow3(m));
  if (boundary == Boundary::v0) return {0, last};
  const auto third = last / 3;
  return {0, third, 2 * third, last};
}

void check_level(int m, Boundary boundary, int depth_limit) {
  const int lowest = boundary == Boundary::v1 ? 2 : 1;
  if (m < lowest) {
    throw Error(ErrorCode::domain, "Dirichlet spectrum needs m >= " + std::to_string(lowest));
  }
  if (m > depth_limit) throw Error(ErrorCode::resource, "Dirichlet spectrum: level exceeds depth limit");
}

// The block between two consecutive boundary vertices is the Dirichlet path
// Laplacian: each interior vertex has degree 2 and is joined to its chain
// neighbours inside the segment.
void assemble_block(std::size_t n, Eigen::VectorXd& diag, Eigen::VectorXd& sub) {
  diag = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 2.0);
  sub = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n > 0 ? n - 1 : 0), -1.0);
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve_block(std::size_t n, std::size_t block_id,
                                                           int options) {
  Eigen::VectorXd diag;
  Eigen::VectorXd sub;
  assemble_block(n, diag, sub);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, options);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "tridiagonal eigen-iteration did not converge on block " << block_id;
    throw Error(ErrorCode::numeric, os.str());
  }
  return solver;
}

}  // namespace

std::vector<std::pair<double, std::size_t>> Spectrum::grouped(double tol) const {
  std::vector<std::pair<double, std::size_t>> out;
  for (double value : eigenvalues) {
    if (!out.empty() && std::abs(value - out.back().first) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(value, 1);
    }
  }
  return out;
}

std::size_t block_count(Boundary boundary) { return boundary == Boundary::v1 ? 3 : 1; }

std::size_t block_size(int m, Boundary boundary) {
  const auto edges = static_cast<std::size_t>(pow3(m)) / block_count(boundary);
  return edges - 1;
}

Spectrum dirichlet_spectrum_numeric(int m, Boundary boundary, int depth_limit) {
  check_level(m, boundary, depth_limit);
  const std::vector<std::size_t> cuts = boundary_positions(m, boundary);

  Spectrum spectrum{m, boundary, {}};
  for (std::size_t b = 0; b + 1 < cuts.size(); ++b) {
    const std::size_t n = cuts[b + 1] - cuts[b] - 1;
    const auto solver = solve_block(n, b, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& values = solver.eigenvalues();
    spectrum.eigenvalues.insert(spectrum.eigenvalues.end(), values.data(), values.data() + values.size());
  }
  std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  return spectrum;
}

Spectrum dirichlet_spectrum_exact(int m, Boundary boundary) {
  check_level(m, boundary, m);
  const std::size_t n = block_size(m, boundary);
  Spectrum spectrum{m, boundary, {}};
  spectrum.eigenvalues.reserve(n * block_count(boundary));
  for (std::size_t k = 1; k <= n; ++k) {
    const double value = 2.0 - 2.0 * std::cos(static_cast<double>(k) * kPi / static_cast<double>(n + 1));
    for (std::size_t b = 0; b < block_count(boundary); ++b) spectrum.eigenvalues.push_back(value);
  }
  std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
  return spectrum;
}

std::pair<double, VertexFunction> dirichlet_eigenfunction(int m, std::size_t block, std::size_t k,
                                                          Boundary boundary, int depth_limit) {
  check_level(m, boundary, depth_limit);
  if (block >= block_count(boundary)) throw Error(ErrorCode::domain, "dirichlet_eigenfunction: block out of range");
  const std::size_t n = block_size(m, boundary);
  if (k < 1 || k > n) throw Error(ErrorCode::domain, "dirichlet_eigenfunction: mode out of range");

  const auto solver = solve_block(n, block, Eigen::ComputeEigenvectors);
  Eigen::VectorXd mode = solver.eigenvectors().col(static_cast<Eigen::Index>(k - 1));
  mode.normalize();
  for (Eigen::Index i = 0; i < mode.size(); ++i) {
    if (std::abs(mode[i]) > 1e-12) {
      if (mode[i] < 0.0) mode = -mode;
      break;
    }
  }

  const std::size_t offset = boundary_positions(m, boundary)[block] + 1;
  VertexFunction u = VertexFunction::constant(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) u[offset + i] = mode[static_cast<Eigen::Index>(i)];
  return {solver.eigenvalues()[static_cast<Eigen::Index>(k - 1)], std::move(u)};
}

double eigen_residual(const VertexFunction& u, double lambda, Boundary boundary) {
  const std::vector<std::size_t> cuts = boundary_positions(u.level(), boundary);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    if (std::binary_search(cuts.begin(), cuts.end(), i)) continue;
    const double minus_laplacian = 2.0 * u[i] - u[i - 1] - u[i + 1];
    worst = std::max(worst, std::abs(minus_laplacian - lambda * u[i]));
  }
  return worst;
}

double phi(double x) {
  if (!(x > 4.0) || !std::isfinite(x)) throw Error(ErrorCode::domain, "phi is defined on ]4, +inf[");
  const double t = x - 2.0;
  // Product of the two roots is 1; take the large one stably and invert.
  const double large = (t + std::sqrt(t * t - 4.0)) / 2.0;
  return 1.0 / large;
}

double phi_inverse(double y) {
  if (!(y > 0.0 && y <= 1.0)) throw Error(ErrorCode::domain, "phi_inverse is defined on (0, 1]");
  return (y + 1.0) * (y + 1.0) / y;
}

double decimate_down(double lambda) {
  const double t = 2.0 - lambda;
  return 2.0 + 3.0 * t - t * t * t;
}

DecimationBranches decimate_up(double parent) {
  if (!(parent >= 0.0 && parent <= 4.0)) throw Error(ErrorCode::domain, "decimate_up: parent must lie in [0, 4]");
  const double theta = std::acos(std::clamp((2.0 - parent) / 2.0, -1.0, 1.0));
  DecimationBranches out;
  out.parent = parent;
  for (int n = 0; n < 3; ++n) out.children[n] = 2.0 - 2.0 * std::cos((theta + 2.0 * kPi * n) / 3.0);
  return out;
}

VertexFunction extend_eigenfunction(const VertexFunction& u, double parent, double child) {
  const double t = 2.0 - child;
  const double denominator = t * t - 1.0;
  if (std::abs(denominator) < 1e-12) {
    throw Error(ErrorCode::domain, "extend_eigenfunction: singular extension at child eigenvalue 1 or 3");
  }
  if (std::abs(decimate_down(child) - parent) > 1e-8) {
    throw Error(ErrorCode::consistency, "extend_eigenfunction: child is not a decimation branch of parent");
  }
  std::vector<double> out;
  out.reserve(3 * (u.size() - 1) + 1);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double left = u[i];
    const double right = u[i + 1];
    out.push_back(left);
    out.push_back((t * left + right) / denominator);
    out.push_back((left + t * right) / denominator);
  }
  out.push_back(u[u.size() - 1]);
  return VertexFunction(u.level() + 1, std::move(out));
}

ForbiddenReport forbidden_check(int m, int depth_limit) {
  const Spectrum spectrum = dirichlet_spectrum_numeric(m, Boundary::v1, depth_limit);
  ForbiddenReport report;
  report.level = m;
  report.margin = std::numeric_limits<double>::infinity();
  for (double value : spectrum.eigenvalues) report.margin = std::min(report.margin, std::abs(value - 2.0));
  report.absent = report.margin > 1e-9;
  return report;
}

std::string_view to_string(ScalingMode mode) noexcept {
  return mode == ScalingMode::geometric ? "geometric" : "arclength";
}

ScalingMode scaling_from_string(std::string_view name) {
  if (name == "geometric") return ScalingMode::geometric;
  if (name == "arclength") return ScalingMode::arclength;
  throw Error(ErrorCode::invalid_argument, "unknown scaling mode '" + std::string(name) + "'");
}

double scaling_base(ScalingMode mode) { return mode == ScalingMode::geometric ? 5.0 / 3.0 : 9.0; }

std::size_t count_at_most(std::span<const double> sorted_values, double x) {
  return static_cast<std::size_t>(std::upper_bound(sorted_values.begin(), sorted_values.end(), x) -
                                  sorted_values.begin());
}

CountingSeries counting_function(std::span<const Spectrum> spectra, ScalingMode mode, std::size_t grid_points) {
  if (spectra.empty()) throw Error(ErrorCode::invalid_argument, "counting_function: no spectra");
  const double base = scaling_base(mode);

  CountingSeries series;
  series.mode = mode;
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < spectra.size(); ++i) {
    const Spectrum& s = spectra[i];
    const double scale = std::pow(base, s.level);
    std::vector<double> values(s.eigenvalues.size());
    std::transform(s.eigenvalues.begin(), s.eigenvalues.end(), values.begin(),
                   [scale](double v) { return v * scale; });
    std::sort(values.begin(), values.end());
    const double x = 4.0 * scale;
    series.level_samples.push_back({s.level, x, count_at_most(values, x)});
    series.renormalized.push_back(std::move(values));
    if (s.level > spectra[deepest].level) deepest = i;
  }

  const std::vector<double>& top = series.renormalized[deepest];
  if (grid_points >= 2 && !top.empty()) {
    const double lo = std::log(top.front() / 2.0);
    const double hi = std::log(4.0 * std::pow(base, spectra[deepest].level));
    for (std::size_t g = 0; g < grid_points; ++g) {
      const double x = std::exp(lo + (hi - lo) * static_cast<double>(g) / static_cast<double>(grid_points - 1));
      series.grid.push_back({0, x, count_at_most(top, x)});
    }
  }
  return series;
}

WeylFit weyl_fit(const CountingSeries& series) {
  std::vector<std::pair<double, double>> points;
  for (const auto& sample : series.level_samples) {
    if (sample.count > 0) points.emplace_back(std::log(sample.x), std::log(static_cast<double>(sample.count)));
  }
  if (points.size() < 3) throw Error(ErrorCode::invalid_argument, "weyl_fit: need at least three levels");

  const double n = static_cast<double>(points.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [x, y] : points) {
    mean_x += x / n;
    mean_y += y / n;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [x, y] : points) {
    sxx += (x - mean_x) * (x - mean_x);
    sxy += (x - mean_x) * (y - mean_y);
  }
  WeylFit fit;
  fit.alpha = sxy / sxx;
  fit.intercept = mean_y - fit.alpha * mean_x;
  double ss = 0.0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.intercept + fit.alpha * x);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  fit.points = points.size();
  fit.identity_alpha = std::log(3.0) / std::log(scaling_base(series.mode));
  return fit;
}

std::vector<PeriodicityRow> ratio_periodicity_probe(const CountingSeries& series, std::span<const double> c_grid) {
  const double base = scaling_base(series.mode);
  const double alpha = std::log(3.0) / std::log(base);
  std::vector<PeriodicityRow> rows;
  for (double c : c_grid) {
    for (std::size_t i = 0; i < series.level_samples.size(); ++i) {
      const int level = series.level_samples[i].level;
      const double x = c * std::pow(base, level);
      const std::size_t count = count_at_most(series.renormalized[i], x);
      rows.push_back({c, level, x, count, static_cast<double>(count) / std::pow(x, alpha)});
    }
  }
  return rows;
}

}  // namespace arrowhead
