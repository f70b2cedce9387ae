#include "arrowhead/arrowhead.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "arrowhead/curve.hpp"
#include "arrowhead/energy.hpp"
#include "arrowhead/error.hpp"
#include "arrowhead/export.hpp"
#include "arrowhead/laplacian.hpp"
#include "arrowhead/measure.hpp"
#include "arrowhead/report.hpp"
#include "arrowhead/spectral.hpp"

struct ah_level {
  arrowhead::GraphLevel level;
};

struct ah_spectrum {
  arrowhead::Spectrum spectrum;
};

namespace {

using namespace arrowhead;

thread_local std::string g_last_error;
std::atomic<int> g_depth_limit{kDefaultDepthLimit};

ah_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return AH_INVALID_ARGUMENT;
    case ErrorCode::size_mismatch:
      return AH_SIZE_MISMATCH;
    case ErrorCode::domain:
      return AH_DOMAIN_ERROR;
    case ErrorCode::resource:
      return AH_RESOURCE_ERROR;
    case ErrorCode::consistency:
      return AH_CONSISTENCY_ERROR;
    case ErrorCode::numeric:
      return AH_NUMERIC_ERROR;
    case ErrorCode::io:
      return AH_IO_ERROR;
    case ErrorCode::internal:
      return AH_INTERNAL_ERROR;
  }
  return AH_INTERNAL_ERROR;
}

template <typename F>
ah_status guard(F&& body) {
  try {
    body();
    return AH_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return AH_RESOURCE_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AH_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return AH_INTERNAL_ERROR;
  }
}

void require(bool condition, const char* message) {
  if (!condition) throw Error(ErrorCode::invalid_argument, message);
}

int limit() { return g_depth_limit.load(std::memory_order_relaxed); }

void check_depth(int m) {
  if (m > limit()) throw Error(ErrorCode::resource, "level " + std::to_string(m) + " exceeds depth limit");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

VertexFunction vertex_function(int m, const double* u, std::size_t n) {
  require(u != nullptr, "vertex data must not be null");
  check_depth(m);
  return VertexFunction(m, std::vector<double>(u, u + n));
}

ConductanceScheme scheme_of(ah_scheme s) {
  switch (s.kind) {
    case AH_SCHEME_RAW:
      return {SchemeKind::raw, s.delta};
    case AH_SCHEME_GEOMETRIC:
      return {SchemeKind::geometric, s.delta};
    case AH_SCHEME_RENORMALIZED:
      return {SchemeKind::renormalized, s.delta};
    default:
      throw Error(ErrorCode::invalid_argument, "unknown scheme kind");
  }
}

MeasureModel measure_of(const ah_measure* m) {
  if (m == nullptr) return MeasureModel{};
  require(m->shared_rule == AH_SHARED_HALF_SUM || m->shared_rule == AH_SHARED_ADDITIVE, "unknown shared-vertex rule");
  const auto rule = m->shared_rule == AH_SHARED_ADDITIVE ? SharedVertexRule::additive : SharedVertexRule::half_sum;
  return MeasureModel::make({m->weights[0], m->weights[1], m->weights[2]}, rule);
}

Boundary boundary_of(ah_boundary b) {
  require(b == AH_BOUNDARY_V1 || b == AH_BOUNDARY_V0, "unknown boundary");
  return b == AH_BOUNDARY_V0 ? Boundary::v0 : Boundary::v1;
}

ScalingMode scaling_of(ah_scaling s) {
  require(s == AH_SCALING_GEOMETRIC || s == AH_SCALING_ARCLENGTH, "unknown scaling");
  return s == AH_SCALING_ARCLENGTH ? ScalingMode::arclength : ScalingMode::geometric;
}

void check_method(ah_method m) { require(m == AH_METHOD_NUMERIC || m == AH_METHOD_EXACT, "unknown method"); }

void copy_out(std::span<const double> values, double* out, std::size_t out_n) {
  require(out != nullptr, "output buffer must not be null");
  if (out_n != values.size()) {
    throw Error(ErrorCode::size_mismatch,
                "output buffer holds " + std::to_string(out_n) + " values, need " + std::to_string(values.size()));
  }
  std::copy(values.begin(), values.end(), out);
}

std::vector<Spectrum> spectra_up_to(int m_min, int m_max, ah_method method) {
  require(m_min >= 2 && m_max >= m_min, "need 2 <= m_min <= m_max");
  check_method(method);
  check_depth(m_max);
  std::vector<Spectrum> spectra;
  for (int m = m_min; m <= m_max; ++m) {
    spectra.push_back(method == AH_METHOD_EXACT ? dirichlet_spectrum_exact(m)
                                                : dirichlet_spectrum_numeric(m, Boundary::v1, limit()));
  }
  return spectra;
}

}  // namespace

extern "C" {

const char* ah_version(void) { return "0.1.0"; }

const char* ah_status_name(ah_status status) {
  switch (status) {
    case AH_OK:
      return "ok";
    case AH_INVALID_ARGUMENT:
      return "invalid argument";
    case AH_SIZE_MISMATCH:
      return "size mismatch";
    case AH_DOMAIN_ERROR:
      return "domain error";
    case AH_RESOURCE_ERROR:
      return "resource error";
    case AH_CONSISTENCY_ERROR:
      return "consistency error";
    case AH_NUMERIC_ERROR:
      return "numeric error";
    case AH_IO_ERROR:
      return "i/o error";
    case AH_INTERNAL_ERROR:
      return "internal error";
    default:
      return "unknown status";
  }
}

const char* ah_last_error(void) { return g_last_error.c_str(); }

void ah_string_free(char* s) { std::free(s); }

int ah_depth_limit(void) { return limit(); }

ah_status ah_set_depth_limit(int new_limit) {
  return guard([&] {
    require(new_limit >= 1 && new_limit <= 18, "depth limit must lie in [1, 18]");
    g_depth_limit.store(new_limit, std::memory_order_relaxed);
  });
}

ah_scheme ah_default_scheme(void) { return {AH_SCHEME_RENORMALIZED, kDefaultDelta}; }

ah_measure ah_default_measure(void) { return {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, AH_SHARED_HALF_SUM}; }

ah_status ah_level_create(int m, ah_level** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = nullptr;
    *out = new ah_level{build_level(m, limit())};
  });
}

void ah_level_destroy(ah_level* level) { delete level; }

int ah_level_m(const ah_level* level) { return level ? level->level.level() : 0; }

size_t ah_level_vertex_count(const ah_level* level) { return level ? level->level.size() : 0; }

ah_status ah_level_vertices(const ah_level* level, double* xy, size_t capacity) {
  return guard([&] {
    require(level != nullptr && xy != nullptr, "arguments must not be null");
    const auto vertices = level->level.vertices();
    if (capacity < 2 * vertices.size()) throw Error(ErrorCode::size_mismatch, "vertex buffer too small");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      xy[2 * i] = vertices[i].x;
      xy[2 * i + 1] = vertices[i].y;
    }
  });
}

ah_status ah_level_arc_coordinate(const ah_level* level, size_t chain_index, double* out) {
  return guard([&] {
    require(level != nullptr && out != nullptr, "arguments must not be null");
    *out = level->level.arc_coordinate(ChainIndex{chain_index});
  });
}

ah_status ah_level_csv(const ah_level* level, char** out) {
  return guard([&] {
    require(level != nullptr && out != nullptr, "arguments must not be null");
    *out = duplicate(vertices_csv(level->level));
  });
}

ah_status ah_level_svg(const ah_level* level, const double* overlay, size_t overlay_len, char** out) {
  return guard([&] {
    require(level != nullptr && out != nullptr, "arguments must not be null");
    std::optional<std::span<const double>> values;
    if (overlay != nullptr) values = std::span<const double>(overlay, overlay_len);
    *out = duplicate(render_svg(level->level, values));
  });
}

ah_status ah_trapeze_count(const ah_level* level, size_t* out) {
  return guard([&] {
    require(level != nullptr && out != nullptr, "arguments must not be null");
    *out = trapeze_decomposition(level->level).trapezes.size();
  });
}

ah_status ah_trapeze_area(const ah_level* level, size_t j, double* out) {
  return guard([&] {
    require(level != nullptr && out != nullptr, "arguments must not be null");
    const TrapezeSet set = trapeze_decomposition(level->level);
    if (j < 1 || j > set.trapezes.size()) throw Error(ErrorCode::domain, "trapeze index out of range");
    *out = trapeze_area(set.trapezes[j - 1]);
  });
}

ah_status ah_trapeze_measure(const ah_measure* measure, int m, size_t j, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = trapeze_measure(measure_of(measure), m, j);
  });
}

ah_status ah_integrate(int m, const double* u, size_t n, const ah_measure* measure, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    const VertexFunction f = vertex_function(m, u, n);
    *out = integrate(build_level(m, limit()), f, measure_of(measure));
  });
}

ah_status ah_spline_integral(int m, size_t chain_index, const ah_measure* measure, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    check_depth(m);
    *out = spline_integral(m, ChainIndex{chain_index}, measure_of(measure));
  });
}

ah_status ah_conductance(ah_scheme scheme, int m, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = conductance(scheme_of(scheme), m);
  });
}

ah_status ah_energy(int m, const double* u, const double* v, size_t n, ah_scheme scheme, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = energy(vertex_function(m, u, n), vertex_function(m, v, n), scheme_of(scheme));
  });
}

ah_status ah_harmonic_extension(int m_from, const double* u, size_t n, int m_to, double* out, size_t out_n) {
  return guard([&] {
    const VertexFunction ext = harmonic_extension(vertex_function(m_from, u, n), m_to, limit());
    copy_out(ext.values(), out, out_n);
  });
}

ah_status ah_energy_ratio(int m, const double* u, size_t n, ah_scheme scheme, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    check_depth(m + 1);
    *out = energy_ratio(vertex_function(m, u, n), scheme_of(scheme));
  });
}

ah_status ah_energy_sequence_csv(const double boundary[4], int m_max, const ah_scheme* schemes, size_t n_schemes,
                                 char** out) {
  return guard([&] {
    require(boundary != nullptr && schemes != nullptr && out != nullptr, "arguments must not be null");
    const VertexFunction data = vertex_function(1, boundary, 4);
    std::vector<EnergySequenceReport> sequences;
    for (std::size_t i = 0; i < n_schemes; ++i) {
      sequences.push_back(normalized_energy_sequence(data, m_max, scheme_of(schemes[i]), limit()));
    }
    *out = duplicate(energy_csv(sequences));
  });
}

ah_status ah_vertex_function_csv(int m, const double* u, size_t n, char** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = duplicate(vertex_function_csv(vertex_function(m, u, n)));
  });
}

ah_status ah_graph_laplacian(int m, const double* u, size_t n, double* out, size_t out_n) {
  return guard([&] { copy_out(graph_laplacian_apply(vertex_function(m, u, n)).values(), out, out_n); });
}

ah_status ah_pointwise_laplacian(int m, const double* u, size_t n, ah_scheme scheme, const ah_measure* measure,
                                 double* out, size_t out_n) {
  return guard([&] {
    const LaplacianField field = pointwise_laplacian(vertex_function(m, u, n), scheme_of(scheme), measure_of(measure));
    copy_out(field.values(), out, out_n);
  });
}

ah_status ah_pointwise_laplacian_csv(int m, const double* u, size_t n, ah_scheme scheme, const ah_measure* measure,
                                     char** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = duplicate(laplacian_csv(pointwise_laplacian(vertex_function(m, u, n), scheme_of(scheme), measure_of(measure))));
  });
}

ah_status ah_summation_by_parts(int m, const double* u, const double* v, size_t n, ah_scheme scheme,
                                double* residual) {
  return guard([&] {
    require(residual != nullptr, "residual must not be null");
    *residual = summation_by_parts_check(vertex_function(m, u, n), vertex_function(m, v, n), scheme_of(scheme));
  });
}

ah_status ah_spectrum_create(int m, ah_method method, ah_boundary boundary, ah_spectrum** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = nullptr;
    check_method(method);
    check_depth(m);
    Spectrum s = method == AH_METHOD_EXACT ? dirichlet_spectrum_exact(m, boundary_of(boundary))
                                           : dirichlet_spectrum_numeric(m, boundary_of(boundary), limit());
    *out = new ah_spectrum{std::move(s)};
  });
}

void ah_spectrum_destroy(ah_spectrum* spectrum) { delete spectrum; }

size_t ah_spectrum_size(const ah_spectrum* spectrum) { return spectrum ? spectrum->spectrum.eigenvalues.size() : 0; }

ah_status ah_spectrum_values(const ah_spectrum* spectrum, double* out, size_t capacity) {
  return guard([&] {
    require(spectrum != nullptr && out != nullptr, "arguments must not be null");
    const auto& values = spectrum->spectrum.eigenvalues;
    if (capacity < values.size()) throw Error(ErrorCode::size_mismatch, "eigenvalue buffer too small");
    std::copy(values.begin(), values.end(), out);
  });
}

ah_status ah_spectrum_csv(const ah_spectrum* spectrum, char** out) {
  return guard([&] {
    require(spectrum != nullptr && out != nullptr, "arguments must not be null");
    *out = duplicate(spectrum_csv(spectrum->spectrum));
  });
}

ah_status ah_dirichlet_eigenfunction(int m, size_t block, size_t k, double* eigenvalue, double* out, size_t out_n) {
  return guard([&] {
    require(eigenvalue != nullptr, "eigenvalue must not be null");
    check_depth(m);
    const auto [lambda, u] = dirichlet_eigenfunction(m, block, k, Boundary::v1, limit());
    copy_out(u.values(), out, out_n);
    *eigenvalue = lambda;
  });
}

ah_status ah_forbidden_check(int m, int* absent, double* margin) {
  return guard([&] {
    require(absent != nullptr && margin != nullptr, "arguments must not be null");
    const ForbiddenReport r = forbidden_check(m, limit());
    *absent = r.absent ? 1 : 0;
    *margin = r.margin;
  });
}

ah_status ah_phi(double x, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = phi(x);
  });
}

ah_status ah_phi_inverse(double y, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = phi_inverse(y);
  });
}

ah_status ah_decimate_down(double lambda, double* out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    *out = decimate_down(lambda);
  });
}

ah_status ah_decimate_up(double parent, double children[3]) {
  return guard([&] {
    require(children != nullptr, "children must not be null");
    const DecimationBranches b = decimate_up(parent);
    std::copy(b.children.begin(), b.children.end(), children);
  });
}

ah_status ah_decimate_up_csv(double parent, int significant_digits, char** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    require(significant_digits >= 1 && significant_digits <= 17, "significant digits must lie in [1, 17]");
    *out = duplicate(decimation_csv(decimate_up(parent), significant_digits));
  });
}

ah_status ah_extend_eigenfunction(int m_from, const double* u, size_t n, double parent, double child, double* out,
                                  size_t out_n) {
  return guard([&] {
    check_depth(m_from + 1);
    copy_out(extend_eigenfunction(vertex_function(m_from, u, n), parent, child).values(), out, out_n);
  });
}

ah_status ah_counting_csv(int m_max, ah_method method, ah_scaling scaling, size_t grid_points, char** out) {
  return guard([&] {
    require(out != nullptr, "out must not be null");
    const std::vector<Spectrum> spectra = spectra_up_to(2, m_max, method);
    const CountingSeries series = counting_function(spectra, scaling_of(scaling), grid_points);
    *out = duplicate(counting_csv(grid_points == 0 ? series.level_samples : series.grid, series.mode));
  });
}

ah_status ah_weyl_fit(int m_min, int m_max, ah_scaling scaling, double* alpha, double* residual) {
  return guard([&] {
    require(alpha != nullptr && residual != nullptr, "arguments must not be null");
    const std::vector<Spectrum> spectra = spectra_up_to(m_min, m_max, AH_METHOD_EXACT);
    const WeylFit fit = weyl_fit(counting_function(spectra, scaling_of(scaling), 0));
    *alpha = fit.alpha;
    *residual = fit.residual;
  });
}

ah_status ah_report(int depth, ah_format format, char** out) {
  ah_status status = AH_OK;
  const ah_status outer = guard([&] {
    require(out != nullptr, "out must not be null");
    *out = nullptr;
    require(format == AH_FORMAT_JSON || format == AH_FORMAT_TEXT, "unknown format");
    check_depth(depth);
    const ReportSummary report = build_report(depth);
    *out = duplicate(format == AH_FORMAT_TEXT ? report_to_text(report) : report_to_json(report));
    if (report.had_error) {
      g_last_error = "one or more report sections aborted";
      status = AH_NUMERIC_ERROR;
    }
  });
  return outer != AH_OK ? outer : status;
}

}  // extern "C"
