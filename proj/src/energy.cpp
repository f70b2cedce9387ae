#include "arrowhead/energy.hpp"

#include <cmath>
#include <limits>

#include "arrowhead/error.hpp"

namespace arrowhead {

std::string_view to_string(SchemeKind kind) noexcept {
  switch (kind) {
    case SchemeKind::raw:
      return "raw";
    case SchemeKind::geometric:
      return "geometric";
    case SchemeKind::renormalized:
      return "renormalized";
  }
  return "unknown";
}

SchemeKind scheme_from_string(std::string_view name) {
  if (name == "raw") return SchemeKind::raw;
  if (name == "geometric") return SchemeKind::geometric;
  if (name == "renormalized") return SchemeKind::renormalized;
  throw Error(ErrorCode::invalid_argument, "unknown conductance scheme '" + std::string(name) + "'");
}

double conductance(const ConductanceScheme& scheme, int m) {
  if (m < 1) throw Error(ErrorCode::domain, "conductance: level must be >= 1");
  switch (scheme.kind) {
    case SchemeKind::raw:
      return 1.0;
    case SchemeKind::geometric:
      if (!(scheme.delta > 0.0)) throw Error(ErrorCode::invalid_argument, "conductance: delta must be > 0");
      return std::pow(4.0, m * scheme.delta);
    case SchemeKind::renormalized:
      return static_cast<double>(pow3(m));
  }
  throw Error(ErrorCode::internal, "conductance: unknown scheme");
}

double energy(const VertexFunction& u, const VertexFunction& v, const ConductanceScheme& scheme) {
  require_same_level(u, v);
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) sum += (u[i + 1] - u[i]) * (v[i + 1] - v[i]);
  return conductance(scheme, u.level()) * sum;
}

double energy(const VertexFunction& u, const ConductanceScheme& scheme) { return energy(u, u, scheme); }

VertexFunction harmonic_extension_step(const VertexFunction& u) {
  std::vector<double> out;
  out.reserve(3 * (u.size() - 1) + 1);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double a = u[i];
    const double b = u[i + 1];
    out.push_back(a);
    out.push_back((2.0 * a + b) / 3.0);
    out.push_back((a + 2.0 * b) / 3.0);
  }
  out.push_back(u[u.size() - 1]);
  return VertexFunction(u.level() + 1, std::move(out));
}

VertexFunction harmonic_extension(const VertexFunction& u, int target_level, int depth_limit) {
  if (target_level < u.level()) throw Error(ErrorCode::domain, "harmonic_extension: target below source level");
  if (target_level > depth_limit) throw Error(ErrorCode::resource, "harmonic_extension: target exceeds depth limit");
  VertexFunction current = u;
  while (current.level() < target_level) current = harmonic_extension_step(current);
  return current;
}

double energy_ratio(const VertexFunction& u, const ConductanceScheme& scheme) {
  if (u.is_constant()) throw Error(ErrorCode::domain, "energy_ratio: undefined for constant data");
  return energy(harmonic_extension_step(u), scheme) / energy(u, scheme);
}

EnergySequenceReport normalized_energy_sequence(const VertexFunction& boundary, int m_max,
                                                const ConductanceScheme& scheme, int depth_limit) {
  if (boundary.level() != 1) throw Error(ErrorCode::size_mismatch, "energy sequence: boundary data must live on V_1");
  if (m_max < 1) throw Error(ErrorCode::domain, "energy sequence: m_max must be >= 1");
  if (m_max > depth_limit) throw Error(ErrorCode::resource, "energy sequence: m_max exceeds depth limit");

  EnergySequenceReport report;
  report.scheme = scheme;
  VertexFunction current = boundary;
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1) current = harmonic_extension_step(current);
    report.energies.push_back(energy(current, scheme));
  }
  for (std::size_t k = 0; k + 1 < report.energies.size(); ++k) {
    const double prev = report.energies[k];
    report.ratios.push_back(prev == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                        : report.energies[k + 1] / prev);
  }
  return report;
}

VertexFunction markov_cut(const VertexFunction& u) {
  VertexFunction out = u;
  for (double& x : out.values()) x = std::min(std::max(x, 0.0), 1.0);
  return out;
}

}  // namespace arrowhead
