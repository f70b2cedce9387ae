#pragma once

#include <string_view>
#include <vector>

#include "arrowhead/vertex_function.hpp"

namespace arrowhead {

// ln 5 / ln 4
inline constexpr double kDefaultDelta = 1.16096404744368117393;

enum class SchemeKind { raw, geometric, renormalized };

std::string_view to_string(SchemeKind kind) noexcept;
// Throws invalid_argument on an unknown name.
SchemeKind scheme_from_string(std::string_view name);

// Edge-weight rule for the level-m energy:
//   raw           c_m = 1
//   geometric     c_m = 4^(m delta)
//   renormalized  c_m = 3^m   (harmonic extension preserves energy)
struct ConductanceScheme {
  SchemeKind kind = SchemeKind::renormalized;
  double delta = kDefaultDelta;
};

double conductance(const ConductanceScheme& scheme, int m);

// E_m(u, v) = c_m * sum over consecutive edges of (u(X)-u(Y)) (v(X)-v(Y)).
// Summed in chain order.
double energy(const VertexFunction& u, const VertexFunction& v, const ConductanceScheme& scheme = {});
double energy(const VertexFunction& u, const ConductanceScheme& scheme = {});

// Minimal-energy extension to level m+1: each edge (a, b) of V_m receives the
// interior values (2a+b)/3 and (a+2b)/3. The minimiser does not depend on the
// scheme because the conductance is uniform on a level.
VertexFunction harmonic_extension_step(const VertexFunction& u);

VertexFunction harmonic_extension(const VertexFunction& u, int target_level,
                                  int depth_limit = kDefaultDepthLimit);

// E_{m+1}(extension) / E_m(u). Throws domain for constant u.
double energy_ratio(const VertexFunction& u, const ConductanceScheme& scheme);

struct EnergySequenceReport {
  ConductanceScheme scheme;
  std::vector<double> energies;  // energies[k] is E at level k+1
  std::vector<double> ratios;    // ratios[k] = energies[k+1] / energies[k]; NaN when undefined
};

// Energies of the successive harmonic extensions of V_1 data, m = 1..m_max.
EnergySequenceReport normalized_energy_sequence(const VertexFunction& boundary, int m_max,
                                                const ConductanceScheme& scheme,
                                                int depth_limit = kDefaultDepthLimit);

// Pointwise clamp to [0, 1].
VertexFunction markov_cut(const VertexFunction& u);

}  // namespace arrowhead
