#pragma once

#include <optional>
#include <span>
#include <string>

#include "arrowhead/curve.hpp"
#include "arrowhead/energy.hpp"
#include "arrowhead/laplacian.hpp"
#include "arrowhead/spectral.hpp"

namespace arrowhead {

// chain_index,x,y,arc_coordinate
std::string vertices_csv(const GraphLevel& level);

// chain_index,arc_coordinate,value
std::string vertex_function_csv(const VertexFunction& u);

// level,scheme,energy,ratio  (ratio empty on the first level of each scheme)
std::string energy_csv(std::span<const EnergySequenceReport> sequences);

// chain_index,arc_coordinate,f_m
std::string laplacian_csv(const LaplacianField& field);

// level,k,eigenvalue,multiplicity  (k indexes distinct eigenvalues)
std::string spectrum_csv(const Spectrum& spectrum);

// parent,branch,child
std::string decimation_csv(const DecimationBranches& branches, int significant_digits = 12);

// x,N,scaling
std::string counting_csv(std::span<const CountingSample> samples, ScalingMode mode);

// Polyline through the chain in the viewBox (-0.05 -0.05 1.1 1.0), screen
// y = 0.9 - y. An overlay adds one marker per vertex coloured on a linear
// blue-to-red ramp between the overlay's minimum and maximum (mid-ramp when
// constant).
std::string render_svg(const GraphLevel& level, std::optional<std::span<const double>> overlay = std::nullopt);

}  // namespace arrowhead
