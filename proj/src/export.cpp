#include "arrowhead/export.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "arrowhead/error.hpp"
#include "arrowhead/format.hpp"

namespace arrowhead {

namespace {

constexpr int kSvgDigits = 10;

std::string svg_number(double v) { return format_double(v, kSvgDigits); }

}  // namespace

std::string vertices_csv(const GraphLevel& level) {
  std::string out = "chain_index,x,y,arc_coordinate\n";
  for (std::size_t i = 1; i <= level.size(); ++i) {
    const Point2& p = level.vertex(ChainIndex{i});
    out += std::to_string(i) + ',' + format_double(p.x) + ',' + format_double(p.y) + ',' +
           format_double(level.arc_coordinate(ChainIndex{i})) + '\n';
  }
  return out;
}

std::string vertex_function_csv(const VertexFunction& u) {
  std::string out = "chain_index,arc_coordinate,value\n";
  const double step = 1.0 / static_cast<double>(u.size() - 1);
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += std::to_string(i + 1) + ',' + format_double(static_cast<double>(i) * step) + ',' +
           format_double(u[i]) + '\n';
  }
  return out;
}

std::string energy_csv(std::span<const EnergySequenceReport> sequences) {
  std::string out = "level,scheme,energy,ratio\n";
  for (const auto& seq : sequences) {
    for (std::size_t k = 0; k < seq.energies.size(); ++k) {
      out += std::to_string(k + 1) + ',' + std::string(to_string(seq.scheme.kind)) + ',' +
             format_double(seq.energies[k]) + ',';
      if (k > 0) out += format_double(seq.ratios[k - 1]);
      out += '\n';
    }
  }
  return out;
}

std::string laplacian_csv(const LaplacianField& field) {
  std::string out = "chain_index,arc_coordinate,f_m\n";
  const double step = 1.0 / static_cast<double>(pow3(field.level()));
  for (std::size_t k = 0; k < field.values().size(); ++k) {
    const std::size_t position = k + 1;
    out += std::to_string(position + 1) + ',' + format_double(static_cast<double>(position) * step) + ',' +
           format_double(field.values()[k]) + '\n';
  }
  return out;
}

std::string spectrum_csv(const Spectrum& spectrum) {
  std::string out = "level,k,eigenvalue,multiplicity\n";
  std::size_t k = 1;
  for (const auto& [value, multiplicity] : spectrum.grouped()) {
    out += std::to_string(spectrum.level) + ',' + std::to_string(k++) + ',' + format_double(value) + ',' +
           std::to_string(multiplicity) + '\n';
  }
  return out;
}

std::string decimation_csv(const DecimationBranches& branches, int significant_digits) {
  std::string out = "parent,branch,child\n";
  for (std::size_t n = 0; n < branches.children.size(); ++n) {
    out += format_double(branches.parent, significant_digits) + ',' + std::to_string(n) + ',' +
           format_double(branches.children[n], significant_digits) + '\n';
  }
  return out;
}

std::string counting_csv(std::span<const CountingSample> samples, ScalingMode mode) {
  std::string out = "x,N,scaling\n";
  for (const auto& s : samples) {
    out += format_double(s.x) + ',' + std::to_string(s.count) + ',' + std::string(to_string(mode)) + '\n';
  }
  return out;
}

std::string render_svg(const GraphLevel& level, std::optional<std::span<const double>> overlay) {
  if (overlay && overlay->size() != level.size()) {
    throw Error(ErrorCode::size_mismatch, "render_svg: overlay must have one value per vertex");
  }
  const double stroke = std::max(0.0005, 0.004 * std::pow(0.8, level.level()));

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.05 -0.05 1.1 1.0\" width=\"1100\" height=\"1000\">\n"
     << "<title>arrowhead curve, level " << level.level() << ", " << level.size() << " vertices</title>\n"
     << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"" << svg_number(stroke) << "\" points=\"";
  bool first = true;
  for (const Point2& p : level.vertices()) {
    if (!first) os << ' ';
    first = false;
    os << svg_number(p.x) << ',' << svg_number(0.9 - p.y);
  }
  os << "\"/>\n";

  if (overlay) {
    const auto [lo_it, hi_it] = std::minmax_element(overlay->begin(), overlay->end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double radius = std::max(0.001, 0.6 * std::ldexp(1.0, -level.level()) / 2.0);
    os << "<g stroke=\"none\">\n";
    for (std::size_t i = 0; i < level.size(); ++i) {
      const double t = hi > lo ? ((*overlay)[i] - lo) / (hi - lo) : 0.5;
      const int red = static_cast<int>(std::lround(255.0 * t));
      const int blue = 255 - red;
      const Point2& p = level.vertices()[i];
      os << "<circle cx=\"" << svg_number(p.x) << "\" cy=\"" << svg_number(0.9 - p.y) << "\" r=\""
         << svg_number(radius) << "\" fill=\"rgb(" << red << ",0," << blue << ")\"/>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace arrowhead
