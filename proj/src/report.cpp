#include "arrowhead/report.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "arrowhead/curve.hpp"
#include "arrowhead/energy.hpp"
#include "arrowhead/error.hpp"
#include "arrowhead/format.hpp"
#include "arrowhead/laplacian.hpp"
#include "arrowhead/measure.hpp"
#include "arrowhead/spectral.hpp"

namespace arrowhead {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 0x5eed'a770'4ead;

class Recorder {
 public:
  explicit Recorder(ReportSummary& report) : report_(report) {}

  void section(std::string name) { section_ = std::move(name); }

  // |measured - expected| <= tol
  void near(const std::string& key, double measured, double expected, double tol) {
    push(key, measured, tol, std::abs(measured - expected) <= tol);
  }
  // measured <= tol, for residual-style entries
  void bounded(const std::string& key, double measured, double tol) { push(key, measured, tol, measured <= tol); }
  void exact(const std::string& key, std::int64_t measured, std::int64_t expected) {
    report_.entries.push_back({section_, key, measured, 0.0, measured == expected ? CheckStatus::pass : CheckStatus::fail});
  }
  void holds(const std::string& key, bool value) {
    report_.entries.push_back({section_, key, value, std::nullopt, value ? CheckStatus::pass : CheckStatus::fail});
  }
  void info(const std::string& key, double value) {
    report_.entries.push_back({section_, key, value, std::nullopt, CheckStatus::info});
  }
  void info(const std::string& key, std::string value) {
    report_.entries.push_back({section_, key, std::move(value), std::nullopt, CheckStatus::info});
  }

  void guarded(const std::string& name, const std::function<void()>& body) {
    section(name);
    try {
      body();
    } catch (const std::exception& e) {
      report_.had_error = true;
      report_.entries.push_back({section_, "error", std::string(e.what()), std::nullopt, CheckStatus::error});
    }
  }

 private:
  void push(const std::string& key, double measured, double tol, bool ok) {
    report_.entries.push_back({section_, key, measured, tol, ok ? CheckStatus::pass : CheckStatus::fail});
  }

  ReportSummary& report_;
  std::string section_;
};

std::string level_key(const std::string& stem, int m) { return stem + "_level_" + std::to_string(m); }

VertexFunction random_function(int m, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> values(vertex_count(m));
  for (double& x : values) x = dist(rng);
  return VertexFunction(m, std::move(values));
}

const std::array<ConductanceScheme, 3> kSchemes{
    ConductanceScheme{SchemeKind::raw, kDefaultDelta},
    ConductanceScheme{SchemeKind::geometric, kDefaultDelta},
    ConductanceScheme{SchemeKind::renormalized, kDefaultDelta},
};

void curve_section(Recorder& rec, int depth) {
  const double h = std::numbers::sqrt3;
  const std::vector<Point2> v2_fixture{{0, 0},         {0.25, 0},         {0.375, h / 8}, {0.25, h / 4},
                                       {0.375, 3 * h / 8}, {0.625, 3 * h / 8}, {0.75, h / 4},  {0.625, h / 8},
                                       {0.75, 0},      {1, 0}};
  const std::vector<Point2> v1_fixture{{0, 0}, {0.25, h / 4}, {0.75, h / 4}, {1, 0}};
  auto fixture_error = [](const GraphLevel& level, const std::vector<Point2>& fixture) {
    double worst = 0.0;
    for (std::size_t i = 0; i < fixture.size(); ++i) {
      worst = std::max({worst, std::abs(level.vertices()[i].x - fixture[i].x),
                        std::abs(level.vertices()[i].y - fixture[i].y)});
    }
    return worst;
  };
  rec.bounded("fixture_v1_max_error", fixture_error(build_level(1), v1_fixture), 1e-12);
  rec.bounded("fixture_v2_max_error", fixture_error(build_level(2), v2_fixture), 1e-12);

  for (int m = 1; m <= depth; ++m) {
    const GraphLevel level = build_level(m);
    rec.exact(level_key("vertex_count", m), static_cast<std::int64_t>(level.size()),
              static_cast<std::int64_t>(pow3(m) + 1));
    double worst = 0.0;
    const double step = std::ldexp(1.0, -m);
    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
      worst = std::max(worst, std::abs(distance(level.vertices()[i], level.vertices()[i + 1]) - step));
    }
    rec.bounded(level_key("edge_length_max_error", m), worst, 1e-12);
  }
  for (int m = 1; m < depth; ++m) {
    const SubsetReport subsets = subset_checks(m);
    rec.holds(level_key("nested_in_next", m), subsets.nested);
    rec.holds(level_key("strict_gasket_subset", m), subsets.in_gasket && subsets.strictly_smaller);
  }
  for (int m = 1; m <= depth; ++m) {
    const TrapezeSet set = trapeze_decomposition(build_level(m));
    rec.exact(level_key("trapeze_count", m), static_cast<std::int64_t>(set.trapezes.size()),
              static_cast<std::int64_t>(pow3(m - 1)));
    double worst = 0.0;
    for (const Trapeze& t : set.trapezes) worst = std::max(worst, std::abs(t.area - expected_trapeze_area(m)));
    rec.bounded(level_key("trapeze_area_max_error", m), worst, 1e-12);
  }
}

void measure_section(Recorder& rec, int depth) {
  const MeasureModel model;
  const auto w = measure_weights(model);
  rec.info("weights", format_double(w[0]) + "," + format_double(w[1]) + "," + format_double(w[2]));
  for (int m = 1; m <= depth; ++m) {
    double mass = 0.0;
    for (std::size_t j = 1; j <= pow3(m - 1); ++j) mass += trapeze_measure(model, m, j);
    rec.near(level_key("total_mass", m), mass, 1.0, 1e-12);
  }
  for (int m = 1; m <= depth; ++m) {
    const double expected = std::pow(3.0, 1 - m) / 4.0;
    double worst = 0.0;
    for (std::size_t i = 2; i <= pow3(m); ++i) {
      worst = std::max(worst, std::abs(spline_integral(m, ChainIndex{i}, model) - expected));
    }
    rec.bounded(level_key("spline_integral_max_deviation", m), worst, 1e-12);
  }
}

void energy_section(Recorder& rec, int depth) {
  std::mt19937_64 rng(kSeed);
  double raw_worst = 0.0;
  double geometric_worst = 0.0;
  double renormalized_worst = 0.0;
  double local_rule_worst = 0.0;
  double raw_sample = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + trial % std::min(depth, 5);
    VertexFunction u = random_function(m, rng);
    const VertexFunction ext = harmonic_extension_step(u);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      local_rule_worst = std::max({local_rule_worst, std::abs(ext[3 * i + 1] - (2 * u[i] + u[i + 1]) / 3),
                                   std::abs(ext[3 * i + 2] - (u[i] + 2 * u[i + 1]) / 3)});
    }
    const double raw = energy_ratio(u, kSchemes[0]);
    if (trial == 0) raw_sample = raw;
    raw_worst = std::max(raw_worst, std::abs(raw - 1.0 / 3.0));
    geometric_worst = std::max(geometric_worst, std::abs(energy_ratio(u, kSchemes[1]) - 5.0 / 3.0));
    renormalized_worst = std::max(renormalized_worst, std::abs(energy_ratio(u, kSchemes[2]) - 1.0));
  }
  rec.bounded("harmonic_local_rule_max_error", local_rule_worst, 1e-15);
  rec.near("energy_ratio_raw", raw_sample, 1.0 / 3.0, 1e-12);
  rec.bounded("energy_ratio_raw_max_error", raw_worst, 1e-12);
  rec.bounded("energy_ratio_geometric_max_error", geometric_worst, 1e-12);
  rec.bounded("energy_ratio_renormalized_max_error", renormalized_worst, 1e-12);

  const VertexFunction boundary(1, {1.0, 0.0, 0.0, 0.0});
  const EnergySequenceReport seq = normalized_energy_sequence(boundary, std::min(depth, 6), kSchemes[2]);
  double spread = 0.0;
  for (double e : seq.energies) spread = std::max(spread, std::abs(e - seq.energies.front()));
  rec.info("renormalized_energy_of_indicator_A", seq.energies.front());
  rec.bounded("renormalized_energy_spread", spread, 1e-10);

  std::int64_t violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const VertexFunction u = random_function(1 + trial % 4, rng, -0.5, 1.5);
    for (const auto& scheme : kSchemes) {
      if (energy(markov_cut(u), scheme) > energy(u, scheme)) ++violations;
    }
  }
  rec.exact("markov_violations", violations, 0);
}

void laplacian_section(Recorder& rec, int depth) {
  const auto quadratic = [](double s) { return s * (1.0 - s); };
  const auto wave = [](double s) { return std::sin(kPi * s); };

  for (int m = 2; m <= std::min(depth, 6); ++m) {
    const LaplacianField f = pointwise_laplacian(VertexFunction::sample(m, quadratic));
    double worst = 0.0;
    for (std::size_t k = 0; k < f.values().size(); ++k) {
      if (!is_v1_position(m, k + 1)) worst = std::max(worst, std::abs(f.values()[k] + 8.0 / 3.0));
    }
    rec.bounded(level_key("quadratic_fm_max_error", m), worst, 1e-9);
  }

  const int wave_level = std::min(depth, 5);
  const VertexFunction u = VertexFunction::sample(wave_level, wave);
  const LaplacianField f = pointwise_laplacian(u);
  double relative = 0.0;
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    if (is_v1_position(wave_level, k + 1)) continue;
    const double target = -4.0 / 3.0 * kPi * kPi * u[k + 1];
    relative = std::max(relative, std::abs(f.values()[k] - target) / std::abs(target));
  }
  rec.bounded(level_key("sine_fm_relative_error", wave_level), relative, 1e-3);

  const auto rows = convergence_probe(wave, 2, depth);
  for (const auto& row : rows) {
    if (std::isnan(row.decay)) continue;
    const bool ok = row.decay >= 1.0 / 11.0 && row.decay <= 1.0 / 7.0;
    rec.holds(level_key("sine_decay_in_band", row.level), ok);
    rec.info(level_key("sine_decay", row.level), row.decay);
  }

  std::mt19937_64 rng(kSeed + 1);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + trial % (std::min(depth, 5) - 1);
    const VertexFunction a = random_function(m, rng);
    VertexFunction b = random_function(m, rng);
    for (std::size_t p : v1_positions(m)) b[p] = 0.0;
    for (const auto& scheme : kSchemes) worst = std::max(worst, summation_by_parts_check(a, b, scheme));
  }
  rec.bounded("summation_by_parts_max_residual", worst, 1e-10);
}

void spectral_section(Recorder& rec, int depth) {
  const Spectrum s2 = dirichlet_spectrum_numeric(2);
  std::string listing;
  for (const auto& [value, mult] : s2.grouped()) {
    if (!listing.empty()) listing += ";";
    listing += format_double(value, 12) + "x" + std::to_string(mult);
  }
  rec.info("delta2_spectrum", listing);
  const std::vector<double> expected2{1, 1, 1, 3, 3, 3};
  double worst2 = 0.0;
  for (std::size_t i = 0; i < expected2.size(); ++i) worst2 = std::max(worst2, std::abs(s2.eigenvalues[i] - expected2[i]));
  rec.bounded("delta2_spectrum_max_error", worst2, 1e-10);

  for (int m = 2; m <= depth; ++m) {
    const Spectrum numeric = dirichlet_spectrum_numeric(m);
    const Spectrum exact = dirichlet_spectrum_exact(m);
    rec.exact(level_key("dirichlet_count", m), static_cast<std::int64_t>(numeric.eigenvalues.size()),
              static_cast<std::int64_t>(pow3(m) - 3));
    double worst = 0.0;
    for (std::size_t i = 0; i < numeric.eigenvalues.size(); ++i) {
      worst = std::max(worst, std::abs(numeric.eigenvalues[i] - exact.eigenvalues[i]));
    }
    rec.bounded(level_key("oracle_max_difference", m), worst, 1e-9);
    rec.info(level_key("forbidden_margin", m), forbidden_check(m).margin);
    rec.holds(level_key("forbidden_absent", m), forbidden_check(m).margin > 1e-3);
  }

  auto nearest = [](const std::vector<double>& values, double x) {
    auto it = std::lower_bound(values.begin(), values.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != values.end()) best = std::abs(*it - x);
    if (it != values.begin()) best = std::min(best, std::abs(*std::prev(it) - x));
    return best;
  };
  double down = 0.0;
  double up = 0.0;
  for (int m = 3; m <= std::min(depth, 6); ++m) {
    const Spectrum fine = dirichlet_spectrum_numeric(m);
    std::vector<double> coarse = dirichlet_spectrum_numeric(m - 1).eigenvalues;
    std::vector<double> coarse_closed = coarse;
    coarse_closed.push_back(0.0);
    coarse_closed.push_back(4.0);
    std::sort(coarse_closed.begin(), coarse_closed.end());
    for (double lambda : fine.eigenvalues) down = std::max(down, nearest(coarse_closed, decimate_down(lambda)));
    for (double parent : coarse) {
      for (double child : decimate_up(parent).children) up = std::max(up, nearest(fine.eigenvalues, child));
    }
  }
  rec.bounded("decimation_down_closure_max_residual", down, 1e-9);
  rec.bounded("decimation_up_closure_max_residual", up, 1e-9);

  std::mt19937_64 rng(kSeed + 2);
  std::uniform_real_distribution<double> angle(0.0, kPi);
  double conjugacy = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double theta = angle(rng);
    conjugacy = std::max(conjugacy, std::abs(decimate_down(2 - 2 * std::cos(theta)) - (2 - 2 * std::cos(3 * theta))));
  }
  rec.bounded("triple_angle_conjugacy_max_error", conjugacy, 1e-12);

  std::uniform_real_distribution<double> outer(4.01, 50.0);
  double roundtrip = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double x = outer(rng);
    roundtrip = std::max(roundtrip, std::abs(phi_inverse(phi(x)) - x));
  }
  rec.bounded("phi_roundtrip_max_error", roundtrip, 1e-10);

  double extension = 0.0;
  for (std::size_t block = 0; block < 3; ++block) {
    for (std::size_t k = 1; k <= block_size(2, Boundary::v1); ++k) {
      const auto [parent, u] = dirichlet_eigenfunction(2, block, k);
      for (double child : decimate_up(parent).children) {
        const double t = 2.0 - child;
        if (std::abs(t * t - 1.0) < 1e-6) continue;
        extension = std::max(extension, eigen_residual(extend_eigenfunction(u, parent, child), child));
      }
    }
  }
  rec.bounded("eigenfunction_extension_max_residual", extension, 1e-10);
}

void counting_section(Recorder& rec, int depth) {
  std::vector<Spectrum> spectra;
  for (int m = 2; m <= depth; ++m) spectra.push_back(dirichlet_spectrum_exact(m));

  const CountingSeries geometric = counting_function(spectra, ScalingMode::geometric);
  for (const auto& sample : geometric.level_samples) {
    rec.exact(level_key("count_identity", sample.level), static_cast<std::int64_t>(sample.count),
              static_cast<std::int64_t>(pow3(sample.level) - 3));
  }

  const int first = depth >= 5 ? 3 : 2;
  const std::span<const Spectrum> fit_range(spectra.begin() + (first - 2), spectra.end());
  const WeylFit fit_geometric = weyl_fit(counting_function(fit_range, ScalingMode::geometric));
  const WeylFit fit_arclength = weyl_fit(counting_function(fit_range, ScalingMode::arclength));
  rec.info("fit_levels", std::to_string(first) + ".." + std::to_string(depth));
  rec.near("alpha_geometric_fit", fit_geometric.alpha, reference::kAlphaGeometric, 0.02 * reference::kAlphaGeometric);
  rec.info("alpha_geometric_fit_residual", fit_geometric.residual);
  rec.near("alpha_arclength_fit", fit_arclength.alpha, reference::kAlphaArclength, 0.02 * reference::kAlphaArclength);
  rec.info("alpha_arclength_fit_residual", fit_arclength.residual);
  rec.info("alpha_printed_formula", reference::kAlphaPrinted);
  rec.info("alpha_gasket", reference::kAlphaGasket);
}

void constants_section(Recorder& rec) {
  rec.info("delta", kDefaultDelta);
  rec.info("gasket_dimension", reference::kGasketDimension);
  rec.info("rho", std::pow(4.0, kDefaultDelta) / 3.0);
  rec.info("ramification_inverse", 1.0 / 3.0);
  rec.info("alpha_identity_geometric", reference::kAlphaGeometric);
  rec.info("alpha_identity_arclength", reference::kAlphaArclength);
}

void append_value(std::string& out, const ReportEntry& e) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          out += format_double(v);
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          out += std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          out += v ? "true" : "false";
        } else {
          out += v;
        }
      },
      e.value);
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string json_number(double v) {
  if (std::isfinite(v)) return format_double(v);
  return "null";
}

}  // namespace

const char* to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::info:
      return "info";
    case CheckStatus::error:
      return "error";
  }
  return "unknown";
}

std::size_t ReportSummary::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const ReportEntry& e) { return e.status == status; }));
}

ReportSummary build_report(int depth) {
  if (depth < 4) throw Error(ErrorCode::domain, "report: depth must be >= 4");
  if (depth > kDefaultDepthLimit) throw Error(ErrorCode::resource, "report: depth exceeds depth limit");

  ReportSummary report;
  report.depth = depth;
  Recorder rec(report);
  rec.guarded("constants", [&] { constants_section(rec); });
  rec.guarded("curve", [&] { curve_section(rec, depth); });
  rec.guarded("measure", [&] { measure_section(rec, depth); });
  rec.guarded("energy", [&] { energy_section(rec, depth); });
  rec.guarded("laplacian", [&] { laplacian_section(rec, depth); });
  rec.guarded("spectral", [&] { spectral_section(rec, depth); });
  rec.guarded("counting", [&] { counting_section(rec, depth); });
  return report;
}

std::string report_to_json(const ReportSummary& report) {
  std::string out = "{\n  \"depth\": " + std::to_string(report.depth) + ",\n";
  std::string current;
  for (const ReportEntry& e : report.entries) {
    if (e.section != current) {
      out += current.empty() ? "" : "\n  },\n";
      out += "  " + json_string(e.section) + ": {\n";
      current = e.section;
    } else {
      out += ",\n";
    }
    out += "    " + json_string(e.key) + ": {\"value\": ";
    if (std::holds_alternative<std::string>(e.value)) {
      out += json_string(std::get<std::string>(e.value));
    } else if (std::holds_alternative<double>(e.value)) {
      out += json_number(std::get<double>(e.value));
    } else {
      append_value(out, e);
    }
    out += ", \"tolerance\": " + (e.tolerance ? json_number(*e.tolerance) : std::string("null"));
    out += ", \"status\": \"" + std::string(to_string(e.status)) + "\"}";
  }
  if (!current.empty()) out += "\n  },\n";
  out += "  \"summary\": {\"pass\": " + std::to_string(report.count(CheckStatus::pass)) +
         ", \"fail\": " + std::to_string(report.count(CheckStatus::fail)) +
         ", \"info\": " + std::to_string(report.count(CheckStatus::info)) +
         ", \"error\": " + std::to_string(report.count(CheckStatus::error)) + "}\n}\n";
  return out;
}

std::string report_to_text(const ReportSummary& report) {
  std::string out = "depth: " + std::to_string(report.depth) + "\n";
  std::string current;
  for (const ReportEntry& e : report.entries) {
    if (e.section != current) {
      out += "[" + e.section + "]\n";
      current = e.section;
    }
    out += e.key + ": ";
    append_value(out, e);
    out += std::string(" ") + to_string(e.status);
    if (e.tolerance) out += " (tol " + format_double(*e.tolerance, 3) + ")";
    out += '\n';
  }
  out += "[summary]\npass: " + std::to_string(report.count(CheckStatus::pass)) +
         "\nfail: " + std::to_string(report.count(CheckStatus::fail)) +
         "\nerror: " + std::to_string(report.count(CheckStatus::error)) + "\n";
  return out;
}

}  // namespace arrowhead
