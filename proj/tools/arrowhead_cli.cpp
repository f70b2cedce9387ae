// arrowhead: command-line front end over the C API.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "arrowhead/arrowhead.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(ah_status status) {
  switch (status) {
    case AH_OK:
      return kExitOk;
    case AH_NUMERIC_ERROR:
    case AH_CONSISTENCY_ERROR:
    case AH_INTERNAL_ERROR:
      return kExitNumeric;
    default:
      return kExitUsage;
  }
}

void check(ah_status status) {
  if (status != AH_OK) {
    throw Failure{exit_code_for(status), std::string(ah_status_name(status)) + ": " + ah_last_error()};
  }
}

struct CString {
  char* p = nullptr;
  ~CString() { ah_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

// Output sink: standard output, or a file replaced atomically once the
// content is complete. The target directory is probed before any work runs.
class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {
    if (path_.empty() || path_ == "-") return;
    const fs::path target(path_);
    if (fs::is_directory(target)) throw Failure{kExitUsage, "output path is a directory: " + path_};
    tmp_ = target;
    tmp_ += ".tmp." + std::to_string(::getpid());
    std::ofstream probe(tmp_, std::ios::binary | std::ios::trunc);
    if (!probe) throw Failure{kExitUsage, "cannot write " + path_};
  }

  ~Output() {
    if (!tmp_.empty() && !committed_) {
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }

  void write(const std::string& content) {
    if (tmp_.empty()) {
      std::cout << content;
      std::cout.flush();
      return;
    }
    {
      std::ofstream out(tmp_, std::ios::binary | std::ios::trunc);
      out << content;
      out.close();
      if (!out) throw Failure{kExitUsage, "write failed for " + path_};
    }
    std::error_code ec;
    fs::rename(tmp_, path_, ec);
    if (ec) throw Failure{kExitUsage, "cannot rename into " + path_ + ": " + ec.message()};
    committed_ = true;
  }

 private:
  std::string path_;
  fs::path tmp_;
  bool committed_ = false;
};

std::size_t vertex_count(int m) {
  std::size_t n = 1;
  for (int i = 0; i < m; ++i) n *= 3;
  return n + 1;
}

ah_scheme parse_scheme(const std::string& name, double delta) {
  ah_scheme s = ah_default_scheme();
  if (name == "raw") {
    s.kind = AH_SCHEME_RAW;
  } else if (name == "geometric") {
    s.kind = AH_SCHEME_GEOMETRIC;
  } else {
    s.kind = AH_SCHEME_RENORMALIZED;
  }
  if (!std::isnan(delta)) s.delta = delta;
  return s;
}

std::vector<double> sample(int m, const std::string& function) {
  const std::size_t n = vertex_count(m);
  std::vector<double> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(n - 1);
    if (function == "quadratic") {
      u[i] = s * (1.0 - s);
    } else if (function == "sine") {
      u[i] = std::sin(std::numbers::pi * s);
    } else {
      u[i] = s;
    }
  }
  return u;
}

struct Options {
  int level = 2;
  int max_level = 5;
  int depth = 5;
  std::string out;
  std::vector<std::string> schemes;
  double delta = std::nan("");
  std::vector<double> weights;
  bool additive = false;
  std::vector<double> boundary{0.0, 1.0, 0.0, 1.0};
  std::string method = "numeric";
  std::string dirichlet = "v1";
  std::optional<double> up;
  std::optional<double> down;
  int digits = 12;
  std::string scaling = "geometric";
  std::size_t grid = 0;
  std::string format = "json";
  std::string function = "quadratic";
  bool eigen_overlay = false;
  std::size_t eigen_block = 0;
  std::size_t eigen_mode = 1;
};

ah_measure measure_of(const Options& o) {
  ah_measure m = ah_default_measure();
  if (!o.weights.empty()) {
    if (o.weights.size() != 3) throw Failure{kExitUsage, "--weights needs three values"};
    for (int i = 0; i < 3; ++i) m.weights[i] = o.weights[static_cast<std::size_t>(i)];
  }
  m.shared_rule = o.additive ? AH_SHARED_ADDITIVE : AH_SHARED_HALF_SUM;
  return m;
}

void run_build(const Options& o) {
  Output out(o.out);
  ah_level* raw = nullptr;
  check(ah_level_create(o.level, &raw));
  std::unique_ptr<ah_level, decltype(&ah_level_destroy)> level(raw, &ah_level_destroy);
  CString csv;
  check(ah_level_csv(level.get(), &csv.p));
  out.write(csv.str());
}

void run_render(const Options& o) {
  Output out(o.out);
  ah_level* raw = nullptr;
  check(ah_level_create(o.level, &raw));
  std::unique_ptr<ah_level, decltype(&ah_level_destroy)> level(raw, &ah_level_destroy);
  std::vector<double> overlay;
  if (o.eigen_overlay) {
    overlay.resize(vertex_count(o.level));
    double lambda = 0.0;
    check(ah_dirichlet_eigenfunction(o.level, o.eigen_block, o.eigen_mode, &lambda, overlay.data(), overlay.size()));
    std::cerr << "overlay eigenvalue " << lambda << '\n';
  }
  CString svg;
  check(ah_level_svg(level.get(), overlay.empty() ? nullptr : overlay.data(), overlay.size(), &svg.p));
  out.write(svg.str());
}

void run_energy(const Options& o) {
  Output out(o.out);
  if (o.boundary.size() != 4) throw Failure{kExitUsage, "--boundary needs four values"};
  std::vector<std::string> names = o.schemes;
  if (names.empty()) names = {"raw", "geometric", "renormalized"};
  std::vector<ah_scheme> schemes;
  for (const auto& name : names) schemes.push_back(parse_scheme(name, o.delta));
  CString csv;
  check(ah_energy_sequence_csv(o.boundary.data(), o.max_level, schemes.data(), schemes.size(), &csv.p));
  out.write(csv.str());
}

void run_harmonic(const Options& o) {
  Output out(o.out);
  if (o.boundary.size() != 4) throw Failure{kExitUsage, "--boundary needs four values"};
  std::vector<double> ext(vertex_count(o.level));
  check(ah_harmonic_extension(1, o.boundary.data(), 4, o.level, ext.data(), ext.size()));
  CString csv;
  check(ah_vertex_function_csv(o.level, ext.data(), ext.size(), &csv.p));
  out.write(csv.str());
}

void run_laplacian(const Options& o) {
  Output out(o.out);
  const std::vector<double> u = sample(o.level, o.function);
  const ah_measure measure = measure_of(o);
  const ah_scheme scheme = parse_scheme(o.schemes.empty() ? "renormalized" : o.schemes.front(), o.delta);
  CString csv;
  check(ah_pointwise_laplacian_csv(o.level, u.data(), u.size(), scheme, &measure, &csv.p));
  out.write(csv.str());
}

void run_spectrum(const Options& o) {
  Output out(o.out);
  const ah_method method = o.method == "exact" ? AH_METHOD_EXACT : AH_METHOD_NUMERIC;
  const ah_boundary boundary = o.dirichlet == "v0" ? AH_BOUNDARY_V0 : AH_BOUNDARY_V1;
  ah_spectrum* raw = nullptr;
  check(ah_spectrum_create(o.level, method, boundary, &raw));
  std::unique_ptr<ah_spectrum, decltype(&ah_spectrum_destroy)> spectrum(raw, &ah_spectrum_destroy);
  CString csv;
  check(ah_spectrum_csv(spectrum.get(), &csv.p));
  out.write(csv.str());
}

void run_decimate(const Options& o) {
  if (o.up.has_value() == o.down.has_value()) throw Failure{kExitUsage, "give exactly one of --up or --down"};
  Output out(o.out);
  if (o.up) {
    CString csv;
    check(ah_decimate_up_csv(*o.up, o.digits, &csv.p));
    out.write(csv.str());
    return;
  }
  double parent = 0.0;
  check(ah_decimate_down(*o.down, &parent));
  char child_text[64];
  char parent_text[64];
  std::snprintf(child_text, sizeof child_text, "%.*g", o.digits, *o.down);
  std::snprintf(parent_text, sizeof parent_text, "%.*g", o.digits, parent);
  out.write("child,parent\n" + std::string(child_text) + ',' + std::string(parent_text) + '\n');
}

void run_counting(const Options& o) {
  Output out(o.out);
  const ah_method method = o.method == "exact" ? AH_METHOD_EXACT : AH_METHOD_NUMERIC;
  const ah_scaling scaling = o.scaling == "arclength" ? AH_SCALING_ARCLENGTH : AH_SCALING_GEOMETRIC;
  CString csv;
  check(ah_counting_csv(o.max_level, method, scaling, o.grid, &csv.p));
  out.write(csv.str());
}

int run_report(const Options& o) {
  Output out(o.out);
  CString doc;
  const ah_status status = ah_report(o.depth, o.format == "text" ? AH_FORMAT_TEXT : AH_FORMAT_JSON, &doc.p);
  if (doc.p != nullptr) out.write(doc.str());
  if (status != AH_OK) {
    std::cerr << "arrowhead: " << ah_status_name(status) << ": " << ah_last_error() << '\n';
    return exit_code_for(status);
  }
  return kExitOk;
}

void apply_depth_limit_override() {
  const char* env = std::getenv("ARROWHEAD_DEPTH_LIMIT");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  errno = 0;
  const long value = std::strtol(env, &end, 10);
  if (errno != 0 || *end != '\0') throw Failure{kExitUsage, "ARROWHEAD_DEPTH_LIMIT is not an integer"};
  check(ah_set_depth_limit(static_cast<int>(value)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sierpinski arrowhead curve: graphs, energies, Laplacians and spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ah_version()));

  Options o;
  const std::vector<std::string> scheme_names{"raw", "geometric", "renormalized"};

  auto add_out = [&](CLI::App* cmd) { cmd->add_option("-o,--out", o.out, "output file (default: standard output)"); };
  auto add_level = [&](CLI::App* cmd) {
    cmd->add_option("-l,--level", o.level, "approximation level m")->check(CLI::Range(0, 64));
  };
  auto add_measure = [&](CLI::App* cmd) {
    cmd->add_option("--weights", o.weights, "self-similar weights w1,w2,w3")->delimiter(',')->expected(3);
    cmd->add_flag("--additive", o.additive, "shared-vertex spline mass (1/4)(mu+mu') instead of (1/8)(mu+mu')");
  };
  auto add_delta = [&](CLI::App* cmd) { cmd->add_option("--delta", o.delta, "exponent of the geometric scheme"); };

  auto* build = app.add_subcommand("build", "vertices of V_m as CSV");
  add_level(build);
  add_out(build);

  auto* render = app.add_subcommand("render", "SVG of the level-m chain");
  add_level(render);
  add_out(render);
  render->add_flag("--eigen", o.eigen_overlay, "color vertices by a Dirichlet eigenfunction");
  render->add_option("--eigen-block", o.eigen_block, "eigenfunction block 0..2")->check(CLI::Range(0, 2));
  render->add_option("--eigen-mode", o.eigen_mode, "eigenfunction mode k >= 1")->check(CLI::PositiveNumber);

  auto* energy = app.add_subcommand("energy", "energies of harmonic extensions of V_1 data");
  energy->add_option("--boundary", o.boundary, "values at A,B,C,D")->delimiter(',')->expected(4);
  energy->add_option("--max-level", o.max_level, "last level")->check(CLI::Range(1, 64));
  energy->add_option("--scheme", o.schemes, "conductance scheme (repeatable)")->check(CLI::IsMember(scheme_names));
  add_delta(energy);
  add_out(energy);

  auto* harmonic = app.add_subcommand("harmonic", "harmonic extension of V_1 data to level m");
  harmonic->add_option("--boundary", o.boundary, "values at A,B,C,D")->delimiter(',')->expected(4);
  add_level(harmonic);
  add_out(harmonic);

  auto* laplacian = app.add_subcommand("laplacian", "pointwise Laplacian of a sampled function");
  add_level(laplacian);
  laplacian->add_option("--function", o.function, "sampled function of the arc coordinate s")
      ->check(CLI::IsMember({"quadratic", "sine", "linear"}));
  laplacian->add_option("--scheme", o.schemes, "conductance scheme")->check(CLI::IsMember(scheme_names))->expected(1);
  add_delta(laplacian);
  add_measure(laplacian);
  add_out(laplacian);

  auto* spectrum = app.add_subcommand("spectrum", "Dirichlet spectrum of -Delta_m");
  add_level(spectrum);
  spectrum->add_option("--method", o.method, "numeric or exact")->check(CLI::IsMember({"numeric", "exact"}));
  spectrum->add_option("--dirichlet", o.dirichlet, "boundary set v1 or v0")->check(CLI::IsMember({"v1", "v0"}));
  add_out(spectrum);

  auto* decimate = app.add_subcommand("decimate", "spectral decimation maps");
  decimate->add_option("--up", o.up, "parent eigenvalue in [0,4]; prints its three children");
  decimate->add_option("--down", o.down, "child eigenvalue; prints its parent");
  decimate->add_option("--digits", o.digits, "significant digits")->check(CLI::Range(1, 17));
  add_out(decimate);

  auto* counting = app.add_subcommand("counting", "eigenvalue counting function");
  counting->add_option("--max-level", o.max_level, "deepest level")->check(CLI::Range(2, 64));
  counting->add_option("--scaling", o.scaling, "geometric or arclength")
      ->check(CLI::IsMember({"geometric", "arclength"}));
  counting->add_option("--grid", o.grid, "log-grid points on the deepest level (0: one row per level)");
  counting->add_option("--method", o.method, "numeric or exact")->check(CLI::IsMember({"numeric", "exact"}));
  add_out(counting);

  auto* report = app.add_subcommand("report", "full reproduction sweep");
  report->add_option("--depth", o.depth, "deepest level (>= 4)")->check(CLI::Range(4, 64));
  report->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  add_out(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_depth_limit_override();
    if (build->parsed()) run_build(o);
    if (render->parsed()) run_render(o);
    if (energy->parsed()) run_energy(o);
    if (harmonic->parsed()) run_harmonic(o);
    if (laplacian->parsed()) run_laplacian(o);
    if (spectrum->parsed()) run_spectrum(o);
    if (decimate->parsed()) run_decimate(o);
    if (counting->parsed()) run_counting(o);
    if (report->parsed()) return run_report(o);
  } catch (const Failure& f) {
    std::cerr << "arrowhead: " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "arrowhead: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
