#pragma once

#include <array>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "arrowhead/vertex_function.hpp"

namespace arrowhead {

// Vertices carrying the Dirichlet condition u = 0.
enum class Boundary {
  v1,  // A, B, C, D
  v0,  // A, D
};

// Dirichlet eigenvalues of -Delta_m, sorted ascending, repeated by
// multiplicity.
struct Spectrum {
  int level = 0;
  Boundary boundary = Boundary::v1;
  std::vector<double> eigenvalues;

  // Distinct values with their multiplicities; values closer than tol merge.
  std::vector<std::pair<double, std::size_t>> grouped(double tol = 1e-9) const;
};

// Number of independent path segments between consecutive boundary vertices
// and the interior size of each.
std::size_t block_count(Boundary boundary);
std::size_t block_size(int m, Boundary boundary);

// -Delta_m restricted to V_m minus the boundary splits into identical
// tridiagonal blocks (diagonal 2, off-diagonal -1), one per segment. Each
// block is solved independently; throws numeric naming the block if the
// iteration does not converge.
Spectrum dirichlet_spectrum_numeric(int m, Boundary boundary = Boundary::v1,
                                    int depth_limit = kDefaultDepthLimit);

// Closed form: 2 - 2 cos(k pi / (n + 1)), k = 1..n, once per block, with n
// the block size.
Spectrum dirichlet_spectrum_exact(int m, Boundary boundary = Boundary::v1);

// k-th (1-based, ascending) Dirichlet eigenfunction supported on one block,
// computed numerically and normalised to unit Euclidean norm with a positive
// first nonzero entry. Returns the eigenvalue alongside.
std::pair<double, VertexFunction> dirichlet_eigenfunction(int m, std::size_t block, std::size_t k,
                                                          Boundary boundary = Boundary::v1,
                                                          int depth_limit = kDefaultDepthLimit);

// Largest |(-Delta_m u)(X) - lambda u(X)| over X in V_m minus the boundary.
double eigen_residual(const VertexFunction& u, double lambda, Boundary boundary = Boundary::v1);

// Real branch of the decimation function on ]4, +inf[:
// phi(x) = (x - 2 - sqrt((x-2)^2 - 4)) / 2, the root lying in (0, 1).
double phi(double x);
// (y + 1)^2 / y on (0, 1].
double phi_inverse(double y);

// Lambda' = 2 + 3(2 - Lambda) - (2 - Lambda)^3. Conjugate to theta -> 3 theta
// under Lambda = 2 - 2 cos(theta), and to phi(Lambda') = phi(Lambda)^3 on ]4, +inf[.
double decimate_down(double lambda);

struct DecimationBranches {
  double parent = 0.0;
  std::array<double, 3> children{};  // branch n = 0, 1, 2
};

// Children 2 - 2 cos((theta' + 2 pi n) / 3) of a parent in [0, 4].
DecimationBranches decimate_up(double parent);

// Extends a level-(m-1) eigenfunction with eigenvalue parent to level m using
// the child eigenvalue. Throws domain when (2 - child)^2 = 1 and consistency
// when child is not a branch of parent.
VertexFunction extend_eigenfunction(const VertexFunction& u, double parent, double child);

struct ForbiddenReport {
  int level = 0;
  bool absent = false;   // 2 is not in the spectrum
  double margin = 0.0;   // min |Lambda - 2|
};

ForbiddenReport forbidden_check(int m, int depth_limit = kDefaultDepthLimit);

enum class ScalingMode {
  geometric,  // (5/3)^m = 3^-m 4^(m delta)
  arclength,  // 9^m
};

std::string_view to_string(ScalingMode mode) noexcept;
ScalingMode scaling_from_string(std::string_view name);
double scaling_base(ScalingMode mode);

struct CountingSample {
  int level = 0;  // 0 for grid samples
  double x = 0.0;
  std::size_t count = 0;
};

struct CountingSeries {
  ScalingMode mode = ScalingMode::geometric;
  // One sample per level: x_m = 4 s^m against the level-m renormalised spectrum.
  std::vector<CountingSample> level_samples;
  // Counting function of the deepest level on a log-spaced grid.
  std::vector<CountingSample> grid;
  // Renormalised spectra, one per input level (same order as the input).
  std::vector<std::vector<double>> renormalized;
};

// N(x) = number of renormalised level-m eigenvalues <= x.
std::size_t count_at_most(std::span<const double> sorted_values, double x);

CountingSeries counting_function(std::span<const Spectrum> spectra, ScalingMode mode,
                                 std::size_t grid_points = 64);

struct WeylFit {
  double alpha = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // RMS of the log-log residuals
  std::size_t points = 0;
  double identity_alpha = 0.0;  // ln 3 / ln s for the series' scaling
};

namespace reference {
// ln 3 / ln (5/3)
inline constexpr double kAlphaGeometric = 2.15066010308712351;
inline constexpr double kAlphaArclength = 0.5;
// ln 3 / ln 5
inline constexpr double kAlphaGasket = 0.68260619448598530;
// ln 3 / (delta ln (4/3)) with delta = ln 5 / ln 4
inline constexpr double kAlphaPrinted = 3.28937118054180875;
// ln 3 / ln 2
inline constexpr double kGasketDimension = 1.58496250072115618;
}  // namespace reference

// Least-squares slope of log N(x_m) against log x_m over the level samples.
// Throws invalid_argument with fewer than three levels.
WeylFit weyl_fit(const CountingSeries& series);

struct PeriodicityRow {
  double c = 0.0;
  int level = 0;
  double x = 0.0;
  std::size_t count = 0;
  double ratio = 0.0;  // N(x) / x^alpha
};

// N(c s^m) / (c s^m)^alpha for every c and every level of the series, with
// alpha = ln 3 / ln s and N taken from the level-m spectrum.
std::vector<PeriodicityRow> ratio_periodicity_probe(const CountingSeries& series, std::span<const double> c_grid);

}  // namespace arrowhead
