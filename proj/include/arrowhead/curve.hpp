#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace arrowhead {

inline constexpr int kDefaultDepthLimit = 12;

// Absolute coordinate tolerance used whenever two points are identified.
inline constexpr double kPointTolerance = 1e-9;

std::uint64_t pow3(int exponent);

// 3^m + 1, the number of vertices of the level-m chain.
std::uint64_t vertex_count(int m);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(Point2 a, Point2 b);

namespace corners {
inline constexpr Point2 A{0.0, 0.0};
inline constexpr Point2 D{1.0, 0.0};
// Apex of the reference triangle, (1/2, sqrt(3)/2).
inline constexpr Point2 E{0.5, 0.86602540378443864676};
}  // namespace corners

// p -> center + ratio * R(angle) * (p - center)
struct SimilarityMap {
  Point2 center;
  double ratio = 1.0;
  double angle = 0.0;

  // Throws invalid_argument unless ratio > 0 and all fields are finite.
  static SimilarityMap make(Point2 center, double ratio, double angle);
};

Point2 apply_similarity(const SimilarityMap& map, Point2 p);

// One-based position along the chain X_1 ... X_{3^m+1}.
struct ChainIndex {
  std::size_t value = 1;

  friend auto operator<=>(const ChainIndex&, const ChainIndex&) = default;
};

// Ordered vertex chain V_m of the level-m arrowhead graph. Edges join
// consecutive vertices and are left implicit.
class GraphLevel {
 public:
  int level() const noexcept { return level_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  double arc_step() const noexcept { return arc_step_; }

  const Point2& vertex(ChainIndex i) const;

  // (i - 1) / 3^m; throws domain when i is out of range.
  double arc_coordinate(ChainIndex i) const;

 private:
  friend GraphLevel build_level(int m, int depth_limit);

  GraphLevel(int level, std::vector<Point2> vertices);

  int level_ = 0;
  double arc_step_ = 0.0;
  std::vector<Point2> vertices_;
};

// Turtle interpretation of the m-fold rewrite of the axiom XF under
//   X -> YF+XF+Y,  Y -> XF-YF-X
// with step 2^-m and turns of pi/3. '+' turns clockwise; the initial heading
// is 60 degrees for odd m and 0 for even m, which puts the chain on A -> D
// in the upper half-plane. Throws resource when m exceeds depth_limit.
GraphLevel build_level(int m, int depth_limit = kDefaultDepthLimit);

struct Trapeze {
  int level = 1;
  std::size_t index = 1;  // j in [1, 3^(m-1)]
  std::array<ChainIndex, 4> vertex_indices{};
  std::array<Point2, 4> corners{};
  double area = 0.0;
};

struct TrapezeSet {
  int level = 1;
  std::vector<Trapeze> trapezes;
};

// Shoelace area of the four corners. Throws consistency on a degenerate cell.
double trapeze_area(const Trapeze& t);

// (3 sqrt 3 / 16) 4^(1-m)
double expected_trapeze_area(int m);

// Cells T_{m,j} spanned by chain indices 3(j-1)+1 .. 3(j-1)+4. Every cell is
// checked against the isosceles-trapezoid invariants (1e-12); a violation
// throws consistency.
TrapezeSet trapeze_decomposition(const GraphLevel& level);

// Union over words of length m in {H1, H2, H3} of w({A, D, E}), where H_i is
// the half-ratio homothety centred at A, D and E respectively. m = 0 gives the
// three corners. Order is lexicographic in (x, y).
std::vector<Point2> gasket_vertices(int m, int depth_limit = kDefaultDepthLimit);

struct SubsetReport {
  int level = 1;
  bool nested = false;          // V_m inside V_{m+1}
  bool in_gasket = false;       // V_m inside gasket_vertices(m)
  bool strictly_smaller = false;
  std::size_t chain_size = 0;
  std::size_t gasket_size = 0;
  std::optional<Point2> witness;  // first offending vertex, if any

  bool ok() const noexcept { return nested && in_gasket && strictly_smaller; }
};

SubsetReport subset_checks(int m, int depth_limit = kDefaultDepthLimit);

// Tolerance-aware point lookup over a fixed point cloud.
class PointIndex {
 public:
  explicit PointIndex(std::span<const Point2> points, double tolerance = kPointTolerance);

  bool contains(Point2 p) const;
  std::size_t size() const noexcept { return points_.size(); }

 private:
  struct Cell {
    std::int64_t ix;
    std::int64_t iy;
    friend auto operator<=>(const Cell&, const Cell&) = default;
  };
  Cell cell_of(Point2 p) const;

  double tolerance_;
  std::vector<Point2> points_;
  std::vector<std::pair<Cell, std::size_t>> cells_;  // sorted by cell
};

// Tolerance-deduplicated copy of the input, sorted lexicographically.
std::vector<Point2> deduplicate(std::vector<Point2> points, double tolerance = kPointTolerance);

}  // namespace arrowhead
