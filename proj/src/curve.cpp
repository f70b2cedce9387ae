#include "arrowhead/curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string_view>

#include "arrowhead/error.hpp"

namespace arrowhead {

namespace {

constexpr double kHalfSqrt3 = 0.86602540378443864676;
constexpr double kGeometryTolerance = 1e-12;

// Unit steps of the six headings k * 60deg, in the lattice basis
// e1 = (1, 0), e2 = (1/2, sqrt(3)/2). Keeping the turtle on integer lattice
// coordinates makes every vertex exact up to the final scaling.
constexpr std::array<std::array<std::int64_t, 2>, 6> kLatticeStep{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1},
}};

constexpr std::string_view kRuleX = "YF+XF+Y";
constexpr std::string_view kRuleY = "XF-YF-X";

struct Turtle {
  std::int64_t a = 0;
  std::int64_t b = 0;
  int heading = 0;  // multiple of 60 degrees, in [0, 6)
  std::vector<std::array<std::int64_t, 2>> trace;

  void forward() {
    a += kLatticeStep[heading][0];
    b += kLatticeStep[heading][1];
    trace.push_back({a, b});
  }
  void turn(int delta) { heading = ((heading + delta) % 6 + 6) % 6; }
};

void interpret(char symbol, int depth, Turtle& turtle) {
  switch (symbol) {
    case 'X':
    case 'Y':
      if (depth > 0) {
        for (char c : symbol == 'X' ? kRuleX : kRuleY) interpret(c, depth - 1, turtle);
      }
      break;
    case 'F':
      turtle.forward();
      break;
    case '+':
      turtle.turn(-1);
      break;
    case '-':
      turtle.turn(+1);
      break;
    default:
      throw Error(ErrorCode::internal, "unexpected L-system symbol");
  }
}

double cross(Point2 u, Point2 v) { return u.x * v.y - u.y * v.x; }
Point2 minus(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace

std::uint64_t pow3(int exponent) {
  if (exponent < 0 || exponent > 40) {
    throw Error(ErrorCode::domain, "pow3: exponent out of range");
  }
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) r *= 3;
  return r;
}

std::uint64_t vertex_count(int m) {
  if (m < 1) throw Error(ErrorCode::domain, "vertex_count: level must be >= 1");
  return pow3(m) + 1;
}

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

SimilarityMap SimilarityMap::make(Point2 center, double ratio, double angle) {
  if (!std::isfinite(center.x) || !std::isfinite(center.y) || !std::isfinite(ratio) ||
      !std::isfinite(angle) || !(ratio > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "similarity requires finite fields and ratio > 0");
  }
  return SimilarityMap{center, ratio, angle};
}

Point2 apply_similarity(const SimilarityMap& map, Point2 p) {
  const double c = std::cos(map.angle);
  const double s = std::sin(map.angle);
  const double dx = p.x - map.center.x;
  const double dy = p.y - map.center.y;
  return {map.center.x + map.ratio * (c * dx - s * dy),
          map.center.y + map.ratio * (s * dx + c * dy)};
}

GraphLevel::GraphLevel(int level, std::vector<Point2> vertices)
    : level_(level),
      arc_step_(1.0 / static_cast<double>(pow3(level))),
      vertices_(std::move(vertices)) {}

const Point2& GraphLevel::vertex(ChainIndex i) const {
  if (i.value < 1 || i.value > vertices_.size()) {
    throw Error(ErrorCode::domain, "chain index out of range");
  }
  return vertices_[i.value - 1];
}

double GraphLevel::arc_coordinate(ChainIndex i) const {
  if (i.value < 1 || i.value > vertices_.size()) {
    throw Error(ErrorCode::domain, "chain index out of range");
  }
  return static_cast<double>(i.value - 1) * arc_step_;
}

GraphLevel build_level(int m, int depth_limit) {
  if (m < 1) throw Error(ErrorCode::domain, "build_level: level must be >= 1");
  if (m > depth_limit) {
    std::ostringstream os;
    os << "build_level: level " << m << " exceeds depth limit " << depth_limit;
    throw Error(ErrorCode::resource, os.str());
  }

  Turtle turtle;
  turtle.heading = (m % 2 == 1) ? 1 : 0;
  turtle.trace.reserve(static_cast<std::size_t>(vertex_count(m)));
  turtle.trace.push_back({0, 0});
  interpret('X', m, turtle);
  interpret('F', m, turtle);

  const double step = std::ldexp(1.0, -m);
  std::vector<Point2> vertices;
  vertices.reserve(turtle.trace.size());
  for (const auto& [a, b] : turtle.trace) {
    vertices.push_back({step * (static_cast<double>(a) + 0.5 * static_cast<double>(b)),
                        step * (static_cast<double>(b) * kHalfSqrt3)});
  }
  if (vertices.size() != vertex_count(m)) {
    throw Error(ErrorCode::internal, "build_level: unexpected vertex count");
  }
  return GraphLevel(m, std::move(vertices));
}

double expected_trapeze_area(int m) {
  return 3.0 * std::numbers::sqrt3 / 16.0 * std::pow(4.0, 1 - m);
}

double trapeze_area(const Trapeze& t) {
  double twice = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    const Point2& p = t.corners[i];
    const Point2& q = t.corners[(i + 1) % 4];
    twice += p.x * q.y - q.x * p.y;
  }
  const double area = 0.5 * std::abs(twice);
  if (!(area > kGeometryTolerance * expected_trapeze_area(t.level))) {
    throw Error(ErrorCode::consistency, "degenerate trapeze");
  }
  return area;
}

TrapezeSet trapeze_decomposition(const GraphLevel& level) {
  const int m = level.level();
  const std::size_t count = static_cast<std::size_t>(pow3(m - 1));
  const double side = std::ldexp(1.0, -m);

  TrapezeSet set;
  set.level = m;
  set.trapezes.reserve(count);
  for (std::size_t j = 1; j <= count; ++j) {
    Trapeze t;
    t.level = m;
    t.index = j;
    for (std::size_t k = 0; k < 4; ++k) {
      t.vertex_indices[k] = ChainIndex{3 * (j - 1) + 1 + k};
      t.corners[k] = level.vertex(t.vertex_indices[k]);
    }
    const auto& [v1, v2, v3, v4] = t.corners;
    const bool parallel = std::abs(cross(minus(v4, v1), minus(v3, v2))) <= kGeometryTolerance;
    const bool base_ratio = std::abs(distance(v1, v4) - 2.0 * distance(v2, v3)) <= kGeometryTolerance;
    const bool legs = std::abs(distance(v1, v2) - side) <= kGeometryTolerance &&
                      std::abs(distance(v3, v4) - side) <= kGeometryTolerance &&
                      std::abs(distance(v2, v3) - side) <= kGeometryTolerance;
    if (!(parallel && base_ratio && legs)) {
      std::ostringstream os;
      os << "trapeze T_{" << m << "," << j << "} violates the isosceles-trapezoid invariants";
      throw Error(ErrorCode::consistency, os.str());
    }
    t.area = trapeze_area(t);
    set.trapezes.push_back(t);
  }
  return set;
}

PointIndex::PointIndex(std::span<const Point2> points, double tolerance)
    : tolerance_(tolerance), points_(points.begin(), points.end()) {
  cells_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) cells_.emplace_back(cell_of(points_[i]), i);
  std::sort(cells_.begin(), cells_.end());
}

PointIndex::Cell PointIndex::cell_of(Point2 p) const {
  return {static_cast<std::int64_t>(std::floor(p.x / tolerance_)),
          static_cast<std::int64_t>(std::floor(p.y / tolerance_))};
}

bool PointIndex::contains(Point2 p) const {
  const Cell c = cell_of(p);
  for (std::int64_t dx = -1; dx <= 1; ++dx) {
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      const Cell probe{c.ix + dx, c.iy + dy};
      auto it = std::lower_bound(cells_.begin(), cells_.end(), probe,
                                 [](const auto& entry, const Cell& key) { return entry.first < key; });
      for (; it != cells_.end() && it->first == probe; ++it) {
        const Point2& q = points_[it->second];
        if (std::abs(q.x - p.x) <= tolerance_ && std::abs(q.y - p.y) <= tolerance_) return true;
      }
    }
  }
  return false;
}

std::vector<Point2> deduplicate(std::vector<Point2> points, double tolerance) {
  auto lex = [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::sort(points.begin(), points.end(), lex);

  // Kept points bucketed by tolerance-sized cells; a new point is compared
  // against its 3x3 cell neighbourhood only.
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> buckets;
  std::vector<Point2> kept;
  kept.reserve(points.size());
  for (const Point2& p : points) {
    const std::int64_t ix = static_cast<std::int64_t>(std::floor(p.x / tolerance));
    const std::int64_t iy = static_cast<std::int64_t>(std::floor(p.y / tolerance));
    bool duplicate = false;
    for (std::int64_t dx = -1; dx <= 1 && !duplicate; ++dx) {
      for (std::int64_t dy = -1; dy <= 1 && !duplicate; ++dy) {
        auto it = buckets.find({ix + dx, iy + dy});
        if (it == buckets.end()) continue;
        for (std::size_t k : it->second) {
          if (std::abs(kept[k].x - p.x) <= tolerance && std::abs(kept[k].y - p.y) <= tolerance) {
            duplicate = true;
            break;
          }
        }
      }
    }
    if (!duplicate) {
      buckets[{ix, iy}].push_back(kept.size());
      kept.push_back(p);
    }
  }
  return kept;
}

std::vector<Point2> gasket_vertices(int m, int depth_limit) {
  if (m < 0) throw Error(ErrorCode::domain, "gasket_vertices: level must be >= 0");
  if (m > depth_limit) throw Error(ErrorCode::resource, "gasket_vertices: level exceeds depth limit");

  const std::array<SimilarityMap, 3> homothecies{
      SimilarityMap{corners::A, 0.5, 0.0},
      SimilarityMap{corners::D, 0.5, 0.0},
      SimilarityMap{corners::E, 0.5, 0.0},
  };
  std::vector<Point2> current{corners::A, corners::D, corners::E};
  for (int level = 0; level < m; ++level) {
    std::vector<Point2> next;
    next.reserve(3 * current.size());
    for (const auto& h : homothecies) {
      for (const Point2& p : current) next.push_back(apply_similarity(h, p));
    }
    current = deduplicate(std::move(next));
  }
  return deduplicate(std::move(current));
}

SubsetReport subset_checks(int m, int depth_limit) {
  if (m < 1) throw Error(ErrorCode::domain, "subset_checks: level must be >= 1");
  const GraphLevel coarse = build_level(m, depth_limit);
  const GraphLevel fine = build_level(m + 1, depth_limit);
  const std::vector<Point2> gasket = gasket_vertices(m, depth_limit);

  SubsetReport report;
  report.level = m;
  report.chain_size = coarse.size();
  report.gasket_size = gasket.size();

  const PointIndex fine_index(fine.vertices());
  const PointIndex gasket_index(gasket);
  report.nested = true;
  report.in_gasket = true;
  for (const Point2& p : coarse.vertices()) {
    const bool in_fine = fine_index.contains(p);
    const bool in_gasket = gasket_index.contains(p);
    if ((!in_fine || !in_gasket) && !report.witness) report.witness = p;
    report.nested = report.nested && in_fine;
    report.in_gasket = report.in_gasket && in_gasket;
  }
  report.strictly_smaller = deduplicate({coarse.vertices().begin(), coarse.vertices().end()}).size() <
                            gasket.size();
  return report;
}

}  // namespace arrowhead
