#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "arrowhead/curve.hpp"
#include "arrowhead/error.hpp"
#include "support.hpp"

using namespace arrowhead;

namespace {

const double r3 = std::sqrt(3.0);

void require_points(const GraphLevel& level, const std::vector<Point2>& expected) {
  REQUIRE(level.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(std::abs(level.vertices()[i].x - expected[i].x) <= 1e-12);
    CHECK(std::abs(level.vertices()[i].y - expected[i].y) <= 1e-12);
  }
}

}  // namespace

TEST_CASE("similarity examples") {
  const Point2 b = apply_similarity(SimilarityMap::make(corners::A, 0.5, std::numbers::pi / 3), corners::D);
  CHECK(b.x == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(b.y == doctest::Approx(r3 / 4).epsilon(1e-14));

  const Point2 c = apply_similarity(SimilarityMap::make(corners::D, 0.5, -std::numbers::pi / 3), corners::A);
  CHECK(c.x == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(c.y == doctest::Approx(r3 / 4).epsilon(1e-14));

  const Point2 q{0.3, -0.7};
  const Point2 same = apply_similarity(SimilarityMap::make({5.0, 2.0}, 1.0, 0.0), q);
  CHECK(same.x == doctest::Approx(q.x).epsilon(1e-15));
  CHECK(same.y == doctest::Approx(q.y).epsilon(1e-15));

  CHECK_THROWS_AS(SimilarityMap::make(corners::A, 0.0, 0.0), Error);
}

TEST_CASE("fixtures V1 and V2") {
  require_points(build_level(1), {{0, 0}, {0.25, r3 / 4}, {0.75, r3 / 4}, {1, 0}});
  require_points(build_level(2), {{0, 0},
                                  {0.25, 0},
                                  {0.375, r3 / 8},
                                  {0.25, r3 / 4},
                                  {0.375, 3 * r3 / 8},
                                  {0.625, 3 * r3 / 8},
                                  {0.75, r3 / 4},
                                  {0.625, r3 / 8},
                                  {0.75, 0},
                                  {1, 0}});
}

TEST_CASE("vertex counts and endpoints") {
  CHECK(vertex_count(1) == 4);
  CHECK(vertex_count(2) == 10);
  CHECK(vertex_count(4) == 82);
  for (int m = 1; m <= 8; ++m) {
    const GraphLevel level = build_level(m);
    CHECK(level.size() == testing::chain_size(m));
    CHECK(level.vertices().front().x == 0.0);
    CHECK(std::abs(level.vertices().back().x - 1.0) <= 1e-12);
    CHECK(std::abs(level.vertices().back().y) <= 1e-12);
  }
  const GraphLevel five = build_level(5);
  CHECK(five.size() == 244);
}

TEST_CASE("consecutive distances are 2^-m") {
  for (int m = 1; m <= 8; ++m) {
    const GraphLevel level = build_level(m);
    const double h = std::ldexp(1.0, -m);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < level.size(); ++i) {
      const Point2 p = level.vertices()[i];
      const Point2 q = level.vertices()[i + 1];
      worst = std::max(worst, std::abs(std::hypot(q.x - p.x, q.y - p.y) - h));
    }
    CAPTURE(m);
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("chain is self-avoiding") {
  for (int m = 1; m <= 6; ++m) {
    const GraphLevel level = build_level(m);
    std::set<testing::Lattice> seen;
    for (const Point2& p : level.vertices()) seen.insert(testing::to_lattice(p.x, p.y, m));
    CHECK(seen.size() == level.size());
  }
}

TEST_CASE("nesting: vertex k of V_m sits at position 3k of V_{m+1}") {
  for (int m = 1; m <= 6; ++m) {
    const GraphLevel coarse = build_level(m);
    const GraphLevel fine = build_level(m + 1);
    for (std::size_t k = 0; k < coarse.size(); ++k) {
      CHECK(distance(coarse.vertices()[k], fine.vertices()[3 * k]) <= 1e-9);
    }
  }
}

TEST_CASE("arc coordinate") {
  const GraphLevel two = build_level(2);
  CHECK(two.arc_coordinate(ChainIndex{1}) == 0.0);
  CHECK(two.arc_coordinate(ChainIndex{4}) == doctest::Approx(1.0 / 3.0));
  CHECK(build_level(3).arc_coordinate(ChainIndex{28}) == 1.0);
  CHECK_THROWS_AS(two.arc_coordinate(ChainIndex{0}), Error);
  CHECK_THROWS_AS(two.arc_coordinate(ChainIndex{11}), Error);
}

TEST_CASE("depth limit") {
  try {
    build_level(5, 4);
    FAIL("expected resource error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::resource);
  }
  CHECK_THROWS_AS(build_level(0), Error);
}

TEST_CASE("trapeze decomposition") {
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const GraphLevel level = build_level(m);
    const TrapezeSet set = trapeze_decomposition(level);
    REQUIRE(set.trapezes.size() == testing::p3(m - 1));
    const double expected = 3.0 * r3 / 16.0 * std::pow(4.0, 1 - m);
    double total = 0.0;
    std::vector<int> owners(level.size(), 0);
    for (const Trapeze& t : set.trapezes) {
      CHECK(t.vertex_indices[0].value == 3 * (t.index - 1) + 1);
      CHECK(std::abs(trapeze_area(t) - expected) <= 1e-12);
      total += trapeze_area(t);
      for (const ChainIndex c : t.vertex_indices) ++owners[c.value - 1];

      // Independent check: bases on parallel lines, legs equal and half the long base.
      const Point2 a = level.vertex(t.vertex_indices[0]);
      const Point2 b = level.vertex(t.vertex_indices[1]);
      const Point2 c = level.vertex(t.vertex_indices[2]);
      const Point2 d = level.vertex(t.vertex_indices[3]);
      const double cross = (d.x - a.x) * (c.y - b.y) - (d.y - a.y) * (c.x - b.x);
      CHECK(std::abs(cross) <= 1e-12);
      CHECK(std::abs(distance(a, d) - 2.0 * distance(b, c)) <= 1e-12);
      CHECK(std::abs(distance(a, b) - distance(c, d)) <= 1e-12);
    }
    CHECK(std::abs(total - 3.0 * r3 / 16.0 * std::pow(0.75, m - 1)) <= 1e-10);
    for (std::size_t i = 0; i < owners.size(); ++i) {
      const bool shared = i % 3 == 0 && i != 0 && i + 1 != owners.size();
      CHECK(owners[i] == (shared ? 2 : 1));
    }
  }
  CHECK(expected_trapeze_area(1) == doctest::Approx(0.324760).epsilon(1e-6));
  CHECK(expected_trapeze_area(3) / expected_trapeze_area(2) == doctest::Approx(0.25));
}

TEST_CASE("gasket vertices against midpoint subdivision") {
  CHECK(gasket_vertices(0).size() == 3);
  CHECK(gasket_vertices(1).size() == 6);
  CHECK(gasket_vertices(2).size() == 15);
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    const auto oracle = testing::gasket_lattice(m);
    const auto points = gasket_vertices(m);
    CHECK(points.size() == (3 * testing::p3(m) + 3) / 2);
    std::set<testing::Lattice> computed;
    for (const Point2& p : points) computed.insert(testing::to_lattice(p.x, p.y, m));
    CHECK(computed == oracle);
  }
}

TEST_CASE("chain inside gasket, strictly") {
  for (int m = 1; m <= 5; ++m) {
    CAPTURE(m);
    const SubsetReport r = subset_checks(m);
    CHECK(r.ok());
    CHECK_FALSE(r.witness.has_value());

    const auto oracle = testing::gasket_lattice(m);
    const GraphLevel level = build_level(m);
    for (const Point2& p : level.vertices()) {
      const auto [a, b] = testing::to_lattice(p.x, p.y, m);
      const double h = std::ldexp(1.0, -m);
      CHECK(std::abs((static_cast<double>(a) + 0.5 * static_cast<double>(b)) * h - p.x) <= 1e-12);
      CHECK(oracle.count({a, b}) == 1);
    }
    CHECK(level.size() < oracle.size());
  }
}

TEST_CASE("deduplicate and point index") {
  std::vector<Point2> pts{{0.5, 0.5}, {0.5 + 1e-11, 0.5}, {0.1, 0.2}, {0.1, 0.2 - 3e-10}, {0.9, 0.9}};
  const auto unique = deduplicate(pts);
  CHECK(unique.size() == 3);
  CHECK(std::is_sorted(unique.begin(), unique.end(),
                       [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }));
  const PointIndex index(unique);
  CHECK(index.contains({0.5, 0.5 + 5e-10}));
  CHECK_FALSE(index.contains({0.5, 0.5 + 1e-6}));
}

TEST_CASE("property: random similarity maps preserve distance ratios") {
  testing::Gen gen(0x5eed01);
  for (int trial = 0; trial < 200; ++trial) {
    const Point2 center{gen.uniform(-2, 2), gen.uniform(-2, 2)};
    const double ratio = gen.uniform(0.05, 3.0);
    const double angle = gen.uniform(-4.0, 4.0);
    const SimilarityMap map = SimilarityMap::make(center, ratio, angle);
    const Point2 p{gen.uniform(-1, 1), gen.uniform(-1, 1)};
    const Point2 q{gen.uniform(-1, 1), gen.uniform(-1, 1)};
    CHECK(distance(apply_similarity(map, p), apply_similarity(map, q)) ==
          doctest::Approx(ratio * distance(p, q)).epsilon(1e-12));
    const Point2 fixed = apply_similarity(map, center);
    CHECK(distance(fixed, center) <= 1e-12);
  }
}
