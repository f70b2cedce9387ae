#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "arrowhead/error.hpp"
#include "arrowhead/laplacian.hpp"
#include "support.hpp"

using namespace arrowhead;

namespace {

constexpr double pi = std::numbers::pi;

double quadratic(double s) { return s * (1.0 - s); }
double sine(double s) { return std::sin(pi * s); }

}  // namespace

TEST_CASE("graph laplacian") {
  const VertexFunction u(1, {1.0, 4.0, 2.0, 0.0});
  const LaplacianField d = graph_laplacian_apply(u);
  REQUIRE(d.values().size() == 2);
  CHECK(d.at(ChainIndex{2}) == 1.0 + 2.0 - 8.0);
  CHECK(d.at(ChainIndex{3}) == 4.0 + 0.0 - 4.0);
  CHECK_THROWS_AS(d.at(ChainIndex{1}), Error);
  CHECK_THROWS_AS(d.at(ChainIndex{4}), Error);
  CHECK(d.sup_norm() == 5.0);

  CHECK(is_harmonic(VertexFunction::sample(4, [](double s) { return 3 * s - 1; })));
  CHECK_FALSE(is_harmonic(VertexFunction::sample(4, quadratic)));
}

TEST_CASE("spline function") {
  const SplineFunction psi = spline_function(3, ChainIndex{7});
  CHECK(psi.values.at(ChainIndex{7}) == 1.0);
  CHECK(psi.integral == doctest::Approx(1.0 / 36.0));
  CHECK_THROWS_AS(spline_function(3, ChainIndex{1}), Error);
}

TEST_CASE("f_m of s(1-s) is -8/3 away from V_1") {
  for (int m = 2; m <= 6; ++m) {
    const LaplacianField f = pointwise_laplacian(VertexFunction::sample(m, quadratic));
    for (std::size_t k = 0; k < f.values().size(); ++k) {
      const std::size_t position = k + 1;
      if (testing::is_v1_slot(m, position)) continue;
      CAPTURE(m);
      CAPTURE(position);
      CHECK(std::abs(f.values()[k] + 8.0 / 3.0) <= 1e-9);
    }
  }
}

TEST_CASE("f_m of sin matches the trigonometric difference oracle") {
  for (int m = 2; m <= 6; ++m) {
    const double h = 1.0 / static_cast<double>(testing::p3(m));
    const double scale = (4.0 / 3.0) * std::pow(9.0, m);
    const LaplacianField f = pointwise_laplacian(VertexFunction::sample(m, sine));
    for (std::size_t k = 0; k < f.values().size(); ++k) {
      const double s = static_cast<double>(k + 1) * h;
      const double oracle = scale * 2.0 * (std::cos(pi * h) - 1.0) * std::sin(pi * s);
      CHECK(std::abs(f.values()[k] - oracle) <= 1e-8 * (1.0 + std::abs(oracle)));
    }
  }
}

TEST_CASE("f_5 of sin is within 1e-3 of -(4/3) pi^2 sin") {
  const int m = 5;
  const LaplacianField f = pointwise_laplacian(VertexFunction::sample(m, sine));
  const double h = 1.0 / static_cast<double>(testing::p3(m));
  double worst = 0.0;
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    const std::size_t position = k + 1;
    if (testing::is_v1_slot(m, position)) continue;
    const double u = std::sin(pi * static_cast<double>(position) * h);
    const double target = -(4.0 / 3.0) * pi * pi * u;
    worst = std::max(worst, std::abs(f.values()[k] - target) / std::abs(target));
  }
  CHECK(worst < 1e-3);
  CHECK(worst == doctest::Approx(pi * pi * h * h / 12.0).epsilon(1e-2));
}

TEST_CASE("convergence probe decays by about 1/9") {
  const auto rows = convergence_probe(sine, 2, 6);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().sup_deviation == 0.0);
  CHECK(std::isnan(rows.front().decay));
  for (std::size_t i = 2; i < rows.size(); ++i) {
    CAPTURE(rows[i].level);
    CHECK(rows[i].decay >= 1.0 / 11.0);
    CHECK(rows[i].decay <= 1.0 / 7.0);
  }
  // The sup sits at the vertex nearest s = 1/2 and approaches (4/3) pi^2.
  for (const auto& row : rows) CHECK(row.sup_value == doctest::Approx(4.0 / 3.0 * pi * pi).epsilon(5e-2));
  CHECK(rows.back().sup_value == doctest::Approx(4.0 / 3.0 * pi * pi).epsilon(1e-3));
  CHECK_THROWS_AS(convergence_probe(sine, 1, 3), Error);
}

TEST_CASE("scheme and measure enter f_m") {
  const VertexFunction u = VertexFunction::sample(3, quadratic);
  const LaplacianField renorm = pointwise_laplacian(u);
  const LaplacianField raw = pointwise_laplacian(u, {SchemeKind::raw, kDefaultDelta});
  for (std::size_t k = 0; k < raw.values().size(); ++k) CHECK(raw.values()[k] * 27.0 == doctest::Approx(renorm.values()[k]));

  const MeasureModel additive = MeasureModel::make({1.0 / 3, 1.0 / 3, 1.0 / 3}, SharedVertexRule::additive);
  const LaplacianField halved = pointwise_laplacian(u, {}, additive);
  CHECK(halved.at(ChainIndex{4}) == doctest::Approx(renorm.at(ChainIndex{4}) / 2.0));
  CHECK(halved.at(ChainIndex{5}) == doctest::Approx(renorm.at(ChainIndex{5})));
}

TEST_CASE("summation by parts") {
  testing::Gen gen(0x5eed09);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    for (int m = 2; m <= 5; ++m) {
      const VertexFunction u(m, gen.values(testing::chain_size(m)));
      auto vv = gen.values(testing::chain_size(m));
      for (std::size_t p : testing::v1_slots(m)) vv[p] = 0.0;
      const VertexFunction v(m, vv);
      worst = std::max(worst, summation_by_parts_check(u, v));
    }
  }
  CHECK(worst <= 1e-10);

  VertexFunction bad = VertexFunction::constant(2, 1.0);
  CHECK_THROWS_AS(summation_by_parts_check(VertexFunction::constant(2, 0.0), bad), Error);
}

TEST_CASE("property: Laplacian is linear and kills affine data") {
  testing::Gen gen(0x5eed0a);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = gen.integer(1, 5);
    const auto a = gen.values(testing::chain_size(m));
    const auto b = gen.values(testing::chain_size(m));
    const double c = gen.uniform(-3, 3);
    std::vector<double> sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) sum[i] = a[i] + c * b[i];
    const auto la = graph_laplacian_apply(VertexFunction(m, a));
    const auto lb = graph_laplacian_apply(VertexFunction(m, b));
    const auto ls = graph_laplacian_apply(VertexFunction(m, sum));
    for (std::size_t k = 0; k < ls.values().size(); ++k) {
      CHECK(ls.values()[k] == doctest::Approx(la.values()[k] + c * lb.values()[k]).epsilon(1e-12));
    }
    const double slope = gen.uniform(-5, 5);
    const double offset = gen.uniform(-5, 5);
    CHECK(is_harmonic(VertexFunction::sample(m, [&](double s) { return slope * s + offset; }), 1e-11));
  }
}
