#pragma once

// Hand-rolled generators and reference oracles shared by the unit tests.
// Nothing here calls into the library under test.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  std::vector<double> values(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  // Probability vector with every entry bounded away from 0.
  std::array<double, 3> weights() {
    std::array<double, 3> w{uniform(0.05, 1.0), uniform(0.05, 1.0), uniform(0.05, 1.0)};
    const double sum = w[0] + w[1] + w[2];
    for (auto& x : w) x /= sum;
    w[2] = 1.0 - w[0] - w[1];
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

inline std::size_t p3(int m) {
  std::size_t n = 1;
  for (int i = 0; i < m; ++i) n *= 3;
  return n;
}

inline std::size_t chain_size(int m) { return p3(m) + 1; }

// Chain positions of A, B, C, D inside V_m.
inline std::array<std::size_t, 4> v1_slots(int m) {
  const std::size_t t = p3(m - 1);
  return {0, t, 2 * t, 3 * t};
}

inline bool is_v1_slot(int m, std::size_t i) {
  const auto s = v1_slots(m);
  return std::find(s.begin(), s.end(), i) != s.end();
}

// Lattice coordinates (a, b) of x = (a + b/2) h, y = b (sqrt 3 / 2) h.
using Lattice = std::pair<long, long>;

inline Lattice to_lattice(double x, double y, int m) {
  const double scale = std::ldexp(1.0, m);
  const long b = std::lround(y * scale * 2.0 / std::sqrt(3.0));
  const long a = std::lround(x * scale - 0.5 * static_cast<double>(b));
  return {a, b};
}

// Vertices of the level-m gasket graph by midpoint subdivision of triangles,
// in exact lattice units of 2^-m.
inline std::set<Lattice> gasket_lattice(int m) {
  const long n = 1L << m;
  struct Tri {
    Lattice p, q, r;
  };
  std::vector<Tri> tris{{{0, 0}, {n, 0}, {0, n}}};
  for (int level = 0; level < m; ++level) {
    std::vector<Tri> next;
    for (const auto& t : tris) {
      const Lattice pq{(t.p.first + t.q.first) / 2, (t.p.second + t.q.second) / 2};
      const Lattice pr{(t.p.first + t.r.first) / 2, (t.p.second + t.r.second) / 2};
      const Lattice qr{(t.q.first + t.r.first) / 2, (t.q.second + t.r.second) / 2};
      next.push_back({t.p, pq, pr});
      next.push_back({pq, t.q, qr});
      next.push_back({pr, qr, t.r});
    }
    tris = std::move(next);
  }
  std::set<Lattice> out;
  for (const auto& t : tris) {
    out.insert(t.p);
    out.insert(t.q);
    out.insert(t.r);
  }
  return out;
}

inline double chain_energy(const std::vector<double>& u) {
  double e = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) e += (u[i + 1] - u[i]) * (u[i + 1] - u[i]);
  return e;
}

// Minimiser of the level-(m+1) chain energy with V_m values held fixed,
// by Gauss-Seidel sweeps on the free vertices.
inline std::vector<double> relaxed_extension(const std::vector<double>& coarse) {
  const std::size_t n = 3 * (coarse.size() - 1) + 1;
  std::vector<double> u(n, 0.0);
  for (std::size_t k = 0; k < coarse.size(); ++k) u[3 * k] = coarse[k];
  for (int sweep = 0; sweep < 400; ++sweep) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (i % 3 != 0) u[i] = 0.5 * (u[i - 1] + u[i + 1]);
    }
  }
  return u;
}

// -u'' second difference on interior chain positions.
inline std::vector<double> neg_second_difference(const std::vector<double>& u) {
  std::vector<double> out(u.size(), 0.0);
  for (std::size_t i = 1; i + 1 < u.size(); ++i) out[i] = 2.0 * u[i] - u[i - 1] - u[i + 1];
  return out;
}

// Number of eigenvalues <= x of the n x n tridiagonal (2, -1) matrix, by
// counting negative pivots of T - x I (Sylvester inertia).
inline std::size_t sturm_count(std::size_t n, double x) {
  std::size_t negatives = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double prev = i == 0 ? 0.0 : 1.0 / d;
    d = (2.0 - x) - prev;
    if (d == 0.0) d = -1e-300;
    if (d < 0.0) ++negatives;
  }
  return negatives;
}

// Eigenvalues <= x of -Delta_m with Dirichlet data on V_1: three equal blocks.
inline std::size_t dirichlet_count_oracle(int m, double x) {
  const std::size_t block = p3(m - 1) - 1;
  return 3 * sturm_count(block, x);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace testing
