#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numbers>
#include <random>

#include "nsch/cases.hpp"
#include "nsch/field.hpp"
#include "nsch/operators.hpp"

namespace nsch::test {

inline constexpr double kPi = std::numbers::pi;

inline ScalarField random_field(const Grid& g, std::uint64_t seed, Boundary bc = Boundary::neumann_zero) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ScalarField f(g, bc);
  for (double& v : f.values()) v = u(rng);
  return f;
}

inline VectorField2 random_vector(const Grid& g, std::uint64_t seed) {
  return VectorField2(random_field(g, seed, Boundary::dirichlet_zero),
                      random_field(g, seed + 7919, Boundary::dirichlet_zero));
}

/// Smooth random field with vanishing normal derivative at every wall: a
/// short random cosine series.
inline ScalarField random_cosine_series(const Grid& g, std::uint64_t seed, int modes = 4) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  ScalarField f(g);
  for (int a = 0; a < modes; ++a) {
    for (int b = 0; b < modes; ++b) {
      const double c = n(rng) / (1.0 + a * a + b * b);
      for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
          f(i, j) += c * std::cos(a * kPi * (g.xc(i) - g.x0) / g.lx) * std::cos(b * kPi * (g.yc(j) - g.y0) / g.ly);
        }
      }
    }
  }
  return f;
}

inline double max_abs_diff(const ScalarField& a, const ScalarField& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

inline double max_abs_diff(const VectorField2& a, const VectorField2& b) {
  return std::max(max_abs_diff(a.x, b.x), max_abs_diff(a.y, b.y));
}

inline bool bitwise_equal(const ScalarField& a, const ScalarField& b) {
  if (a.size() != b.size()) return false;
  return std::memcmp(a.values().data(), b.values().data(), a.size() * sizeof(double)) == 0;
}

}  // namespace nsch::test
