#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "nsch/cases.hpp"
#include "nsch/operators.hpp"
#include "nsch/sampler.hpp"
#include "support.hpp"

namespace nsch {
namespace {

ScalarField normalized(ScalarField d) {
  d *= 1.0 / integrate(d);
  return d;
}

ScalarField gaussian_bump(const Grid& g, double sigma) {
  return normalized(ScalarField::from_function(g, [&](double x, double y) {
    return std::exp(-((x - 1.0) * (x - 1.0) + y * y) / (2.0 * sigma * sigma));
  }));
}

// Fraction of the target's mass in each of nbx x nby bins, integrating the
// bilinear interpolant on a fine sub-grid.
std::vector<double> binned_target(const ScalarField& d, int nbx, int nby, int sub = 8) {
  const Grid& g = d.grid();
  std::vector<double> bins(static_cast<std::size_t>(nbx * nby), 0.0);
  const int fx = nbx * sub, fy = nby * sub;
  const double hx = g.lx / fx, hy = g.ly / fy;
  double total = 0.0;
  for (int j = 0; j < fy; ++j) {
    for (int i = 0; i < fx; ++i) {
      const double v = sample_bilinear(d, g.x0 + (i + 0.5) * hx, g.y0 + (j + 0.5) * hy) * hx * hy;
      bins[static_cast<std::size_t>((j / sub) * nbx + i / sub)] += v;
      total += v;
    }
  }
  for (double& b : bins) b /= total;
  return bins;
}

std::vector<double> binned_samples(const Grid& g, const SampleSet& s, int nbx, int nby) {
  std::vector<double> bins(static_cast<std::size_t>(nbx * nby), 0.0);
  for (const auto& p : s.points) {
    const int bx = std::min(nbx - 1, static_cast<int>((p.x - g.x0) / g.lx * nbx));
    const int by = std::min(nby - 1, static_cast<int>((p.y - g.y0) / g.ly * nby));
    bins[static_cast<std::size_t>(by * nbx + bx)] += 1.0;
  }
  for (double& b : bins) b /= static_cast<double>(s.points.size());
  return bins;
}

SamplerConfig big_run(std::uint64_t seed = 42) {
  SamplerConfig cfg;
  cfg.n_samples = 200000;
  cfg.burn_in = 10000;
  cfg.seed = seed;
  return cfg;
}

TEST(Sampler, UniformDensityQuadrants) {
  const Grid g = default_grid(64, 32);
  const ScalarField d = normalized(ScalarField(g, Boundary::neumann_zero, 1.0));
  const SampleSet s = metropolis_hastings(d, big_run());
  ASSERT_EQ(s.points.size(), 200000u);
  const std::vector<double> q = binned_samples(g, s, 2, 2);
  for (double f : q) EXPECT_NEAR(f, 0.25, 0.01);
  EXPECT_GE(s.acceptance_rate, 0.5);
  EXPECT_LE(s.acceptance_rate, 1.0);
  for (const auto& p : s.points) ASSERT_TRUE(g.contains(p.x, p.y));
}

TEST(Sampler, GaussianBumpMomentsAndTotalVariation) {
  const Grid g = default_grid(128, 64);
  const double sigma = 0.1;
  const ScalarField d = gaussian_bump(g, sigma);
  const SampleSet s = metropolis_hastings(d, big_run(7));

  double mx = 0.0, my = 0.0;
  for (const auto& p : s.points) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(s.points.size());
  my /= static_cast<double>(s.points.size());
  EXPECT_NEAR(mx, 1.0, 0.01);
  EXPECT_NEAR(my, 0.0, 0.01);

  // Quadrature oracle for the x-std of the (interpolated, truncated) target.
  const int fine = 1024;
  double m0 = 0.0, m2 = 0.0;
  for (int j = 0; j < fine / 2; ++j) {
    for (int i = 0; i < fine; ++i) {
      const double x = (i + 0.5) * g.lx / fine;
      const double y = g.y0 + (j + 0.5) * g.ly / (fine / 2);
      const double w = sample_bilinear(d, x, y);
      m0 += w;
      m2 += w * (x - 1.0) * (x - 1.0);
    }
  }
  const double std_target = std::sqrt(m2 / m0);
  double vx = 0.0;
  for (const auto& p : s.points) vx += (p.x - mx) * (p.x - mx);
  EXPECT_NEAR(std::sqrt(vx / static_cast<double>(s.points.size())), std_target, 0.05 * std_target);

  const std::vector<double> target = binned_target(d, 16, 8);
  const std::vector<double> empirical = binned_samples(g, s, 16, 8);
  double tv = 0.0;
  for (std::size_t k = 0; k < target.size(); ++k) tv += std::abs(target[k] - empirical[k]);
  EXPECT_LE(0.5 * tv, 0.05);
}

TEST(Sampler, DeterministicForSeed) {
  const Grid g = default_grid(32, 16);
  const ScalarField d = gaussian_bump(g, 0.2);
  SamplerConfig cfg;
  cfg.n_samples = 2000;
  const SampleSet a = metropolis_hastings(d, cfg);
  const SampleSet b = metropolis_hastings(d, cfg);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    ASSERT_EQ(a.points[k].x, b.points[k].x);
    ASSERT_EQ(a.points[k].y, b.points[k].y);
    ASSERT_EQ(a.points[k].density_value, b.points[k].density_value);
  }
  cfg.seed = 43;
  EXPECT_NE(metropolis_hastings(d, cfg).points[100].x, a.points[100].x);
}

TEST(Sampler, RejectsBadInput) {
  const Grid g = default_grid(32, 16);
  ScalarField d = normalized(ScalarField(g, Boundary::neumann_zero, 1.0));
  SamplerConfig cfg;
  cfg.n_samples = 0;
  EXPECT_THROW(metropolis_hastings(d, cfg), std::invalid_argument);
  cfg.n_samples = 10;
  cfg.proposal_std = 0.0;
  EXPECT_THROW(metropolis_hastings(d, cfg), std::invalid_argument);
  cfg.proposal_std = 0.1;
  cfg.floor_frac = 1.0;
  EXPECT_THROW(metropolis_hastings(d, cfg), std::invalid_argument);
  cfg.floor_frac = 0.05;
  d(2, 2) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(metropolis_hastings(d, cfg), std::invalid_argument);
}

TEST(EnergyDensity, UniformStateIsUniform) {
  const CaseSpec spec = case_params("A");
  State s = init_state(spec, default_grid(32, 16));
  s.phi.fill(0.5);
  const ScalarField d = energy_density(s, spec.params, 0.05);
  for (double v : d.values()) EXPECT_NEAR(v, 0.5, 1e-14);
  EXPECT_NEAR(integrate(d), 1.0, 1e-10);

  // Sampling the state is MH on this density, draw for draw.
  SamplerConfig cfg;
  cfg.n_samples = 2000;
  const SampleSet a = sample_state(s, spec.params, cfg);
  const SampleSet b = metropolis_hastings(d, cfg);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t k = 0; k < a.points.size(); ++k) {
    EXPECT_EQ(a.points[k].x, b.points[k].x);
    EXPECT_EQ(a.points[k].y, b.points[k].y);
  }
  EXPECT_EQ(a.acceptance_rate, b.acceptance_rate);
}

TEST(EnergyDensity, SingleThrombusConcentratesOnInterface) {
  const CaseSpec spec = case_params("A");
  const State s = init_state(spec, default_grid(64, 32));
  const ScalarField d = energy_density(s, spec.params, 0.05);
  EXPECT_NEAR(integrate(d), 1.0, 1e-10);
  const Grid& g = s.grid();
  const double band = 3.0 * spec.params.h;
  double in = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      if (std::abs(std::hypot(g.xc(i) - 1.0, g.yc(j)) - 0.25) <= band) in += d(i, j) * g.cell_area();
    }
  }
  EXPECT_GE(in, 0.7);

  SamplerConfig cfg;
  cfg.n_samples = 50000;
  const SampleSet samples = sample_state(s, spec.params, cfg);
  std::size_t hits = 0;
  for (const auto& p : samples.points) hits += std::abs(std::hypot(p.x - 1.0, p.y) - 0.25) <= band;
  EXPECT_GE(static_cast<double>(hits) / samples.points.size(), 0.6);
}

TEST(EnergyDensity, TwoThrombiSamplesNearInterfaces) {
  const CaseSpec spec = case_params("C");
  const State s = init_state(spec, default_grid(64, 32));
  SamplerConfig cfg;
  cfg.n_samples = 50000;
  const SampleSet samples = sample_state(s, spec.params, cfg);
  const double band = 3.0 * spec.params.h;
  std::size_t hits = 0;
  for (const auto& p : samples.points) {
    const double d0 = std::abs(std::hypot(p.x - 0.77, p.y) - 0.25);
    const double d1 = std::abs(std::hypot(p.x - 1.23, p.y) - 0.25);
    hits += std::min(d0, d1) <= band;
  }
  EXPECT_GE(static_cast<double>(hits) / samples.points.size(), 0.6);
  for (const auto& p : samples.points) ASSERT_GT(p.density_value, 0.0);
}

}  // namespace
}  // namespace nsch
