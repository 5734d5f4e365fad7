#include "nsch/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "nsch/operators.hpp"

namespace nsch {

void SamplerConfig::validate() const {
  if (n_samples < 1) throw std::invalid_argument("sampler: n_samples must be >= 1");
  if (burn_in < 0) throw std::invalid_argument("sampler: burn_in must be >= 0");
  if (!(proposal_std > 0.0)) throw std::invalid_argument("sampler: proposal_std must be positive");
  if (!(floor_frac > 0.0 && floor_frac < 1.0)) throw std::invalid_argument("sampler: floor_frac must lie in (0, 1)");
}

ScalarField energy_density(const State& state, const Params& params, double floor_frac) {
  if (!state.phi.all_finite() || !state.F.all_finite()) {
    throw std::invalid_argument("energy_density: non-finite state");
  }
  const ScalarField mu = chemical_potential(state, params);
  const VectorField2 g = gradient(state.phi);
  ScalarField d(state.grid(), Boundary::neumann_zero);
  for (std::size_t k = 0; k < d.size(); ++k) {
    d[k] = std::abs(2.0 * mu[k]) * std::hypot(g.x[k], g.y[k]);
  }
  const double raw_mean = mean(d);
  if (raw_mean > 0.0) {
    const double floor = floor_frac * raw_mean;
    for (double& v : d.values()) v += floor;
  } else {
    d.fill(1.0);
  }
  d *= 1.0 / integrate(d);
  return d;
}

SampleSet metropolis_hastings(const ScalarField& density, const SamplerConfig& cfg) {
  cfg.validate();
  if (!density.all_finite()) throw std::invalid_argument("metropolis_hastings: non-finite density");
  const Grid& g = density.grid();
  for (double v : density.values()) {
    if (v < 0.0) throw std::invalid_argument("metropolis_hastings: negative density");
  }

  const auto start = static_cast<std::size_t>(
      std::max_element(density.values().begin(), density.values().end()) - density.values().begin());
  double x = g.xc(static_cast<int>(start % g.nx));
  double y = g.yc(static_cast<int>(start / g.nx));
  double dcur = sample_bilinear(density, x, y);

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> step(0.0, cfg.proposal_std * std::min(g.lx, g.ly));
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  SampleSet out;
  out.points.reserve(static_cast<std::size_t>(cfg.n_samples));
  std::int64_t accepted = 0;
  const std::int64_t total = cfg.burn_in + cfg.n_samples;
  for (std::int64_t it = 0; it < total; ++it) {
    const double xp = x + step(rng);
    const double yp = y + step(rng);
    const double u = unit(rng);
    if (g.contains(xp, yp)) {
      const double dp = sample_bilinear(density, xp, yp);
      if (dp >= dcur || u * dcur < dp) {
        x = xp;
        y = yp;
        dcur = dp;
        ++accepted;
      }
    }
    if (it >= cfg.burn_in) out.points.push_back({x, y, dcur});
  }
  out.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(total);
  return out;
}

SampleSet sample_state(const State& state, const Params& params, const SamplerConfig& cfg) {
  cfg.validate();
  return metropolis_hastings(energy_density(state, params, cfg.floor_frac), cfg);
}

}  // namespace nsch
