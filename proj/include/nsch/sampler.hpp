#pragma once

#include <cstdint>
#include <vector>

#include "nsch/field.hpp"
#include "nsch/model.hpp"

namespace nsch {

struct SamplerConfig {
  std::int64_t n_samples = 10000;
  std::int64_t burn_in = 1000;
  double proposal_std = 0.1;  ///< fraction of min(Lx, Ly)
  std::uint64_t seed = 42;
  double floor_frac = 0.05;   ///< uniform floor relative to the mean raw density

  void validate() const;
};

struct SamplePoint {
  double x = 0.0;
  double y = 0.0;
  double density_value = 0.0;
};

struct SampleSet {
  std::vector<SamplePoint> points;
  double acceptance_rate = 0.0;  ///< over all proposals, burn-in included
};

/// Pointwise density |2 mu| |grad phi| plus a floor of floor_frac times its
/// mean, normalized to unit integral. A state with no interface gives the
/// uniform density 1/|Omega|.
ScalarField energy_density(const State& state, const Params& params, double floor_frac);

/// Random-walk Metropolis-Hastings on a cell-centred density (bilinear in
/// between, zero outside the domain). Isotropic Gaussian proposals with std
/// proposal_std * min(Lx, Ly); the chain starts at the density maximum and
/// the first burn_in states are discarded. Deterministic for a given seed.
SampleSet metropolis_hastings(const ScalarField& density, const SamplerConfig& cfg);

/// energy_density followed by metropolis_hastings.
SampleSet sample_state(const State& state, const Params& params, const SamplerConfig& cfg);

}  // namespace nsch
