#include "nsch/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsch/operators.hpp"

namespace nsch {

double phase_energy(const ScalarField& phi, const TensorField2& F, const Params& params) {
  const ScalarField tr = strain_trace(F);
  double well = 0.0;
  double elastic = 0.0;
  for (std::size_t k = 0; k < phi.size(); ++k) {
    well += double_well(phi[k], params.h).f;
    elastic += visco(phi[k], params.nu_t, params.nu_b).value * tr[k];
  }
  const double area = phi.grid().cell_area();
  return params.lambda * gradient_energy(phi) + 2.0 * params.lambda * params.gamma * well * area +
         elastic * area;
}

EnergyReport total_energy(const State& state, const Params& params) {
  EnergyReport r;
  r.t = state.t;
  r.E_kinetic = inner(state.u, state.u);
  const ScalarField tr = strain_trace(state.F);
  double well = 0.0;
  double elastic = 0.0;
  for (std::size_t k = 0; k < state.phi.size(); ++k) {
    const double p = state.phi[k];
    well += double_well(p, params.h).f;
    elastic += visco(p, params.nu_t, params.nu_b).value * tr[k];
  }
  const double area = state.grid().cell_area();
  r.E_mixed = params.lambda * gradient_energy(state.phi) + 2.0 * params.lambda * params.gamma * well * area;
  r.E_elastic = elastic * area;
  r.E_total = r.E_kinetic + r.E_mixed + r.E_elastic;
  return r;
}

void dissipation_channels(const State& state, const Params& params, EnergyReport& report) {
  const ScalarField eta = viscosity_field(state.phi, params);
  ScalarField ux = state.u.x;
  ScalarField uy = state.u.y;
  ux.set_bc(Boundary::dirichlet_zero);
  uy.set_bc(Boundary::dirichlet_zero);
  report.D_visc = gradient_energy(ux, eta) + gradient_energy(uy, eta);

  report.D_mu = params.tau * gradient_energy(chemical_potential(state, params));

  ScalarField nu2 = viscoelasticity_field(state.phi, params);
  for (double& v : nu2.values()) v *= v;
  double fdiff = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) fdiff += gradient_energy(state.F(i, j), nu2);
  }
  report.D_Fdiff = params.k * fdiff;

  const ScalarField c = friction_coefficient(state.phi, params);
  double fr = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    fr += c[k] * (state.u.x[k] * state.u.x[k] + state.u.y[k] * state.u.y[k]);
  }
  report.D_friction = fr * state.grid().cell_area();
}

EnergyReport energy_report(const State& state, const Params& params) {
  EnergyReport r = total_energy(state, params);
  dissipation_channels(state, params, r);
  return r;
}

namespace {
void require_neumann_compatible(const ScalarField& psi) {
  const Grid& g = psi.grid();
  double wall = 0.0;
  double interior = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i + 1 < g.nx; ++i) {
      const double s = std::abs(psi(i + 1, j) - psi(i, j)) / g.dx();
      interior = std::max(interior, s);
      if (i == 0 || i + 2 == g.nx) wall = std::max(wall, s);
    }
  }
  for (int j = 0; j + 1 < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double s = std::abs(psi(i, j + 1) - psi(i, j)) / g.dy();
      interior = std::max(interior, s);
      if (j == 0 || j + 2 == g.ny) wall = std::max(wall, s);
    }
  }
  if (wall > 0.5 * interior + 1e-300) {
    throw std::invalid_argument("first_variation_check: psi is not Neumann-compatible");
  }
}
}  // namespace

double first_variation_check(const State& state, const Params& params, const ScalarField& psi, double eps) {
  if (!(eps >= 1e-6 && eps <= 1e-3)) {
    throw std::invalid_argument("first_variation_check: eps must lie in [1e-6, 1e-3]");
  }
  if (!(psi.grid() == state.grid())) throw std::invalid_argument("first_variation_check: grid mismatch");
  require_neumann_compatible(psi);

  ScalarField plus = state.phi;
  plus.axpy(eps, psi);
  ScalarField minus = state.phi;
  minus.axpy(-eps, psi);
  const double directional =
      (phase_energy(plus, state.F, params) - phase_energy(minus, state.F, params)) / (2.0 * eps);
  const double potential = 2.0 * inner(chemical_potential(state, params), psi);
  return std::abs(directional - potential) / std::max(std::abs(potential), 1e-30);
}

LedgerRow ledger_append(const EnergyReport& prev, EnergyReport& now) {
  const double dt = now.t - prev.t;
  now.dE_dt_est = dt > 0.0 ? (now.E_total - prev.E_total) / dt : 0.0;
  LedgerRow row;
  row.t = now.t;
  row.dE_dt_est = now.dE_dt_est;
  row.dissipation = -now.dissipation_rate();
  row.gap = row.dE_dt_est - row.dissipation;
  return row;
}

}  // namespace nsch
