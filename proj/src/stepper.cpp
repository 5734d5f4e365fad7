#include "nsch/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nsch/errors.hpp"
#include "nsch/operators.hpp"
#include "nsch/spectral.hpp"

namespace nsch {

double StepConfig::stabilization(const Params& p) const {
  return stab_s >= 0.0 ? stab_s : 2.0 * p.lambda * p.gamma / (p.h * p.h);
}

double StepConfig::split_viscosity(const Params& p) const {
  return visc_split > 0.0 ? visc_split : p.eta_max();
}

void StepConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("step: dt must be positive");
  if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) {
    throw std::invalid_argument("step: cfl_safety must lie in (0, 1]");
  }
  if (!(dt_max > 0.0)) throw std::invalid_argument("step: dt_max must be positive");
}

std::pair<VectorField2, ScalarField> project(const VectorField2& v) {
  const ScalarField q = solve_projection_poisson(divergence(v));
  const VectorField2 gq = gradient(q);
  VectorField2 w = v;
  w.x -= gq.x;
  w.y -= gq.y;
  w.x.set_bc(Boundary::dirichlet_zero);
  w.y.set_bc(Boundary::dirichlet_zero);
  return {std::move(w), q};
}

double cfl_dt(const State& state, const Params& params, const StepConfig& cfg) {
  if (!(cfg.cfl_safety > 0.0 && cfg.cfl_safety <= 1.0)) {
    throw std::invalid_argument("cfl_dt: cfl_safety must lie in (0, 1]");
  }
  const Grid& g = state.grid();
  constexpr double eps = 1e-12;
  const double umax = norm_linf(state.u);
  double bound = std::min(g.dx(), g.dy()) / (umax + eps);
  const double diff = params.k * params.nu_max();
  if (diff > 0.0) {
    const double h = std::min(g.dx(), g.dy());
    bound = std::min(bound, h * h / (4.0 * diff));
  }
  return std::min(cfg.cfl_safety * bound, cfg.dt_max);
}

namespace {
void require_finite(const State& s, std::int64_t step_index) {
  if (!s.all_finite()) throw NonFiniteError("non-finite value after step", step_index);
}
}  // namespace

State step(const State& state, const Params& params, const StepConfig& cfg) {
  cfg.validate();
  const double dt = cfg.dt;
  const std::int64_t index = state.steps;
  const double limit = cfl_dt(state, params, cfg);
  if (dt > limit * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "step: dt " << dt << " exceeds cfl limit " << limit;
    throw std::invalid_argument(os.str());
  }

  try {
    State next;
    next.t = state.t + dt;
    next.steps = state.steps + 1;

    // (a) Cahn-Hilliard.
    const double S = cfg.stabilization(params);
    const ScalarField tr = strain_trace(state.F);
    ScalarField nonlinear(state.grid(), Boundary::neumann_zero);
    const double lg = params.lambda * params.gamma;
    for (std::size_t k = 0; k < nonlinear.size(); ++k) {
      const double p = state.phi[k];
      nonlinear[k] = lg * double_well(p, params.h).df + 0.5 * visco(p, params.nu_t, params.nu_b).slope * tr[k];
    }
    ScalarField rhs = state.phi;
    rhs.axpy(-dt, divergence_of_flux(state.u, state.phi));
    rhs.axpy(dt * params.tau, laplacian(nonlinear));
    rhs.axpy(-dt * params.tau * S, laplacian(state.phi));
    next.phi = solve_ch_implicit(rhs, dt * params.tau * params.lambda, dt * params.tau * S);

    // (b) deformation gradient, explicit.
    next.F = state.F;
    const TensorField2 frhs = f_rhs(state.u, next.phi, state.F, params);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) next.F(i, j).axpy(dt, frhs(i, j));
    }

    // (c) momentum.
    const double eta_bar = cfg.split_viscosity(params);
    ScalarField eta_excess = viscosity_field(next.phi, params);
    for (double& v : eta_excess.values()) v -= eta_bar;
    const VectorField2 cap = capillary_force(next.phi, params.lambda);
    const VectorField2 el = elastic_force(next.phi, next.F, params);
    const ScalarField friction = friction_coefficient(next.phi, params);

    VectorField2 u_star(state.grid(), Boundary::dirichlet_zero);
    for (int comp = 0; comp < 2; ++comp) {
      const ScalarField& uc = comp == 0 ? state.u.x : state.u.y;
      ScalarField r = uc;
      r.axpy(-dt, advect(state.u, uc));
      r.axpy(dt, div_coef_grad(eta_excess, uc));
      r.axpy(dt, comp == 0 ? cap.x : cap.y);
      r.axpy(dt, comp == 0 ? el.x : el.y);
      r.set_bc(Boundary::dirichlet_zero);
      ScalarField solved = solve_helmholtz_dirichlet(r, dt * eta_bar);
      for (std::size_t k = 0; k < solved.size(); ++k) solved[k] /= 1.0 + dt * friction[k];
      (comp == 0 ? u_star.x : u_star.y) = std::move(solved);
    }

    // (d) projection.
    auto [u_new, potential] = project(u_star);
    next.u = std::move(u_new);
    next.p = std::move(potential);
    next.p *= 1.0 / dt;

    require_finite(next, index);
    return next;
  } catch (const NonFiniteError& e) {
    if (e.step() >= 0) throw;
    throw NonFiniteError(e.what(), index);
  } catch (const SolverError& e) {
    if (e.step() >= 0) throw;
    throw SolverError(e.what(), index);
  }
}

}  // namespace nsch
