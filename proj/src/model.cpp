#include "nsch/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "kernel_util.hpp"
#include "nsch/operators.hpp"

namespace nsch {

void Params::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("parameter ") + name + " must be positive and finite");
    }
  };
  auto nonneg = [](double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("parameter ") + name + " must be >= 0 and finite");
    }
  };
  positive(eta_b, "eta_b");
  positive(eta_t, "eta_t");
  positive(kappa_b, "kappa_b");
  positive(kappa_t, "kappa_t");
  positive(nu_b, "nu_b");
  positive(nu_t, "nu_t");
  positive(h, "h");
  nonneg(lambda, "lambda");
  nonneg(gamma, "gamma");
  nonneg(tau, "tau");
  nonneg(k, "k");
  if (rho != 1.0) throw std::invalid_argument("parameter rho is fixed at 1");
}

double Params::alpha() const { return std::min({eta_b, eta_t, kappa_b, kappa_t, nu_b, nu_t}); }
double Params::beta() const { return std::max({eta_b, eta_t, kappa_b, kappa_t, nu_b, nu_t}); }
double Params::eta_max() const { return std::max(eta_b, eta_t); }
double Params::nu_max() const { return std::max(nu_b, nu_t); }

DoubleWell double_well(double phi, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("double_well: h must be positive");
  const double inv = 1.0 / (h * h);
  const double pm = phi - 1.0;
  return {phi * phi * pm * pm * 0.25 * inv, phi * pm * (2.0 * phi - 1.0) * 0.5 * inv,
          (6.0 * phi * phi - 6.0 * phi + 1.0) * 0.5 * inv};
}

Interpolant visco(double phi, double nu_t, double nu_b) {
  const double p = std::clamp(phi, 0.0, 1.0);
  const double span = nu_b - nu_t;
  const double slope = (phi > 0.0 && phi < 1.0) ? 6.0 * span * p * (1.0 - p) : 0.0;
  const double s = p * p * (3.0 - 2.0 * p);
  // Convex form keeps the endpoints exact; the clamp absorbs rounding.
  const double v = (1.0 - s) * nu_t + s * nu_b;
  return {std::clamp(v, std::min(nu_t, nu_b), std::max(nu_t, nu_b)), slope};
}

double material(double phi, double v_t, double v_b) { return visco(phi, v_t, v_b).value; }

ScalarField strain_trace(const TensorField2& F) {
  ScalarField tr(F.grid(), Boundary::neumann_zero);
  for (std::size_t k = 0; k < tr.size(); ++k) {
    tr[k] = F.c11[k] * F.c11[k] + F.c12[k] * F.c12[k] + F.c21[k] * F.c21[k] + F.c22[k] * F.c22[k] - 2.0;
  }
  return tr;
}

ScalarField chemical_potential(const ScalarField& phi, const TensorField2& F, const Params& params) {
  ScalarField mu = laplacian(phi);
  const ScalarField tr = strain_trace(F);
  const double lg = params.lambda * params.gamma;
  const int nthreads = parallel::threads();
  const int nx = phi.grid().nx;
  NSCH_OMP_ROWS
  for (int j = 0; j < phi.grid().ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * nx + i;
      const double p = phi[k];
      mu[k] = -params.lambda * mu[k] + lg * double_well(p, params.h).df +
              0.5 * visco(p, params.nu_t, params.nu_b).slope * tr[k];
    }
  }
  mu.set_bc(Boundary::neumann_zero);
  return mu;
}

ScalarField chemical_potential(const State& state, const Params& params) {
  return chemical_potential(state.phi, state.F, params);
}

VectorField2 capillary_force(const ScalarField& phi, double lambda) {
  const VectorField2 g = gradient(phi);
  const ScalarField lap = laplacian(phi);
  ScalarField half_sq(phi.grid(), Boundary::neumann_zero);
  for (std::size_t k = 0; k < half_sq.size(); ++k) half_sq[k] = 0.5 * (g.x[k] * g.x[k] + g.y[k] * g.y[k]);
  const VectorField2 gh = gradient(half_sq);
  VectorField2 out(phi.grid(), Boundary::dirichlet_zero);
  for (std::size_t k = 0; k < out.x.size(); ++k) {
    out.x[k] = -lambda * (lap[k] * g.x[k] + gh.x[k]);
    out.y[k] = -lambda * (lap[k] * g.y[k] + gh.y[k]);
  }
  return out;
}

ScalarField viscoelasticity_field(const ScalarField& phi, const Params& params) {
  ScalarField nu(phi.grid(), Boundary::neumann_zero);
  for (std::size_t k = 0; k < nu.size(); ++k) nu[k] = visco(phi[k], params.nu_t, params.nu_b).value;
  return nu;
}

ScalarField viscosity_field(const ScalarField& phi, const Params& params) {
  ScalarField eta(phi.grid(), Boundary::neumann_zero);
  for (std::size_t k = 0; k < eta.size(); ++k) eta[k] = material(phi[k], params.eta_t, params.eta_b);
  return eta;
}

VectorField2 elastic_force(const ScalarField& phi, const TensorField2& F, const Params& params) {
  const Grid& g = phi.grid();
  ScalarField s11(g), s12(g), s21(g), s22(g);
  for (std::size_t k = 0; k < s11.size(); ++k) {
    const double nu = visco(phi[k], params.nu_t, params.nu_b).value;
    const double a = F.c11[k], b = F.c12[k], c = F.c21[k], d = F.c22[k];
    s11[k] = nu * (a * a + b * b - 1.0);
    s12[k] = nu * (a * c + b * d);
    s21[k] = s12[k];
    s22[k] = nu * (c * c + d * d - 1.0);
  }
  return divergence_rows(s11, s12, s21, s22);
}

ScalarField friction_coefficient(const ScalarField& phi, const Params& params) {
  ScalarField c(phi.grid(), Boundary::neumann_zero);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double p = std::clamp(phi[k], 0.0, 1.0);
    c[k] = material(p, params.eta_t, params.eta_b) * (1.0 - p) /
           material(p, params.kappa_t, params.kappa_b);
  }
  return c;
}

TensorField2 f_rhs(const VectorField2& u, const ScalarField& phi, const TensorField2& F,
                   const Params& params) {
  const Grid& g = phi.grid();
  const VectorField2 gu1 = gradient(u.x);  // (d_x u^1, d_y u^1)
  const VectorField2 gu2 = gradient(u.y);
  const ScalarField nu = viscoelasticity_field(phi, params);
  const VectorField2 gnu = gradient(nu);

  TensorField2 out(g);
  for (int i = 0; i < 2; ++i) {
    const VectorField2& gui = i == 0 ? gu1 : gu2;
    for (int j = 0; j < 2; ++j) {
      const ScalarField& fij = F(i, j);
      const ScalarField lap = laplacian(fij);
      const VectorField2 gf = gradient(fij);
      const ScalarField& f0j = F(0, j);
      const ScalarField& f1j = F(1, j);
      ScalarField& o = out(i, j);
      for (std::size_t k = 0; k < o.size(); ++k) {
        const double stretch = gui.x[k] * f0j[k] + gui.y[k] * f1j[k];
        const double diffusion = params.k * (nu[k] * lap[k] + 2.0 * (gnu.x[k] * gf.x[k] + gnu.y[k] * gf.y[k]));
        const double transport = u.x[k] * gf.x[k] + u.y[k] * gf.y[k];
        o[k] = stretch + diffusion - transport;
      }
    }
  }
  return out;
}

ScalarField det_f_error(const TensorField2& F) {
  ScalarField e(F.grid(), Boundary::neumann_zero);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = F.c11[k] * F.c22[k] - F.c12[k] * F.c21[k] - 1.0;
  return e;
}

Residuals residuals(const State& state, const Params& params, const State& prev, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("residuals: dt must be positive");
  const Grid& g = state.grid();
  Residuals r;

  // Momentum: u_t + u.grad u + grad p - div(eta grad u) - forces + c u.
  const ScalarField eta = viscosity_field(state.phi, params);
  const ScalarField c = friction_coefficient(state.phi, params);
  const VectorField2 cap = capillary_force(state.phi, params.lambda);
  const VectorField2 el = elastic_force(state.phi, state.F, params);
  const VectorField2 gp = gradient(state.p);
  VectorField2 mom(g, Boundary::dirichlet_zero);
  for (int comp = 0; comp < 2; ++comp) {
    const ScalarField& uc = comp == 0 ? state.u.x : state.u.y;
    const ScalarField& up = comp == 0 ? prev.u.x : prev.u.y;
    const ScalarField adv = advect(state.u, uc);
    const ScalarField visc = div_coef_grad(eta, uc);
    ScalarField& m = comp == 0 ? mom.x : mom.y;
    const ScalarField& gpc = comp == 0 ? gp.x : gp.y;
    const ScalarField& capc = comp == 0 ? cap.x : cap.y;
    const ScalarField& elc = comp == 0 ? el.x : el.y;
    for (std::size_t k = 0; k < m.size(); ++k) {
      m[k] = (uc[k] - up[k]) / dt + adv[k] + gpc[k] - visc[k] - capc[k] - elc[k] + c[k] * uc[k];
    }
  }
  r.momentum = norm_l2(mom);
  r.divergence = norm_l2(divergence(state.u));

  const TensorField2 frhs = f_rhs(state.u, state.phi, state.F, params);
  double fsq = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ScalarField res = state.F(i, j);
      res -= prev.F(i, j);
      res *= 1.0 / dt;
      res -= frhs(i, j);
      fsq += inner(res, res);
    }
  }
  r.f_equation = std::sqrt(fsq);

  ScalarField ch = state.phi;
  ch -= prev.phi;
  ch *= 1.0 / dt;
  ch += divergence_of_flux(state.u, state.phi);
  ch.axpy(-params.tau, laplacian(chemical_potential(state, params)));
  r.ch_equation = norm_l2(ch);

  r.det_f_max = norm_linf(det_f_error(state.F));
  return r;
}

}  // namespace nsch
