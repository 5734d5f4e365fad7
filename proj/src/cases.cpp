#include "nsch/cases.hpp"

#include <cmath>

#include "nsch/errors.hpp"

namespace nsch {
namespace {

Params baseline() {
  Params p;
  p.eta_b = 5e-1;
  p.eta_t = 1.0;
  p.kappa_b = 5e4;
  p.kappa_t = 1e-4;
  p.nu_b = 1e-5;
  p.nu_t = 1.0;
  p.h = 0.08;
  p.gamma = 1e-1;
  p.tau = 1e-4;
  p.lambda = 1e-3;
  return p;
}

Params diffusive(double gamma, double lambda) {
  Params p;
  p.eta_b = 5.0;
  p.eta_t = 1e1;
  p.kappa_b = 5e4;
  p.kappa_t = 1.0;
  p.nu_b = 5e-2;
  p.nu_t = 1e-1;
  p.h = 0.08;
  p.gamma = gamma;
  p.tau = 1e-2;
  p.lambda = lambda;
  return p;
}

std::vector<CaseSpec> build_registry() {
  std::vector<CaseSpec> cases;
  cases.push_back({"A", "Base line (static)", baseline(), InitialShape::single, false, 0.6, 0.05});
  cases.push_back({"B", "Diffusive thrombus", diffusive(5e-2, 2e-3), InitialShape::single, false, 0.2, 0.05});
  cases.push_back({"Bp", "Diffusive thrombus", diffusive(1e-1, 1e-3), InitialShape::single, false, 0.2, 0.05});
  cases.push_back({"C", "Two thrombi", diffusive(5.0, 1e-3), InitialShape::two, true, 0.5, 0.05});
  cases.push_back({"Cp", "Two thrombi", diffusive(1e-3, 1e-3), InitialShape::two, true, 0.5, 0.05});
  Params thin = baseline();
  thin.h = 0.035;
  cases.push_back({"D", "Thin interface", thin, InitialShape::single, true, 0.1, 0.05});
  thin.h = 0.05;
  cases.push_back({"Dp", "Thin interface", thin, InitialShape::single, false, 0.1, 0.05});
  return cases;
}

}  // namespace

const std::vector<CaseSpec>& all_cases() {
  static const std::vector<CaseSpec> registry = build_registry();
  return registry;
}

CaseSpec case_params(std::string_view name) {
  for (const auto& c : all_cases()) {
    if (c.name == name) return c;
  }
  throw UnknownCaseError(std::string(name));
}

Grid default_grid(int nx, int ny) { return Grid::make(nx, ny, 2.0, 1.0, 0.0, -0.5); }

double phi0_single(double x, double y, double h, const ThrombusCenter& c) {
  const double dist = std::hypot(x - c.x0, y - c.y0);
  return 0.5 * (1.0 - (1.0 - 1e-12) * std::tanh(2.6 * (c.radius - dist) / (std::sqrt(8.0) * h)));
}

double phi0_two(double x, double y, double h) {
  const double z0 = phi0_single(x, y, h, {1.0 - 0.23, 0.0, 0.25});
  const double z1 = phi0_single(x, y, h, {1.0 + 0.23, 0.0, 0.25});
  return (z0 * z1) / (z0 + z1 - z0 * z1 + 1e-20);
}

State init_state(const CaseSpec& spec, const Grid& grid) {
  spec.params.validate();
  State s;
  s.t = 0.0;
  s.steps = 0;
  s.u = VectorField2(grid, Boundary::dirichlet_zero);
  s.p = ScalarField(grid, Boundary::neumann_zero);
  s.F = TensorField2::identity(grid);
  const double h = spec.params.h;
  if (spec.phi0_kind == InitialShape::single) {
    s.phi = ScalarField::from_function(grid, [h](double x, double y) { return phi0_single(x, y, h); });
  } else {
    s.phi = ScalarField::from_function(grid, [h](double x, double y) { return phi0_two(x, y, h); });
  }
  return s;
}

}  // namespace nsch
