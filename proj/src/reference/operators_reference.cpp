// Serial reference stencils. Each value is computed independently through
// ScalarField::with_ghost; no row pointers, no OpenMP.

#include "nsch/operators.hpp"

namespace nsch::reference {

VectorField2 gradient(const ScalarField& f) {
  const Grid& g = f.grid();
  VectorField2 out(g, Boundary::dirichlet_zero);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      out.x(i, j) = (f.with_ghost(i + 1, j) - f.with_ghost(i - 1, j)) / (2.0 * g.dx());
      out.y(i, j) = (f.with_ghost(i, j + 1) - f.with_ghost(i, j - 1)) / (2.0 * g.dy());
    }
  }
  return out;
}

ScalarField divergence(const VectorField2& v) {
  const Grid& g = v.grid();
  ScalarField out(g, Boundary::neumann_zero);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      out(i, j) = (v.x.with_ghost(i + 1, j) - v.x.with_ghost(i - 1, j)) / (2.0 * g.dx()) +
                  (v.y.with_ghost(i, j + 1) - v.y.with_ghost(i, j - 1)) / (2.0 * g.dy());
    }
  }
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g, f.bc());
  const double dx2 = g.dx() * g.dx();
  const double dy2 = g.dy() * g.dy();
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double c = f(i, j);
      out(i, j) = (f.with_ghost(i + 1, j) - 2.0 * c + f.with_ghost(i - 1, j)) / dx2 +
                  (f.with_ghost(i, j + 1) - 2.0 * c + f.with_ghost(i, j - 1)) / dy2;
    }
  }
  return out;
}

ScalarField div_coef_grad(const ScalarField& a, const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g, f.bc());
  const double dx2 = g.dx() * g.dx();
  const double dy2 = g.dy() * g.dy();
  // Coefficient ghosts mirror, so the face average at a wall is the cell value.
  ScalarField am = a;
  am.set_bc(Boundary::neumann_zero);
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double c = f(i, j);
      const double ac = am(i, j);
      double flux = 0.0;
      flux += 0.5 * (ac + am.with_ghost(i + 1, j)) * (f.with_ghost(i + 1, j) - c) / dx2;
      flux -= 0.5 * (ac + am.with_ghost(i - 1, j)) * (c - f.with_ghost(i - 1, j)) / dx2;
      flux += 0.5 * (ac + am.with_ghost(i, j + 1)) * (f.with_ghost(i, j + 1) - c) / dy2;
      flux -= 0.5 * (ac + am.with_ghost(i, j - 1)) * (c - f.with_ghost(i, j - 1)) / dy2;
      out(i, j) = flux;
    }
  }
  return out;
}

ScalarField advect(const VectorField2& u, const ScalarField& f) {
  const VectorField2 gf = reference::gradient(f);
  ScalarField out(f.grid(), f.bc());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = u.x[k] * gf.x[k] + u.y[k] * gf.y[k];
  return out;
}

}  // namespace nsch::reference
