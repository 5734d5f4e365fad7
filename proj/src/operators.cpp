#include "nsch/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kernel_util.hpp"

namespace nsch {

using detail::ghost_sign;
using detail::left_of;
using detail::right_of;
using detail::row_view;

namespace {
void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw std::invalid_argument("operator inputs live on different grids");
}
}  // namespace

VectorField2 gradient(const ScalarField& f) {
  const Grid& g = f.grid();
  VectorField2 out(g, Boundary::dirichlet_zero);
  const double s = ghost_sign(f.bc());
  const double inv2dx = 0.5 / g.dx();
  const double inv2dy = 0.5 / g.dy();
  const int nx = g.nx;
  const int nthreads = parallel::threads();
  NSCH_OMP_ROWS
  for (int j = 0; j < g.ny; ++j) {
    const auto r = row_view(f, j);
    double* gx = out.x.values().data() + static_cast<std::size_t>(j) * nx;
    double* gy = out.y.values().data() + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      gx[i] = (right_of(r.mid, i, nx, s) - left_of(r.mid, i, s)) * inv2dx;
      gy[i] = (r.sabove * r.above[i] - r.sbelow * r.below[i]) * inv2dy;
    }
  }
  return out;
}

ScalarField divergence(const VectorField2& v) {
  const Grid& g = v.grid();
  ScalarField out(g, Boundary::neumann_zero);
  const double sx = ghost_sign(v.x.bc());
  const double inv2dx = 0.5 / g.dx();
  const double inv2dy = 0.5 / g.dy();
  const int nx = g.nx;
  const int nthreads = parallel::threads();
  NSCH_OMP_ROWS
  for (int j = 0; j < g.ny; ++j) {
    const auto rx = row_view(v.x, j);
    const auto ry = row_view(v.y, j);
    double* d = out.values().data() + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      d[i] = (right_of(rx.mid, i, nx, sx) - left_of(rx.mid, i, sx)) * inv2dx +
             (ry.sabove * ry.above[i] - ry.sbelow * ry.below[i]) * inv2dy;
    }
  }
  return out;
}

ScalarField laplacian(const ScalarField& f) {
  const Grid& g = f.grid();
  ScalarField out(g, f.bc());
  const double s = ghost_sign(f.bc());
  const double idx2 = 1.0 / (g.dx() * g.dx());
  const double idy2 = 1.0 / (g.dy() * g.dy());
  const int nx = g.nx;
  const int nthreads = parallel::threads();
  NSCH_OMP_ROWS
  for (int j = 0; j < g.ny; ++j) {
    const auto r = row_view(f, j);
    double* o = out.values().data() + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      const double c = r.mid[i];
      o[i] = (right_of(r.mid, i, nx, s) - 2.0 * c + left_of(r.mid, i, s)) * idx2 +
             (r.sabove * r.above[i] - 2.0 * c + r.sbelow * r.below[i]) * idy2;
    }
  }
  return out;
}

ScalarField div_coef_grad(const ScalarField& a, const ScalarField& f) {
  require_same_grid(a.grid(), f.grid());
  const Grid& g = f.grid();
  ScalarField out(g, f.bc());
  const double s = ghost_sign(f.bc());
  const double idx2 = 1.0 / (g.dx() * g.dx());
  const double idy2 = 1.0 / (g.dy() * g.dy());
  const int nx = g.nx;
  const int ny = g.ny;
  const int nthreads = parallel::threads();
  NSCH_OMP_ROWS
  for (int j = 0; j < ny; ++j) {
    const auto r = row_view(f, j);
    const auto ar = row_view(a, j);
    double* o = out.values().data() + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      const double c = r.mid[i];
      const double ac = ar.mid[i];
      const double aw = i > 0 ? 0.5 * (ac + ar.mid[i - 1]) : ac;
      const double ae = i < nx - 1 ? 0.5 * (ac + ar.mid[i + 1]) : ac;
      const double as = j > 0 ? 0.5 * (ac + ar.below[i]) : ac;
      const double an = j < ny - 1 ? 0.5 * (ac + ar.above[i]) : ac;
      o[i] = (ae * (right_of(r.mid, i, nx, s) - c) - aw * (c - left_of(r.mid, i, s))) * idx2 +
             (an * (r.sabove * r.above[i] - c) - as * (c - r.sbelow * r.below[i])) * idy2;
    }
  }
  return out;
}

ScalarField advect(const VectorField2& u, const ScalarField& f) {
  require_same_grid(u.grid(), f.grid());
  const Grid& g = f.grid();
  ScalarField out(g, f.bc());
  const double s = ghost_sign(f.bc());
  const double inv2dx = 0.5 / g.dx();
  const double inv2dy = 0.5 / g.dy();
  const int nx = g.nx;
  const int nthreads = parallel::threads();
  NSCH_OMP_ROWS
  for (int j = 0; j < g.ny; ++j) {
    const auto r = row_view(f, j);
    const double* ux = u.x.values().data() + static_cast<std::size_t>(j) * nx;
    const double* uy = u.y.values().data() + static_cast<std::size_t>(j) * nx;
    double* o = out.values().data() + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      const double fx = (right_of(r.mid, i, nx, s) - left_of(r.mid, i, s)) * inv2dx;
      const double fy = (r.sabove * r.above[i] - r.sbelow * r.below[i]) * inv2dy;
      o[i] = ux[i] * fx + uy[i] * fy;
    }
  }
  return out;
}

ScalarField divergence_of_flux(const VectorField2& u, const ScalarField& f) {
  require_same_grid(u.grid(), f.grid());
  ScalarField fx = hadamard(u.x, f);
  ScalarField fy = hadamard(u.y, f);
  fx.set_bc(u.x.bc());
  fy.set_bc(u.y.bc());
  return divergence(VectorField2(std::move(fx), std::move(fy)));
}

VectorField2 divergence_rows(const ScalarField& s11, const ScalarField& s12,
                             const ScalarField& s21, const ScalarField& s22) {
  const VectorField2 g11 = gradient(s11);
  const VectorField2 g12 = gradient(s12);
  const VectorField2 g21 = gradient(s21);
  const VectorField2 g22 = gradient(s22);
  VectorField2 out(s11.grid(), Boundary::dirichlet_zero);
  for (std::size_t k = 0; k < out.x.size(); ++k) {
    out.x[k] = g11.x[k] + g12.y[k];
    out.y[k] = g21.x[k] + g22.y[k];
  }
  return out;
}

namespace {
// Sum over faces of w_face * (jump)^2 / h^2 times the cell area. Wall faces
// contribute only for dirichlet_zero fields (jump to the negated ghost, half
// weight), which matches -inner(f, div_coef_grad(w, f)).
double face_energy(const ScalarField& f, const ScalarField* w) {
  const Grid& g = f.grid();
  const double idx2 = 1.0 / (g.dx() * g.dx());
  const double idy2 = 1.0 / (g.dy() * g.dy());
  const bool dirichlet = f.bc() == Boundary::dirichlet_zero;
  auto wt = [&](int i, int j) { return w ? (*w)(i, j) : 1.0; };
  double sum = 0.0;
  for (int j = 0; j < g.ny; ++j) {
    for (int i = 0; i < g.nx; ++i) {
      const double c = f(i, j);
      if (i + 1 < g.nx) {
        const double d = f(i + 1, j) - c;
        sum += 0.5 * (wt(i, j) + wt(i + 1, j)) * d * d * idx2;
      }
      if (j + 1 < g.ny) {
        const double d = f(i, j + 1) - c;
        sum += 0.5 * (wt(i, j) + wt(i, j + 1)) * d * d * idy2;
      }
      if (dirichlet) {
        int walls_x = (i == 0) + (i == g.nx - 1);
        int walls_y = (j == 0) + (j == g.ny - 1);
        sum += wt(i, j) * 2.0 * c * c * (walls_x * idx2 + walls_y * idy2);
      }
    }
  }
  return sum * g.cell_area();
}
}  // namespace

double gradient_energy(const ScalarField& f) { return face_energy(f, nullptr); }

double gradient_energy(const ScalarField& f, const ScalarField& weight) {
  require_same_grid(f.grid(), weight.grid());
  return face_energy(f, &weight);
}

double integrate(const ScalarField& f) {
  double sum = 0.0;
  for (double v : f.values()) sum += v;
  return sum * f.grid().cell_area();
}

double mean(const ScalarField& f) { return integrate(f) / f.grid().area(); }

double inner(const ScalarField& f, const ScalarField& g) {
  require_same_grid(f.grid(), g.grid());
  double sum = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) sum += f[k] * g[k];
  return sum * f.grid().cell_area();
}

double inner(const VectorField2& u, const VectorField2& v) { return inner(u.x, v.x) + inner(u.y, v.y); }

double norm_l2(const ScalarField& f) { return std::sqrt(inner(f, f)); }
double norm_l2(const VectorField2& u) { return std::sqrt(inner(u, u)); }

double norm_linf(const ScalarField& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

double norm_linf(const VectorField2& u) { return std::max(norm_linf(u.x), norm_linf(u.y)); }

double sample_bilinear(const ScalarField& f, double x, double y) {
  const Grid& g = f.grid();
  const double fx = std::clamp((x - g.x0) / g.dx() - 0.5, 0.0, static_cast<double>(g.nx - 1));
  const double fy = std::clamp((y - g.y0) / g.dy() - 0.5, 0.0, static_cast<double>(g.ny - 1));
  const int i0 = std::min(static_cast<int>(fx), g.nx - 2);
  const int j0 = std::min(static_cast<int>(fy), g.ny - 2);
  const double tx = fx - i0;
  const double ty = fy - j0;
  return (1.0 - ty) * ((1.0 - tx) * f(i0, j0) + tx * f(i0 + 1, j0)) +
         ty * ((1.0 - tx) * f(i0, j0 + 1) + tx * f(i0 + 1, j0 + 1));
}

}  // namespace nsch
