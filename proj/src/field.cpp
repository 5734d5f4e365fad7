#include "nsch/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nsch {

Grid Grid::make(int nx, int ny, double lx, double ly, double x0, double y0) {
  if (nx < 8 || ny < 8) {
    throw std::invalid_argument("grid needs nx, ny >= 8 (got " + std::to_string(nx) + "x" +
                                std::to_string(ny) + ")");
  }
  if (!(lx > 0.0) || !(ly > 0.0) || !std::isfinite(lx) || !std::isfinite(ly)) {
    throw std::invalid_argument("grid extents must be positive and finite");
  }
  return Grid{nx, ny, lx, ly, x0, y0};
}

ScalarField::ScalarField(const Grid& grid, Boundary bc, double fill)
    : grid_(grid), bc_(bc), values_(grid.size(), fill) {}

ScalarField ScalarField::from_function(const Grid& grid,
                                       const std::function<double(double, double)>& fn,
                                       Boundary bc) {
  ScalarField f(grid, bc);
  for (int j = 0; j < grid.ny; ++j) {
    const double y = grid.yc(j);
    for (int i = 0; i < grid.nx; ++i) f(i, j) = fn(grid.xc(i), y);
  }
  return f;
}

double ScalarField::with_ghost(int i, int j) const {
  double sign = 1.0;
  const double flip = bc_ == Boundary::dirichlet_zero ? -1.0 : 1.0;
  if (i < 0) {
    i = 0;
    sign *= flip;
  } else if (i >= grid_.nx) {
    i = grid_.nx - 1;
    sign *= flip;
  }
  if (j < 0) {
    j = 0;
    sign *= flip;
  } else if (j >= grid_.ny) {
    j = grid_.ny - 1;
    sign *= flip;
  }
  return sign * (*this)(i, j);
}

bool ScalarField::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

void ScalarField::fill(double v) { std::fill(values_.begin(), values_.end(), v); }

namespace {
void require_same_grid(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("field grids differ");
}
}  // namespace

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += o.values_[k];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= o.values_[k];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

ScalarField& ScalarField::axpy(double a, const ScalarField& o) {
  require_same_grid(*this, o);
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += a * o.values_[k];
  return *this;
}

ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
ScalarField operator*(double s, ScalarField a) { return a *= s; }

ScalarField hadamard(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a, b);
  ScalarField out(a.grid(), a.bc());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] * b[k];
  return out;
}

VectorField2::VectorField2(ScalarField ux, ScalarField uy) : x(std::move(ux)), y(std::move(uy)) {
  if (!(x.grid() == y.grid())) throw std::invalid_argument("vector component grids differ");
}

TensorField2 TensorField2::identity(const Grid& grid) {
  TensorField2 f(grid);
  f.c11.fill(1.0);
  f.c22.fill(1.0);
  return f;
}

ScalarField& TensorField2::operator()(int i, int j) {
  if (i == 0) return j == 0 ? c11 : c12;
  return j == 0 ? c21 : c22;
}

const ScalarField& TensorField2::operator()(int i, int j) const {
  if (i == 0) return j == 0 ? c11 : c12;
  return j == 0 ? c21 : c22;
}

}  // namespace nsch
