#include "nsch/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nsch/operators.hpp"

namespace nsch {

Profile axial_section(const ScalarField& f, double y0) {
  const Grid& g = f.grid();
  const double fy = std::clamp((y0 - g.y0) / g.dy() - 0.5, 0.0, static_cast<double>(g.ny - 1));
  const int j0 = std::min(static_cast<int>(fy), g.ny - 2);
  const double t = fy - j0;
  Profile p;
  p.x.resize(g.nx);
  p.value.resize(g.nx);
  for (int i = 0; i < g.nx; ++i) {
    p.x[i] = g.xc(i);
    p.value[i] = (1.0 - t) * f(i, j0) + t * f(i, j0 + 1);
  }
  return p;
}

double interface_width(const Profile& profile) {
  const auto& v = profile.value;
  const auto& x = profile.x;
  if (v.size() < 2 || v.size() != x.size()) throw std::domain_error("interface_width: empty profile");
  const std::size_t imin = static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());

  auto crossing = [&](std::size_t k, double level) {
    return x[k] + (level - v[k]) / (v[k + 1] - v[k]) * (x[k + 1] - x[k]);
  };

  double inner_x = std::numeric_limits<double>::quiet_NaN();
  std::size_t k = imin;
  for (; k + 1 < v.size(); ++k) {
    if (v[k] < 0.1 && v[k + 1] >= 0.1) {
      inner_x = crossing(k, 0.1);
      break;
    }
  }
  if (std::isnan(inner_x)) throw std::domain_error("interface_width: no phi = 0.1 crossing");

  double outer_x = std::numeric_limits<double>::quiet_NaN();
  for (; k + 1 < v.size(); ++k) {
    const bool up = v[k] < 0.9 && v[k + 1] >= 0.9;
    const bool down = v[k] >= 0.9 && v[k + 1] < 0.9;
    if (up || down) outer_x = crossing(k, 0.9);
  }
  if (std::isnan(outer_x)) throw std::domain_error("interface_width: no phi = 0.9 crossing");
  return outer_x - inner_x;
}

double midpoint_phi(const State& state) { return sample_bilinear(state.phi, 1.0, 0.0); }

MetricsRow metrics(const State& state, const State& initial) {
  MetricsRow row;
  row.t = state.t;
  row.mean_phi = mean(state.phi);
  const double m0 = mean(initial.phi);
  row.mean_phi_drift = std::abs(row.mean_phi - m0) / std::max(std::abs(m0), 1e-300);
  row.div_u_norm = norm_l2(divergence(state.u));
  row.detF_max_err = norm_linf(det_f_error(state.F));
  const auto [lo, hi] = std::minmax_element(state.phi.values().begin(), state.phi.values().end());
  row.phi_min = *lo;
  row.phi_max = *hi;

  const Profile now = axial_section(state.phi);
  const Profile init = axial_section(initial.phi);
  try {
    row.interface_width = interface_width(now);
  } catch (const std::domain_error&) {
    row.interface_width = std::numeric_limits<double>::quiet_NaN();
  }
  double linf = 0.0;
  for (std::size_t i = 0; i < now.value.size(); ++i) linf = std::max(linf, std::abs(now.value[i] - init.value[i]));
  row.linf_vs_init = linf;
  double full = 0.0;
  for (std::size_t k = 0; k < state.phi.size(); ++k) full = std::max(full, std::abs(state.phi[k] - initial.phi[k]));
  row.linf_vs_init_full = full;
  return row;
}

}  // namespace nsch
