#include "wgt/noise_quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "wgt/quadrature.hpp"

namespace wgt {

namespace {

constexpr double pi = std::numbers::pi;

// Azimuthal integration is analytic for the axially symmetric planar
// geometries, so X reduces to a 2D integral over (rho, z''):
//   X_11 = X_22 = pi  \int rho^3      / (rho^2 + z''^2)^3 drho dz''
//   X_33        = 2pi \int z''^2 rho  / (rho^2 + z''^2)^3 drho dz''
// Writing rho = z'' tan(theta) removes the corner at rho, z'' -> inf
// (the integrand becomes smooth on a rectangle):
//   X_11 = X_22 = pi  \int sin^3(t) cos(t)   / z''^2  dt dz''
//   X_33        = 2pi \int sin(t)   cos^3(t) / z''^2  dt dz''
// z'' runs over [z, inf) (half-space, v-compactified) or [z, z + d].
std::array<double, 3> planar_x(double z, double depth, int n) {
  const GaussRule t_rule = gauss_legendre(n, 0.0, pi / 2.0);
  const bool semi_infinite = !(depth > 0.0);
  const GaussRule v_rule = semi_infinite ? gauss_legendre(n, 0.0, 1.0)
                                         : gauss_legendre(n, z, z + depth);
  std::vector<double> perp_terms, par_terms;
  perp_terms.reserve(static_cast<std::size_t>(n) * n);
  par_terms.reserve(static_cast<std::size_t>(n) * n);
  for (int it = 0; it < n; ++it) {
    double st = std::sin(t_rule.nodes[it]);
    double ct = std::cos(t_rule.nodes[it]);
    double w_par = t_rule.weights[it] * st * st * st * ct;
    double w_perp = t_rule.weights[it] * st * ct * ct * ct;
    for (int iv = 0; iv < n; ++iv) {
      double zpp, wv;
      if (semi_infinite) {
        double v = v_rule.nodes[iv];
        zpp = z + z * v / (1.0 - v);
        wv = v_rule.weights[iv] * z / ((1.0 - v) * (1.0 - v));
      } else {
        zpp = v_rule.nodes[iv];
        wv = v_rule.weights[iv];
      }
      double w = wv / (zpp * zpp);
      par_terms.push_back(w * w_par);
      perp_terms.push_back(w * w_perp);
    }
  }
  double x_par = pi * pairwise_sum(par_terms);
  double x_perp = 2.0 * pi * pairwise_sum(perp_terms);
  return {x_par, x_par, x_perp};
}

// Wire: the axial source integral is analytic,
// \int dz'' / (c^2 + z''^2)^2 = pi / (2 c^3), leaving a 2D integral over
// the cross-section; c^2 = R^2 + rho^2 - 2 R rho cos(phi) and the
// integrand is even in phi.
double wire_trace(double r_obs, double a, int n) {
  const GaussRule rho_rule = gauss_legendre(n, 0.0, a);
  const GaussRule phi_rule = gauss_legendre(n, 0.0, pi);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    double rho = rho_rule.nodes[i];
    double wr = rho_rule.weights[i] * rho;
    for (int j = 0; j < n; ++j) {
      double phi = phi_rule.nodes[j];
      double c2 = r_obs * r_obs + rho * rho -
                  2.0 * r_obs * rho * std::cos(phi);
      terms.push_back(phi_rule.weights[j] * wr / (c2 * std::sqrt(c2)));
    }
  }
  return 2.0 * pi / 2.0 * pairwise_sum(terms);
}

// Two-point trace above a half-space:
//   tr X(s) = \int_V (r1 . r2) / (|r1|^3 |r2|^3) d^3x'
// with r1,2 the vectors from the source to the two observation points
// (both at height z; lateral separation s along x).  The lateral
// coordinates are centered on the midpoint and scaled by the depth-
// dependent length L(z'') = hypot(z'', s/2), which keeps the integrand
// smooth up to the compactified corners; the algebraic map t/(1 - t^2)
// covers the infinite lateral extent.
double two_point_trace(double z, double s, int n) {
  const GaussRule t_rule = gauss_legendre(n, -1.0, 1.0);
  const GaussRule v_rule = gauss_legendre(n, 0.0, 1.0);
  std::vector<double> lat(n), jlat(n), dep(n), wdep(n);
  for (int i = 0; i < n; ++i) {
    double t = t_rule.nodes[i];
    double om = 1.0 - t * t;
    lat[i] = t / om;
    jlat[i] = t_rule.weights[i] * (1.0 + t * t) / (om * om);
    double v = v_rule.nodes[i];
    dep[i] = z + z * v / (1.0 - v);
    wdep[i] = v_rule.weights[i] * z / ((1.0 - v) * (1.0 - v));
  }
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(n) * n * n);
  for (int iz = 0; iz < n; ++iz) {
    double zc = dep[iz];
    double scale = std::hypot(zc, 0.5 * s);
    double w_z = wdep[iz] * scale * scale;
    for (int ix = 0; ix < n; ++ix) {
      double xp = 0.5 * s + scale * lat[ix];
      double dxs = s - xp;
      double wx = jlat[ix] * w_z;
      for (int iy = 0; iy < n; ++iy) {
        double yp = scale * lat[iy];
        double n1 = xp * xp + yp * yp + zc * zc;
        double n2 = dxs * dxs + yp * yp + zc * zc;
        double dot = -xp * dxs + yp * yp + zc * zc;
        terms.push_back(wx * jlat[iy] * dot /
                        (n1 * std::sqrt(n1) * n2 * std::sqrt(n2)));
      }
    }
  }
  return pairwise_sum(terms);
}

// Dyadic refinement: evaluate at doubling orders until two successive
// levels agree within tol (relative to the finer value).
template <typename F>
auto refine(F&& eval, double tol, int n0, int n_max, double& out_err)
    -> decltype(eval(0)) {
  auto prev = eval(n0);
  for (int n = 2 * n0; n <= n_max; n *= 2) {
    auto cur = eval(n);
    double err = 0.0;
    if constexpr (std::is_same_v<decltype(cur), double>) {
      err = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
    } else {
      for (std::size_t i = 0; i < cur.size(); ++i)
        err = std::max(err, std::abs(cur[i] - prev[i]) /
                                std::max(std::abs(cur[i]), 1e-300));
    }
    if (err <= tol) {
      out_err = err;
      return cur;
    }
    prev = cur;
  }
  throw QuadratureNonConvergence(
      "geometry quadrature did not converge within the refinement budget");
}

void check_tol(double tol) {
  if (!(tol > 1e-10) || !(tol < 1e-2))
    throw std::invalid_argument("quadrature tol must lie in (1e-10, 1e-2)");
}

}  // namespace

GeometryTensor geometry_tensor_quadrature(const GeometrySpec& g, double tol) {
  validate(g);
  check_tol(tol);
  double err = 0.0;
  GeometryTensor y;
  if (const auto* w = std::get_if<Wire>(&g)) {
    double trace = refine(
        [&](int n) { return wire_trace(w->R, w->a, n); }, tol, 32, 1024, err);
    y.trace_only = true;
    y.diag = {trace / 3.0, trace / 3.0, trace / 3.0};
    return y;
  }
  double z = std::holds_alternative<HalfSpace>(g) ? std::get<HalfSpace>(g).z
                                                  : std::get<Layer>(g).z;
  double depth = std::holds_alternative<Layer>(g) ? std::get<Layer>(g).d : 0.0;
  auto x = refine([&](int n) { return planar_x(z, depth, n); }, tol, 16, 512,
                  err);
  double trx = x[0] + x[1] + x[2];
  for (int i = 0; i < 3; ++i) y.diag[i] = 0.5 * (trx - x[i]);
  return y;
}

double halfspace_two_point_trace(double z, double s, double tol) {
  if (!(z > 0.0)) throw std::invalid_argument("two_point_trace: z must be > 0");
  if (s < 0.0) s = -s;
  check_tol(tol);
  double err = 0.0;
  // tr Y = (3 tr X - tr X) / 2 = tr X for the two-point tensor as well.
  return refine([&](int n) { return two_point_trace(z, s, n); }, tol, 16, 256,
                err);
}

}  // namespace wgt
