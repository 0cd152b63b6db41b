#include "wgt/noise.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wgt/constants.hpp"

namespace wgt {

namespace {
constexpr double pi = std::numbers::pi;
}

double rate_prefactor(const SpinCoupling& c, const MaterialParams& m) {
  if (c.moment < 0.0) throw std::invalid_argument("rate_prefactor: moment < 0");
  if (!(m.temperature > 0.0) || !(m.resistivity > 0.0))
    throw std::invalid_argument("rate_prefactor: requires T > 0 and rho > 0");
  namespace k = constants;
  double c2 = k::c_light * k::c_light;
  double denom = k::hbar * k::hbar * 4.0 * pi * pi * k::eps0 * k::eps0 * c2 *
                 c2 * m.resistivity;
  return c.moment * c.moment * k::k_boltzmann * m.temperature / denom;
}

double scattering_rate(const SpinCoupling& c, const MaterialParams& m,
                       const GeometryTensor& y,
                       const std::array<double, 3>& bias_direction) {
  double norm2 = bias_direction[0] * bias_direction[0] +
                 bias_direction[1] * bias_direction[1] +
                 bias_direction[2] * bias_direction[2];
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("scattering_rate: bias direction must be unit");
  double y_nn;
  if (y.trace_only) {
    y_nn = y.trace();
  } else {
    y_nn = 0.0;
    for (int i = 0; i < 3; ++i)
      y_nn += bias_direction[i] * y.diag[i] * bias_direction[i];
  }
  return rate_prefactor(c, m) * y_nn;
}

double blackbody_spectrum(double omega, double temperature) {
  if (!(omega > 0.0) || !(temperature > 0.0))
    throw std::invalid_argument("blackbody_spectrum: requires w > 0, T > 0");
  namespace k = constants;
  double x = k::hbar * omega / (k::k_boltzmann * temperature);
  double c5 = std::pow(k::c_light, 5);
  double amp = k::hbar * omega * omega * omega / (3.0 * pi * k::eps0 * c5);
  // expm1 keeps the Rayleigh-Jeans limit accurate; beyond the overflow
  // threshold switch to the explicitly suppressed Wien form.
  if (x < 700.0) return amp / std::expm1(x);
  return amp * std::exp(-x);
}

}  // namespace wgt
