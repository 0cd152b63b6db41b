// Thermal magnetic near-field noise: scattering-rate prefactor, rate
// from a geometry tensor, and the blackbody reference spectrum.

#pragma once

#include <array>

#include "wgt/geometry.hpp"

namespace wgt {

// C0 = |mu|^2 k_B T / (hbar^2 4 pi^2 eps0^2 c^4 rho)  [m/s].
double rate_prefactor(const SpinCoupling& c, const MaterialParams& m);

// gamma = C0 * (bias . Y . bias)  [1/s].  For trace-only (wire) tensors
// the trace is used regardless of the bias direction; this overestimates
// the rate for any single projection.
double scattering_rate(const SpinCoupling& c, const MaterialParams& m,
                       const GeometryTensor& y,
                       const std::array<double, 3>& bias_direction);

// Blackbody magnetic spectral density
//   S = hbar w^3 / (3 pi eps0 c^5 (exp(hbar w / k_B T) - 1))  [T^2 s].
// Guarded against overflow deep in the Wien tail.
double blackbody_spectrum(double omega, double temperature);

}  // namespace wgt
