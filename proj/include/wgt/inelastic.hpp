// Closed-form evolution under white-noise (inelastic) scattering in the
// double-Fourier representation, plus the derived decoherence and
// heating laws.  Simulation units hbar = m = 1; D in {1, 2}.

#pragma once

#include <array>
#include <complex>
#include <functional>
#include <limits>
#include <stdexcept>

#include "wgt/correlation.hpp"

namespace wgt {

using Vec2 = std::array<double, 2>;

struct InelasticParams {
  double gamma = 0.0;                                   // 1/time
  CorrelationModel correlation = CorrelationModel::lorentzian(1.0);
  Vec2 force{0.0, 0.0};                                 // momentum/time
  int dimension = 1;                                    // 1 or 2
};

// Propagator applied to one Fourier-domain sample:
//   W~(k, s; t) = W~0(k, s - k t) * exp(-i F.s t)
//                 * exp(-gamma \int_0^t [1 - C(|s - k t'|)] dt').
// The characteristic-line integral uses adaptive Simpson, tol 1e-8.
// W~0 is supplied as a callable over (k, s); 1D calls set the second
// components to zero.
std::complex<double> evolve_fourier(
    const std::function<std::complex<double>(Vec2, Vec2)>& w0,
    Vec2 k, Vec2 s, const InelasticParams& params, double t);

// Gamma(s; t) = Gamma0(s) exp(-gamma t (1 - C(|s|)) - i F.s t).
std::complex<double> coherence_decay(std::complex<double> gamma0, Vec2 s,
                                     const InelasticParams& params, double t);

// var_p(t) = var_p0 + gamma t / l_c^2 (quadratic-top correlation only).
double momentum_variance(const InelasticParams& params, double var_p0,
                         double t);

// xi_coh(t) = l_c / sqrt(gamma t) for gamma t >= 1; saturates at l_c
// below that; +infinity for gamma = 0.
double coherence_length(const InelasticParams& params, double t);

// var_x(t) = var_x0 + var_p0 t^2 + (gamma / l_c^2) t^3 / 3.
double position_variance_longtime(const InelasticParams& params,
                                  double var_x0, double var_p0, double t);

}  // namespace wgt
