#include "wgt/inelastic.hpp"

#include <cmath>

#include "wgt/quadrature.hpp"

namespace wgt {

namespace {

double norm2d(Vec2 v) { return std::hypot(v[0], v[1]); }

void check_params(const InelasticParams& p) {
  if (p.gamma < 0.0)
    throw std::invalid_argument("inelastic: gamma must be >= 0");
  if (p.dimension != 1 && p.dimension != 2)
    throw std::invalid_argument("inelastic: dimension must be 1 or 2");
}

}  // namespace

std::complex<double> evolve_fourier(
    const std::function<std::complex<double>(Vec2, Vec2)>& w0,
    Vec2 k, Vec2 s, const InelasticParams& params, double t) {
  check_params(params);
  if (t < 0.0) throw std::invalid_argument("evolve_fourier: t must be >= 0");
  Vec2 s_shift{s[0] - k[0] * t, s[1] - k[1] * t};
  std::complex<double> val = w0(k, s_shift);
  double fs = params.force[0] * s[0] + params.force[1] * s[1];
  std::complex<double> phase(0.0, -fs * t);
  double damp = 0.0;
  if (params.gamma > 0.0 && t > 0.0) {
    const auto& c = params.correlation;
    damp = params.gamma *
           adaptive_simpson(
               [&](double tp) {
                 Vec2 arg{s[0] - k[0] * tp, s[1] - k[1] * tp};
                 return 1.0 - c(norm2d(arg));
               },
               0.0, t, 1e-8);
  }
  return val * std::exp(std::complex<double>(-damp, 0.0) + phase);
}

std::complex<double> coherence_decay(std::complex<double> gamma0, Vec2 s,
                                     const InelasticParams& params, double t) {
  check_params(params);
  if (t < 0.0) throw std::invalid_argument("coherence_decay: t must be >= 0");
  double rate = params.gamma * (1.0 - params.correlation(norm2d(s)));
  double fs = params.force[0] * s[0] + params.force[1] * s[1];
  return gamma0 * std::exp(std::complex<double>(-rate * t, -fs * t));
}

double momentum_variance(const InelasticParams& params, double var_p0,
                         double t) {
  check_params(params);
  if (!params.correlation.is_lorentzian())
    throw std::domain_error(
        "momentum_variance: needs a correlation model with a quadratic top");
  double lc = params.correlation.correlation_length();
  return var_p0 + params.gamma * t / (lc * lc);
}

double coherence_length(const InelasticParams& params, double t) {
  check_params(params);
  if (t < 0.0) throw std::invalid_argument("coherence_length: t must be >= 0");
  double lc = params.correlation.correlation_length();
  if (params.gamma == 0.0) return std::numeric_limits<double>::infinity();
  double gt = params.gamma * t;
  if (gt <= 1.0) return lc;  // saturation below one scattering time
  return lc / std::sqrt(gt);
}

double position_variance_longtime(const InelasticParams& params,
                                  double var_x0, double var_p0, double t) {
  check_params(params);
  if (!params.correlation.is_lorentzian())
    throw std::domain_error(
        "position_variance_longtime: needs a quadratic-top correlation");
  double lc = params.correlation.correlation_length();
  return var_x0 + var_p0 * t * t +
         params.gamma / (lc * lc) * t * t * t / 3.0;
}

}  // namespace wgt
