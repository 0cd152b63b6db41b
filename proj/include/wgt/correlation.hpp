// Normalized spatial correlation C(s) of the magnetic perturbation and
// the momentum-dependent elastic scattering kernel built on top of it.

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace wgt {

// C(s) = 1 / (1 + s^2/l_c^2).
double lorentzian_correlation(double s, double l_c);

// Correlation model: Lorentzian with correlation length l_c, or a
// user-supplied table (linear interpolation between samples, flat
// extrapolation beyond the last one).  C(0) = 1 is enforced.
class CorrelationModel {
 public:
  static CorrelationModel lorentzian(double l_c);
  static CorrelationModel tabulated(std::vector<double> separations,
                                    std::vector<double> values);

  double operator()(double s) const;
  // Correlation length: l_c for the Lorentzian, the half-value
  // separation for tabulated data.
  double correlation_length() const { return l_c_; }
  bool is_lorentzian() const { return tab_s_.empty(); }

 private:
  CorrelationModel() = default;
  double l_c_ = 1.0;
  std::vector<double> tab_s_;   // increasing, tab_s_[0] == 0
  std::vector<double> tab_c_;   // tab_c_[0] == 1
};

// Elastic scattering kernel gamma(p) = gamma0 * exp(-|p| l_c)
// (simulation units), or white noise (gamma(p) = gamma0).
struct ScatteringKernel {
  double gamma0 = 1.0;   // 1/time
  double l_c = 0.1;      // length
  bool white_noise = false;
};

// gamma(p) for the kernel above; symmetric and non-negative.
double elastic_rate(double p, const ScatteringKernel& k);

// Normalized trace of the two-point geometry tensor above a half-space:
// value 1 at s = 0, decaying over a scale of order z.
double halfspace_correlation_numeric(double z, double s, double tol);

}  // namespace wgt
