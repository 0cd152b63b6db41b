#include "wgt/correlation.hpp"

#include <algorithm>

#include "wgt/noise_quadrature.hpp"

namespace wgt {

double lorentzian_correlation(double s, double l_c) {
  if (!(l_c > 0.0))
    throw std::invalid_argument("lorentzian_correlation: l_c must be > 0");
  double r = s / l_c;
  return 1.0 / (1.0 + r * r);
}

CorrelationModel CorrelationModel::lorentzian(double l_c) {
  if (!(l_c > 0.0))
    throw std::invalid_argument("CorrelationModel: l_c must be > 0");
  CorrelationModel m;
  m.l_c_ = l_c;
  return m;
}

CorrelationModel CorrelationModel::tabulated(std::vector<double> separations,
                                             std::vector<double> values) {
  if (separations.size() != values.size() || separations.size() < 2)
    throw std::invalid_argument(
        "CorrelationModel: need >= 2 matching samples");
  if (separations.front() != 0.0 || values.front() != 1.0)
    throw std::invalid_argument(
        "CorrelationModel: table must start at (s=0, C=1)");
  for (std::size_t i = 1; i < separations.size(); ++i) {
    if (!(separations[i] > separations[i - 1]))
      throw std::invalid_argument(
          "CorrelationModel: separations must increase strictly");
    if (values[i] < 0.0 || values[i] > values[i - 1])
      throw std::invalid_argument(
          "CorrelationModel: values must be in [0,1] and non-increasing");
  }
  CorrelationModel m;
  m.tab_s_ = std::move(separations);
  m.tab_c_ = std::move(values);
  // Half-value separation stands in for the correlation length.
  m.l_c_ = m.tab_s_.back();
  for (std::size_t i = 1; i < m.tab_s_.size(); ++i) {
    if (m.tab_c_[i] <= 0.5) {
      double f = (m.tab_c_[i - 1] - 0.5) / (m.tab_c_[i - 1] - m.tab_c_[i]);
      m.l_c_ = m.tab_s_[i - 1] + f * (m.tab_s_[i] - m.tab_s_[i - 1]);
      break;
    }
  }
  return m;
}

double CorrelationModel::operator()(double s) const {
  s = std::abs(s);
  if (tab_s_.empty()) return lorentzian_correlation(s, l_c_);
  if (s >= tab_s_.back()) return tab_c_.back();
  auto it = std::upper_bound(tab_s_.begin(), tab_s_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - tab_s_.begin());
  double f = (s - tab_s_[i - 1]) / (tab_s_[i] - tab_s_[i - 1]);
  return tab_c_[i - 1] + f * (tab_c_[i] - tab_c_[i - 1]);
}

double elastic_rate(double p, const ScatteringKernel& k) {
  if (!(k.gamma0 >= 0.0) || !(k.l_c > 0.0))
    throw std::invalid_argument("elastic_rate: invalid kernel");
  if (k.white_noise) return k.gamma0;
  return k.gamma0 * std::exp(-std::abs(p) * k.l_c);
}

double halfspace_correlation_numeric(double z, double s, double tol) {
  double c0 = halfspace_two_point_trace(z, 0.0, tol);
  if (s == 0.0) return 1.0;
  return halfspace_two_point_trace(z, s, tol) / c0;
}

}  // namespace wgt
