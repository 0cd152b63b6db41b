#include "wgt/wigner.hpp"

#include <cmath>
#include <numbers>

#include "wgt/quadrature.hpp"

namespace wgt {

WignerGrid::WignerGrid(const GridSpec& spec) : spec_(spec) {
  if (spec.n_x < 2 || spec.n_p < 3)
    throw std::invalid_argument("WignerGrid: grid too small");
  if (spec.n_p % 2 == 0)
    throw std::invalid_argument("WignerGrid: N_p must be odd");
  if (!(spec.x_max > spec.x_min) || !(spec.p_max > 0.0))
    throw std::invalid_argument("WignerGrid: empty axis");
  dx_ = (spec.x_max - spec.x_min) / spec.n_x;
  dp_ = 2.0 * spec.p_max / (spec.n_p - 1);
  w_.assign(static_cast<std::size_t>(spec.n_x) * spec.n_p, 0.0);
}

double WignerGrid::mass() const { return pairwise_sum(w_) * dx_ * dp_; }

std::vector<double> WignerGrid::momentum_marginal() const {
  std::vector<double> n(np());
  for (int j = 0; j < np(); ++j) {
    std::span<const double> row(w_.data() + static_cast<std::size_t>(j) * nx(),
                                static_cast<std::size_t>(nx()));
    n[j] = pairwise_sum(row) * dx_;
  }
  return n;
}

WignerGrid init_gaussian(const GridSpec& spec, double x0, double p0,
                         double sigma_x, double sigma_p) {
  WignerGrid w(spec);
  if (!(sigma_x >= 2.0 * w.dx()) || !(sigma_p >= 2.0 * w.dp()))
    throw std::invalid_argument(
        "init_gaussian: width below 2 grid cells is unresolvable");
  // Tail guard: the gaussian must be negligible at every grid edge.
  auto tail = [](double edge, double center, double sigma) {
    double t = (edge - center) / sigma;
    return std::exp(-0.5 * t * t);
  };
  if (tail(spec.x_min, x0, sigma_x) > 1e-10 ||
      tail(spec.x_max, x0, sigma_x) > 1e-10 ||
      tail(-spec.p_max, p0, sigma_p) > 1e-10 ||
      tail(spec.p_max, p0, sigma_p) > 1e-10)
    throw std::invalid_argument(
        "init_gaussian: support does not fit the grid (edge tail > 1e-10)");
  for (int j = 0; j < w.np(); ++j) {
    double gp = (w.p(j) - p0) / sigma_p;
    double fp = std::exp(-0.5 * gp * gp);
    for (int i = 0; i < w.nx(); ++i) {
      double gx = (w.x(i) - x0) / sigma_x;
      w.value(i, j) = fp * std::exp(-0.5 * gx * gx);
    }
  }
  double m = w.mass();
  for (double& v : w.data()) v /= m;
  return w;
}

ObservableRow observables(const WignerGrid& w, double time) {
  const int nx = w.nx(), np = w.np();
  const std::size_t n = w.data().size();
  std::vector<double> mx(n), mxx(n), mp(n), mpp(n);
  for (int j = 0; j < np; ++j) {
    double p = w.p(j);
    for (int i = 0; i < nx; ++i) {
      std::size_t idx = static_cast<std::size_t>(j) * nx + i;
      double v = w.data()[idx];
      double x = w.x(i);
      mx[idx] = v * x;
      mxx[idx] = v * x * x;
      mp[idx] = v * p;
      mpp[idx] = v * p * p;
    }
  }
  double cell = w.dx() * w.dp();
  double mass = w.mass();
  ObservableRow row;
  row.time = time;
  row.mass = mass;
  double inv = mass != 0.0 ? 1.0 / mass : 0.0;
  row.mean_x = pairwise_sum(mx) * cell * inv;
  row.mean_p = pairwise_sum(mp) * cell * inv;
  row.var_x = pairwise_sum(mxx) * cell * inv - row.mean_x * row.mean_x;
  row.var_p = pairwise_sum(mpp) * cell * inv - row.mean_p * row.mean_p;
  return row;
}

CoherenceFunction coherence_at(const WignerGrid& w,
                               const std::vector<double>& separations) {
  const std::vector<double> marg = w.momentum_marginal();
  CoherenceFunction c;
  c.s = separations;
  c.gamma.resize(separations.size());
  std::vector<double> re(marg.size()), im(marg.size());
  for (std::size_t k = 0; k < separations.size(); ++k) {
    double s = separations[k];
    for (int j = 0; j < w.np(); ++j) {
      double phase = -w.p(j) * s;  // hbar = 1
      re[j] = marg[j] * std::cos(phase);
      im[j] = marg[j] * std::sin(phase);
    }
    c.gamma[k] = {pairwise_sum(re) * w.dp(), pairwise_sum(im) * w.dp()};
  }
  return c;
}

CoherenceFunction coherence(const WignerGrid& w, int n_s) {
  if (n_s <= 0) n_s = w.np();
  if (n_s % 2 == 0) ++n_s;  // keep s = 0 on the sample set
  double s_max = std::numbers::pi / w.dp();
  std::vector<double> s(n_s);
  double ds = 2.0 * s_max / (n_s - 1);
  for (int k = 0; k < n_s; ++k) s[k] = -s_max + k * ds;
  return coherence_at(w, s);
}

}  // namespace wgt
