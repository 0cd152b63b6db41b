// Discretized Wigner distribution W(x, p) on a uniform phase-space grid,
// its moments, and the spatially averaged coherence function.
//
// Conventions (simulation units hbar = m = 1):
//   - x-axis: N_x uniform cells on [x_min, x_max), periodic;
//     x_i = x_min + i * dx.
//   - p-axis: N_p odd, symmetric about 0 so p -> -p is an exact grid
//     bijection; p_j = -p_max + j * dp with a grid point at p = 0.
//   - total mass M = sum W dx dp; initializers normalize M = 1.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wgt {

struct GridSpec {
  double x_min;
  double x_max;
  int n_x;
  double p_max;
  int n_p;  // must be odd
};

class WignerGrid {
 public:
  explicit WignerGrid(const GridSpec& spec);

  int nx() const { return spec_.n_x; }
  int np() const { return spec_.n_p; }
  double dx() const { return dx_; }
  double dp() const { return dp_; }
  double x(int i) const { return spec_.x_min + i * dx_; }
  double p(int j) const { return -spec_.p_max + j * dp_; }
  const GridSpec& spec() const { return spec_; }

  // Row-major over p: value(i, j) = W(x_i, p_j).
  double& value(int i, int j) { return w_[static_cast<std::size_t>(j) * spec_.n_x + i]; }
  double value(int i, int j) const { return w_[static_cast<std::size_t>(j) * spec_.n_x + i]; }
  std::vector<double>& data() { return w_; }
  const std::vector<double>& data() const { return w_; }

  double mass() const;
  // Momentum marginal n(p_j) = sum_i W dx.
  std::vector<double> momentum_marginal() const;

 private:
  GridSpec spec_;
  double dx_, dp_;
  std::vector<double> w_;
};

struct ObservableRow {
  double time;
  double mean_x;
  double var_x;
  double mean_p;
  double var_p;
  double mass;
};

struct ObservableSeries {
  std::vector<ObservableRow> rows;
};

struct CoherenceFunction {
  std::vector<double> s;                    // separations
  std::vector<std::complex<double>> gamma;  // Gamma(s)
};

// Gaussian W centered at (x0, p0) with position/momentum widths
// sigma_x, sigma_p.  Throws if a width is unresolvable (< 2 cells) or the
// tails exceed 1e-10 of the peak at the grid edges.  Mass is normalized
// to 1 within 1e-12.
WignerGrid init_gaussian(const GridSpec& spec, double x0, double p0,
                         double sigma_x, double sigma_p);

// Moments by direct grid summation (fixed-order pairwise reduction).
ObservableRow observables(const WignerGrid& w, double time = 0.0);

// Gamma(s) = sum_p n(p) e^{-i p s} dp on s in [-s_max, s_max] with
// s_max = pi / dp, sampled at n_s points (default: one per p cell).
CoherenceFunction coherence(const WignerGrid& w, int n_s = 0);

// Same transform at arbitrary separations.
CoherenceFunction coherence_at(const WignerGrid& w,
                               const std::vector<double>& separations);

}  // namespace wgt
