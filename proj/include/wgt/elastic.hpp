// 1D split-step solver for elastic (static-roughness) scattering:
// semi-Lagrangian ballistic advection alternated with the exact +-p
// scattering exchange, plus the Fourier-Laplace long-time asymptotics
// used as the analytic reference.  Simulation units hbar = m = 1.

#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "wgt/correlation.hpp"
#include "wgt/wigner.hpp"

namespace wgt {

enum class Splitting { Lie, Strang };
enum class OverflowPolicy { Absorb, Error };

struct EvolutionConfig {
  double dt = 0.05;
  double t_end = 10.0;
  Splitting splitting = Splitting::Strang;
  double force = 0.0;                 // momentum/time
  ScatteringKernel kernel;
  int record_every = 1;               // steps between observable rows
  OverflowPolicy overflow = OverflowPolicy::Error;
  // Edge-mass guard: abort (or absorb) when the outermost p rows carry
  // more than this fraction of the total mass.
  double edge_mass_threshold = 1e-10;
};

struct GuardViolation : std::runtime_error {
  GuardViolation(const std::string& what, long step)
      : std::runtime_error(what), step(step) {}
  long step;
};

// One ballistic step: gather-form semi-Lagrangian update
//   W(x, p) <- W(x - p dt + (F/2) dt^2, p - F dt),
// bilinear interpolation, periodic in x.  For F = 0 each p row is a
// circular convolution with non-negative weights summing exactly to 1.
void ballistic_step(WignerGrid& w, double dt, double force);

// One scattering step: per (x, |p|) pair the exact exchange
//   (W+, W-) <- e^{-g dt} [cosh(g dt) W+ + sinh(g dt) W-,
//                          sinh(g dt) W+ + cosh(g dt) W-],
// g = gamma(|p|).  Doubly stochastic: mass and the |p|-marginal are
// conserved exactly; the p = 0 row is untouched.
void scattering_step(WignerGrid& w, double dt, const ScatteringKernel& k);

struct EvolveResult {
  WignerGrid final;
  ObservableSeries series;
  double mass_absorbed = 0.0;  // cumulative mass removed under Absorb
};

using SnapshotHook =
    std::function<void(const WignerGrid&, double time, long step)>;

// Full evolution: Lie (ballistic then scatter per step) or Strang
// (half-scatter, ballistic, half-scatter).  Observables are recorded at
// t = 0 and every record_every steps.  Guard violations throw
// GuardViolation with the offending step index.
EvolveResult evolve(const WignerGrid& w0, const EvolutionConfig& config,
                    const SnapshotHook& hook = nullptr);

struct AsymptoticPrediction {
  double displacement;    // p / (2 m gamma(p))
  double variance_slope;  // p^2 / (2 m^2 gamma(p))
};

// Long-time asymptotics for a narrow cloud at momentum magnitude p0.
// Throws std::domain_error when gamma(p0) = 0 (purely ballistic).
AsymptoticPrediction laplace_asymptotics(double p0, double mass,
                                         const ScatteringKernel& kernel);

// Laplace-domain pair solution for initial data concentrated at -p0:
// returns (W~(k, -p0; zeta), W~(k, +p0; zeta)) for unit initial mass in
// the -p0 class.  Exposed for small-k numerical inversion tests.
std::pair<std::complex<double>, std::complex<double>> laplace_pair_solution(
    double k, double p0, double gamma_p, std::complex<double> zeta);

// Coherence snapshots at the requested times (each time is rounded to
// the nearest whole step of config.dt).
std::vector<CoherenceFunction> elastic_coherence_series(
    const WignerGrid& w0, const EvolutionConfig& config,
    const std::vector<double>& times);

}  // namespace wgt
