#include "wgt/elastic.hpp"

#include <algorithm>
#include <cmath>

#include "wgt/quadrature.hpp"

namespace wgt {

namespace {

// Complementary interpolation weights built so that w_lo + w_hi == 1 in
// floating point: per-row gathers are then exactly sum-preserving.
struct Weights {
  double lo, hi;
};

Weights split_unit(double frac) {
  Weights w;
  w.hi = frac;
  w.lo = 1.0 - frac;  // exact for frac in [0, 1] (Sterbenz)
  w.hi = 1.0 - w.lo;  // re-derive so lo + hi == 1 bit-exactly
  return w;
}

// Positive floored division of a by b, returning integer part and
// fractional remainder in [0, 1).
void floor_div(double a, double b, long& q, double& frac) {
  double t = a / b;
  q = static_cast<long>(std::floor(t));
  frac = t - static_cast<double>(q);
  if (frac < 0.0) {
    frac += 1.0;
    --q;
  }
  if (frac >= 1.0) {
    frac -= 1.0;
    ++q;
  }
}

}  // namespace

void ballistic_step(WignerGrid& w, double dt, double force) {
  const int nx = w.nx(), np = w.np();
  const double dx = w.dx(), dp = w.dp();
  // Momentum pre-image offset is row-independent.
  long jshift = 0;
  double pfrac = 0.0;
  floor_div(-force * dt, dp, jshift, pfrac);
  const Weights wp = split_unit(pfrac);
  // Resolution guard: the per-step p shift must stay small.
  if (std::abs(force * dt) > 0.1 * w.spec().p_max)
    throw std::invalid_argument(
        "ballistic_step: per-step momentum shift exceeds p_max/10");

  std::vector<double> out(w.data().size(), 0.0);
  std::vector<double> row(nx);
  for (int j = 0; j < np; ++j) {
    // Source row(s) in p for target row j.
    long jl = j + jshift;
    long jh = jl + 1;
    const bool need_hi = wp.hi != 0.0;
    // Blend the two source p-rows (zero outside the grid).
    for (int i = 0; i < nx; ++i) {
      double v = 0.0;
      if (jl >= 0 && jl < np) v += wp.lo * w.value(i, static_cast<int>(jl));
      if (need_hi && jh >= 0 && jh < np)
        v += wp.hi * w.value(i, static_cast<int>(jh));
      row[i] = v;
    }
    // Circular x gather: pre-image x_i - a_j with
    // a_j = p_j dt - (F/2) dt^2 evaluated at the target momentum.
    double a = w.p(j) * dt - 0.5 * force * dt * dt;
    long m = 0;
    double xfrac = 0.0;
    floor_div(a, dx, m, xfrac);
    const Weights wx = split_unit(xfrac);
    long base = ((static_cast<long>(0) - m) % nx + nx) % nx;
    double* dst = out.data() + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      // source index i - m (mod nx) and its left neighbor i - m - 1
      long si = base + i;
      if (si >= nx) si -= nx;
      long sl = si - 1;
      if (sl < 0) sl += nx;
      dst[i] = wx.lo * row[si] + wx.hi * row[sl];
    }
  }
  w.data().swap(out);
}

void scattering_step(WignerGrid& w, double dt, const ScatteringKernel& k) {
  const int nx = w.nx(), np = w.np();
  for (int j = 0; j < np / 2; ++j) {
    int jm = np - 1 - j;  // mirror row: p_jm = -p_j
    double g = elastic_rate(w.p(j), k);
    double e = std::exp(-2.0 * g * dt);
    // e^{-g dt} cosh(g dt) = (1 + e^{-2 g dt}) / 2; the pair matrix is
    // [a b; b a] with a + b == 1 exactly.
    double a = 0.5 * (1.0 + e);
    double b = 1.0 - a;
    double* up = w.data().data() + static_cast<std::size_t>(j) * nx;
    double* dn = w.data().data() + static_cast<std::size_t>(jm) * nx;
    for (int i = 0; i < nx; ++i) {
      double hi = up[i], lo = dn[i];
      up[i] = a * hi + b * lo;
      dn[i] = b * hi + a * lo;
    }
  }
}

EvolveResult evolve(const WignerGrid& w0, const EvolutionConfig& config,
                    const SnapshotHook& hook) {
  if (!(config.dt > 0.0) || !(config.t_end >= 0.0))
    throw std::invalid_argument("evolve: dt > 0 and t_end >= 0 required");
  if (config.kernel.gamma0 * config.dt > 0.5)
    throw std::invalid_argument("evolve: accuracy guard gamma0*dt <= 0.5");
  if (config.record_every < 1)
    throw std::invalid_argument("evolve: record_every must be >= 1");
  EvolveResult res{w0, {}, 0.0};
  WignerGrid& w = res.final;
  const double mass0 = w.mass();
  const long n_steps = std::lround(config.t_end / config.dt);
  res.series.rows.push_back(observables(w, 0.0));
  if (hook) hook(w, 0.0, 0);
  for (long step = 1; step <= n_steps; ++step) {
    if (config.splitting == Splitting::Strang) {
      scattering_step(w, 0.5 * config.dt, config.kernel);
      ballistic_step(w, config.dt, config.force);
      scattering_step(w, 0.5 * config.dt, config.kernel);
    } else {
      ballistic_step(w, config.dt, config.force);
      scattering_step(w, config.dt, config.kernel);
    }
    // Momentum-boundary guard: mass in the outermost p rows.
    const int nx = w.nx(), np = w.np();
    double edge = 0.0;
    for (int i = 0; i < nx; ++i)
      edge += w.value(i, 0) + w.value(i, np - 1);
    edge *= w.dx() * w.dp();
    if (edge > config.edge_mass_threshold * mass0 &&
        config.overflow == OverflowPolicy::Error)
      throw GuardViolation("evolve: momentum-boundary mass exceeds threshold",
                           step);
    double t = static_cast<double>(step) * config.dt;
    if (step % config.record_every == 0 || step == n_steps)
      res.series.rows.push_back(observables(w, t));
    if (hook) hook(w, t, step);
  }
  res.mass_absorbed = mass0 - w.mass();
  return res;
}

AsymptoticPrediction laplace_asymptotics(double p0, double mass,
                                         const ScatteringKernel& kernel) {
  if (!(mass > 0.0))
    throw std::invalid_argument("laplace_asymptotics: mass must be > 0");
  double g = elastic_rate(p0, kernel);
  if (g <= 0.0)
    throw std::domain_error(
        "laplace_asymptotics: gamma(p0) = 0 has no finite asymptote");
  AsymptoticPrediction a;
  a.displacement = p0 / (2.0 * mass * g);
  a.variance_slope = p0 * p0 / (2.0 * mass * mass * g);
  return a;
}

std::pair<std::complex<double>, std::complex<double>> laplace_pair_solution(
    double k, double p0, double gamma_p, std::complex<double> zeta) {
  // Pair ODE in Fourier space (unit mass starting in the -p0 class):
  //   d/dt W+ = -i k p0 W+ + g (W- - W+)
  //   d/dt W- = +i k p0 W- + g (W+ - W-)
  // Laplace determinant zeta^2 + 2 g zeta + k^2 p0^2.
  std::complex<double> det = zeta * zeta + 2.0 * gamma_p * zeta +
                             k * k * p0 * p0;
  std::complex<double> ikp(0.0, k * p0);
  std::complex<double> w_minus = (zeta + ikp + gamma_p) / det;
  std::complex<double> w_plus = gamma_p / det;
  return {w_minus, w_plus};
}

std::vector<CoherenceFunction> elastic_coherence_series(
    const WignerGrid& w0, const EvolutionConfig& config,
    const std::vector<double>& times) {
  std::vector<long> want;
  want.reserve(times.size());
  for (double t : times) want.push_back(std::lround(t / config.dt));
  std::vector<CoherenceFunction> out(times.size());
  EvolutionConfig cfg = config;
  cfg.t_end = times.empty()
                  ? 0.0
                  : *std::max_element(times.begin(), times.end());
  evolve(w0, cfg, [&](const WignerGrid& w, double, long step) {
    for (std::size_t i = 0; i < want.size(); ++i)
      if (want[i] == step) out[i] = coherence(w);
  });
  return out;
}

}  // namespace wgt
