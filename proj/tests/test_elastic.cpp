#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "wgt/elastic.hpp"

using namespace wgt;

namespace {

const GridSpec kSpec{-16.0, 16.0, 256, 2.0, 129};

ScatteringKernel kernel(double gamma0, double lc) {
  ScatteringKernel k;
  k.gamma0 = gamma0;
  k.l_c = lc;
  return k;
}

EvolutionConfig config(double dt, double t_end, double gamma0, double lc,
                       double force = 0.0) {
  EvolutionConfig c;
  c.dt = dt;
  c.t_end = t_end;
  c.kernel = kernel(gamma0, lc);
  c.force = force;
  c.record_every = 100000;  // only t = 0 and the final step by default
  return c;
}

}  // namespace

TEST_CASE("ballistic step with integer-cell shift is an exact rotation") {
  WignerGrid w(kSpec);
  // Row at p = 1: dt chosen so the shift is exactly 8 cells.
  int j = 96;  // p = 1
  w.value(10, j) = 3.0;
  double dt = 8.0 * w.dx() / w.p(j);
  ballistic_step(w, dt, 0.0);
  CHECK(w.value(18, j) == 3.0);
  CHECK(w.value(10, j) == 0.0);
}

TEST_CASE("ballistic step conserves mass exactly at F = 0") {
  WignerGrid w = init_gaussian(kSpec, 0.0, 0.6, 1.0, 0.2);
  double m0 = w.mass();
  for (int i = 0; i < 100; ++i) ballistic_step(w, 0.0137, 0.0);
  CHECK(std::abs(w.mass() - m0) <= 1e-13);
}

TEST_CASE("forced ballistic motion follows the exact trajectory") {
  GridSpec spec{-16.0, 16.0, 512, 2.0, 257};
  WignerGrid w = init_gaussian(spec, -4.0, -0.5, 1.0, 0.1);
  double dt = 0.01, f = 0.5;
  int steps = 100;
  for (int i = 0; i < steps; ++i) ballistic_step(w, dt, f);
  double t = steps * dt;
  ObservableRow r = observables(w);
  double expect_x = -4.0 + (-0.5) * t + 0.5 * f * t * t;
  double expect_p = -0.5 + f * t;
  CHECK(r.mean_x == doctest::Approx(expect_x).epsilon(0.005));
  CHECK(r.mean_p == doctest::Approx(expect_p).epsilon(0.005));
}

TEST_CASE("scattering step: pinned pair exchange at gamma dt = 0.5") {
  WignerGrid w(kSpec);
  int j = 96, jm = 32;  // p = +-1
  w.value(0, j) = 1.0;
  ScatteringKernel k = kernel(std::exp(1.0), 1.0);  // gamma(1) = 1
  scattering_step(w, 0.5, k);
  CHECK(w.value(0, j) ==
        doctest::Approx(std::exp(-0.5) * std::cosh(0.5)).epsilon(1e-12));
  CHECK(w.value(0, jm) ==
        doctest::Approx(std::exp(-0.5) * std::sinh(0.5)).epsilon(1e-12));
  CHECK(w.value(0, j) == doctest::Approx(0.6839397).epsilon(1e-6));
  CHECK(w.value(0, jm) == doctest::Approx(0.3160603).epsilon(1e-6));
}

TEST_CASE("scattering step limits: identity and full equilibration") {
  WignerGrid w(kSpec);
  int j = 96, jm = 32;
  w.value(0, j) = 1.0;
  ScatteringKernel k = kernel(std::exp(1.0), 1.0);
  scattering_step(w, 0.0, k);
  CHECK(w.value(0, j) == 1.0);
  CHECK(w.value(0, jm) == 0.0);
  scattering_step(w, 1e6, k);
  CHECK(w.value(0, j) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w.value(0, jm) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("scattering step leaves the p = 0 row untouched") {
  WignerGrid w(kSpec);
  w.value(5, 64) = 2.0;  // p = 0
  scattering_step(w, 0.3, kernel(1.0, 0.1));
  CHECK(w.value(5, 64) == 2.0);
}

TEST_CASE("conservation suite: mass, positivity, |p|-marginal") {
  GridSpec spec{-24.0, 24.0, 256, 2.0, 129};
  WignerGrid w0 = init_gaussian(spec, 0.0, -1.0, 1.5, 0.1);
  EvolutionConfig cfg = config(0.005, 10.0, 1.0, 0.1);
  cfg.edge_mass_threshold = 1e-8;
  std::vector<double> mabs0;
  {
    auto m = w0.momentum_marginal();
    mabs0.resize(m.size() / 2 + 1);
    for (int j = 0; j <= w0.np() / 2; ++j)
      mabs0[j] = m[j] + (j == w0.np() / 2 ? 0.0 : m[w0.np() - 1 - j]);
  }
  EvolveResult res = evolve(w0, cfg);  // 2000 steps
  CHECK(std::abs(res.final.mass() - w0.mass()) <= 1e-12 * w0.mass());
  double min_w = 0.0;
  for (double v : res.final.data()) min_w = std::min(min_w, v);
  CHECK(min_w >= 0.0);
  auto m = res.final.momentum_marginal();
  for (int j = 0; j <= res.final.np() / 2; ++j) {
    double mj =
        m[j] + (j == res.final.np() / 2 ? 0.0 : m[res.final.np() - 1 - j]);
    CHECK(std::abs(mj - mabs0[j]) <= 1e-12);
  }
}

TEST_CASE("F = 0: <p^2> conserved, <p> relaxes toward zero") {
  GridSpec spec{-24.0, 24.0, 256, 2.0, 129};
  WignerGrid w0 = init_gaussian(spec, 0.0, -1.0, 1.5, 0.1);
  EvolutionConfig cfg = config(0.01, 5.0, 1.0, 0.1);
  cfg.record_every = 100;
  EvolveResult res = evolve(w0, cfg);
  const auto& rows = res.series.rows;
  double pp0 = rows.front().var_p + rows.front().mean_p * rows.front().mean_p;
  double prev_abs = std::abs(rows.front().mean_p);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double pp = rows[i].var_p + rows[i].mean_p * rows[i].mean_p;
    CHECK(pp == doctest::Approx(pp0).epsilon(1e-10));
    CHECK(std::abs(rows[i].mean_p) <= prev_abs + 1e-12);
    prev_abs = std::abs(rows[i].mean_p);
  }
}

TEST_CASE("long-time displacement approaches p0 / (2 gamma(p0))") {
  // Narrow cloud at p0 = -1 with gamma(p0) = e^{-0.1}: the cloud ends up
  // displaced by one free-flight distance, here -1/(2 e^{-0.1}).
  GridSpec spec{-24.0, 24.0, 512, 2.0, 129};
  WignerGrid w0 = init_gaussian(spec, 0.0, -1.0, 1.0, 0.1);
  EvolutionConfig cfg = config(0.01, 40.0, 1.0, 0.1);
  cfg.edge_mass_threshold = 1e-6;
  EvolveResult res = evolve(w0, cfg);
  AsymptoticPrediction pred = laplace_asymptotics(1.0, 1.0, cfg.kernel);
  double displacement = res.series.rows.back().mean_x;
  CHECK(displacement == doctest::Approx(-pred.displacement).epsilon(0.05));
}

TEST_CASE("measured spatial-diffusion slope is twice the quoted one") {
  // The solver's late-time var_x slope is p0^2/gamma(p0) — twice
  // laplace_asymptotics' variance_slope.  The factor is frozen here as
  // the documented discrepancy the acceptance suite reports.
  GridSpec spec{-24.0, 24.0, 512, 2.0, 129};
  WignerGrid w0 = init_gaussian(spec, 0.0, -1.0, 1.0, 0.1);
  EvolutionConfig cfg = config(0.005, 40.0, 1.0, 0.1);
  cfg.record_every = 400;  // every 2 time units
  cfg.edge_mass_threshold = 1e-6;
  EvolveResult res = evolve(w0, cfg);
  const auto& rows = res.series.rows;
  // Least-squares slope of var_x over t in [20, 40].
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (r.time < 20.0) continue;
    sx += r.time;
    sy += r.var_x;
    sxx += r.time * r.time;
    sxy += r.time * r.var_x;
    ++n;
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  AsymptoticPrediction pred = laplace_asymptotics(1.0, 1.0, cfg.kernel);
  CHECK(slope / pred.variance_slope == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("laplace asymptotics: pinned values and scalings") {
  ScatteringKernel k = kernel(std::exp(1.0), 1.0);  // gamma(1) = 1
  AsymptoticPrediction a = laplace_asymptotics(1.0, 1.0, k);
  CHECK(a.displacement == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(a.variance_slope == doctest::Approx(0.5).epsilon(1e-12));
  ScatteringKernel flat = kernel(1.0, 1e-12);  // essentially momentum-flat
  AsymptoticPrediction b1 = laplace_asymptotics(1.0, 1.0, flat);
  AsymptoticPrediction b2 = laplace_asymptotics(2.0, 1.0, flat);
  CHECK(b2.displacement / b1.displacement == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(b2.variance_slope / b1.variance_slope ==
        doctest::Approx(4.0).epsilon(1e-6));
  ScatteringKernel off = kernel(0.0, 1.0);
  CHECK_THROWS_AS(laplace_asymptotics(1.0, 1.0, off), std::domain_error);
}

TEST_CASE("laplace pair solution: roots and small-k inversion vs solver") {
  double g = 1.0, p0 = 1.0, kk = 0.05;
  // Denominator roots zeta^2 + 2 g zeta + k^2 p0^2.
  double disc = std::sqrt(g * g - kk * kk * p0 * p0);
  double z_min = -g + disc, z_max = -g - disc;
  auto [wm, wp] = laplace_pair_solution(kk, p0, g, {z_min + 1e-3, 0.0});
  auto [wm2, wp2] = laplace_pair_solution(kk, p0, g, {z_min - 1e-3, 0.0});
  // The pole flips the sign of the dominant term across z_min.
  CHECK(((wm.real() > 0.0) != (wm2.real() > 0.0)));
  // Partial-fraction inversion of the total density
  //   n~(k; zeta) = (zeta + 2g) / (zeta^2 + 2 g zeta + k^2 p0^2)
  // gives n(k; t); its k-derivative at small k tracks <x(t)>.
  auto n_of_t = [&](double t) {
    double a = (z_min + 2.0 * g) / (z_min - z_max);
    double b = (z_max + 2.0 * g) / (z_max - z_min);
    return a * std::exp(z_min * t) + b * std::exp(z_max * t);
  };
  // Long-time limit: exp(z_min t) with z_min ~ -k^2 p0^2 / (2 g).
  double t = 30.0;
  double approx = std::exp(-kk * kk * p0 * p0 / (2.0 * g) * t);
  CHECK(n_of_t(t) == doctest::Approx(approx).epsilon(0.01));
}

TEST_CASE("splitting order: Strang about 2, Lie about 1") {
  GridSpec spec{-24.0, 24.0, 256, 2.0, 129};
  WignerGrid w0 = init_gaussian(spec, 0.0, -1.0, 1.5, 0.1);
  auto run = [&](Splitting split, double dt) {
    EvolutionConfig cfg = config(dt, 4.0, 1.0, 0.5);
    cfg.splitting = split;
    return evolve(w0, cfg).series.rows.back().mean_x;
  };
  for (auto [split, min_order] :
       {std::pair<Splitting, double>{Splitting::Strang, 1.8},
        {Splitting::Lie, 0.9}}) {
    double ref = run(split, 0.00125);
    double e1 = std::abs(run(split, 0.02) - ref);
    double e2 = std::abs(run(split, 0.01) - ref);
    double order = std::log2(e1 / e2);
    CHECK(order >= min_order);
  }
}

TEST_CASE("evolve guards: bad dt, accuracy guard, boundary overflow") {
  WignerGrid w0 = init_gaussian(kSpec, 0.0, 0.0, 1.0, 0.2);
  EvolutionConfig cfg = config(-0.1, 1.0, 1.0, 0.1);
  CHECK_THROWS_AS(evolve(w0, cfg), std::invalid_argument);
  cfg = config(0.6, 1.0, 1.0, 0.1);
  CHECK_THROWS_AS(evolve(w0, cfg), std::invalid_argument);
  // Strong force pushes the cloud into the p boundary: Error throws
  // with the offending step, Absorb accounts the lost mass.
  cfg = config(0.01, 40.0, 0.01, 0.1, 0.5);
  cfg.overflow = OverflowPolicy::Error;
  CHECK_THROWS_AS(evolve(w0, cfg), GuardViolation);
  cfg.overflow = OverflowPolicy::Absorb;
  EvolveResult res = evolve(w0, cfg);
  CHECK(res.mass_absorbed > 0.01);
  CHECK(res.final.mass() + res.mass_absorbed ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("coherence series: envelope width constant, beats at pi/p0") {
  GridSpec spec{-24.0, 24.0, 512, 2.0, 129};
  WignerGrid w0 = init_gaussian(spec, 0.0, -1.0, 1.0, 0.1);
  EvolutionConfig cfg = config(0.01, 5.0, 1.0, 0.1);
  auto series = elastic_coherence_series(w0, cfg, {0.0, 5.0});
  REQUIRE(series.size() == 2);
  // Envelope: |Gamma| sampled at the antinodes s_k = k pi / p0, where
  // |cos(p0 s)| = 1 for a two-class marginal.
  auto envelope_width = [&](const CoherenceFunction& c) {
    // 1/e width from the s >= 0 antinode samples (grid s values nearest
    // to k pi).
    double target = std::exp(-1.0) * std::abs(c.gamma[c.s.size() / 2]);
    double width = c.s.back();
    for (std::size_t i = c.s.size() / 2; i < c.s.size(); ++i) {
      double k = std::round(c.s[i] / std::numbers::pi);
      if (std::abs(c.s[i] - k * std::numbers::pi) > 0.5) continue;
      if (std::abs(c.gamma[i]) < target) {
        width = c.s[i];
        break;
      }
    }
    return width;
  };
  double w_start = envelope_width(series[0]);
  double w_end = envelope_width(series[1]);
  CHECK(w_end == doctest::Approx(w_start).epsilon(0.02));
  // Oscillation zero near s = pi/(2 p0) once the mirror class fills.
  auto late = coherence_at(
      evolve(w0, cfg).final,
      {0.0, std::numbers::pi / 2.0, std::numbers::pi});
  CHECK(std::abs(late.gamma[1]) < 0.1 * std::abs(late.gamma[0]));
  CHECK(std::abs(late.gamma[2]) > 0.5 * std::abs(late.gamma[0]));
}
