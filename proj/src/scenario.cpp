#include "wgt/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "wgt/constants.hpp"
#include "wgt/correlation.hpp"
#include "wgt/csv.hpp"
#include "wgt/elastic.hpp"
#include "wgt/geometry.hpp"
#include "wgt/inelastic.hpp"
#include "wgt/noise.hpp"
#include "wgt/noise_quadrature.hpp"
#include "wgt/wigner.hpp"

namespace wgt {

namespace {

namespace fs = std::filesystem;

void write_file(const std::string& path, const std::string& content) {
  fs::path p(path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// Sidecar: every input key echoed plus the constant-table version and
// wall time.  The wall-time line is the only nondeterministic output of
// a scenario, and it never appears in a CSV.
void write_meta(const std::string& path, const std::string& subcommand,
                const Config& cfg,
                std::chrono::steady_clock::time_point started) {
  std::ostringstream ss;
  ss << "subcommand=" << subcommand << '\n';
  ss << "constants=" << constants::table_version << '\n';
  for (const auto& [k, v] : cfg.entries()) ss << k << '=' << v << '\n';
  auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  ss << "wall_time_us=" << us << '\n';
  write_file(path, ss.str());
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("not a number in list: '" + item + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty number list");
  return out;
}

std::string time_tag(double t) {
  std::string s = format_number(t);
  std::replace(s.begin(), s.end(), '.', 'p');
  std::replace(s.begin(), s.end(), '-', 'm');
  return s;
}

std::array<double, 3> parse_bias(const std::string& text) {
  if (text == "x") return {1.0, 0.0, 0.0};
  if (text == "y") return {0.0, 1.0, 0.0};
  if (text == "z" || text == "normal") return {0.0, 0.0, 1.0};
  auto v = parse_list(text);
  if (v.size() != 3) throw ConfigError("bias: need x|y|z or three components");
  double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (!(n > 0.0)) throw ConfigError("bias: zero vector");
  return {v[0] / n, v[1] / n, v[2] / n};
}

EvolutionConfig evolve_config_from(const Config& cfg) {
  EvolutionConfig ec;
  ec.dt = cfg.get_double("dt", 0.05);
  ec.t_end = cfg.get_double("t_end");
  ec.force = cfg.get_double("force", 0.0);
  ec.record_every = static_cast<int>(cfg.get_long("record_every", 10));
  ec.kernel.gamma0 = cfg.get_double("kernel.gamma0", 1.0);
  ec.kernel.l_c = cfg.get_double("kernel.lc", 0.1);
  ec.kernel.white_noise = cfg.get_long("kernel.white", 0) != 0;
  std::string split = cfg.get_string("splitting", "strang");
  if (split == "strang")
    ec.splitting = Splitting::Strang;
  else if (split == "lie")
    ec.splitting = Splitting::Lie;
  else
    throw ConfigError("splitting: expected strang|lie, got '" + split + "'");
  std::string bound = cfg.get_string("boundary", "error");
  if (bound == "absorb")
    ec.overflow = OverflowPolicy::Absorb;
  else if (bound == "error")
    ec.overflow = OverflowPolicy::Error;
  else
    throw ConfigError("boundary: expected absorb|error, got '" + bound + "'");
  ec.edge_mass_threshold = cfg.get_double("edge_threshold", 1e-10);
  return ec;
}

GridSpec grid_from(const Config& cfg) {
  GridSpec g;
  g.x_min = cfg.get_double("grid.x_min");
  g.x_max = cfg.get_double("grid.x_max");
  g.n_x = static_cast<int>(cfg.get_long("grid.nx"));
  g.p_max = cfg.get_double("grid.p_max");
  g.n_p = static_cast<int>(cfg.get_long("grid.np"));
  return g;
}

}  // namespace

void run_rates(const Config& cfg, const std::string& out_prefix) {
  auto started = std::chrono::steady_clock::now();
  const std::string geom = cfg.get_string("geometry");
  MaterialParams mat{cfg.get_double("temperature", 300.0),
                     cfg.get_double("resistivity", constants::rho_copper)};
  SpinCoupling coupling{cfg.get_double("mu", 1.0) * constants::mu_bohr};
  auto bias = parse_bias(cfg.get_string("bias", "z"));
  const double um = 1e-6;

  // Sweep variable: z for the planar geometries, R for the wire.
  double lo, hi;
  int points;
  if (cfg.has("sweep.min_um")) {
    lo = cfg.get_double("sweep.min_um") * um;
    hi = cfg.get_double("sweep.max_um") * um;
    points = static_cast<int>(cfg.get_long("sweep.points", 40));
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
      throw ConfigError("sweep: need 0 < min_um < max_um and points >= 2");
  } else if (geom == "wire") {
    lo = hi = cfg.get_double("R_um") * um;
    points = 1;
  } else {
    lo = hi = cfg.get_double("z_um") * um;
    points = 1;
  }

  std::ostringstream csv;
  csv << "distance_m,Y11,Y22,Y33,trY,gamma_per_s\n";
  for (int i = 0; i < points; ++i) {
    double dist = points == 1
                      ? lo
                      : lo * std::pow(hi / lo, static_cast<double>(i) /
                                                   (points - 1));
    GeometrySpec g = HalfSpace{dist};
    if (geom == "halfspace") {
      g = HalfSpace{dist};
    } else if (geom == "layer") {
      g = Layer{dist, cfg.get_double("d_um") * um};
    } else if (geom == "wire") {
      g = Wire{dist, cfg.get_double("a_um") * um};
    } else {
      throw ConfigError("geometry: expected halfspace|layer|wire, got '" +
                        geom + "'");
    }
    GeometryTensor y;
    try {
      y = geometry_tensor_analytic(g);
    } catch (const WireIntermediateRegime&) {
      y = geometry_tensor_quadrature(g, cfg.get_double("tol", 1e-5));
    }
    double gamma = scattering_rate(coupling, mat, y, bias);
    write_csv_row(csv, std::vector<double>{dist, y.diag[0], y.diag[1],
                                           y.diag[2], y.trace(), gamma});
  }
  write_file(out_prefix + "rates.csv", csv.str());
  write_meta(out_prefix + "rates.meta", "rates", cfg, started);
}

void run_correlation(const Config& cfg, const std::string& out_prefix) {
  auto started = std::chrono::steady_clock::now();
  const double z = cfg.get_double("z_um", 1.0) * 1e-6;
  const double s_max = cfg.get_double("s_max_over_z", 4.0);
  const int samples = static_cast<int>(cfg.get_long("samples", 17));
  const double tol = cfg.get_double("tol", 1e-4);
  if (samples < 2) throw ConfigError("samples must be >= 2");
  std::ostringstream csv;
  csv << "separation_over_z,C_numeric,C_lorentzian\n";
  for (int i = 0; i < samples; ++i) {
    double s_over_z = s_max * static_cast<double>(i) / (samples - 1);
    double c_num = halfspace_correlation_numeric(z, s_over_z * z, tol);
    double c_lor = lorentzian_correlation(s_over_z, 1.0);
    write_csv_row(csv, std::vector<double>{s_over_z, c_num, c_lor});
  }
  write_file(out_prefix + "correlation.csv", csv.str());
  write_meta(out_prefix + "correlation.meta", "correlation", cfg, started);
}

void run_decohere(const Config& cfg, const std::string& out_prefix) {
  auto started = std::chrono::steady_clock::now();
  InelasticParams params;
  params.gamma = cfg.get_double("gamma", 1.0);
  const double lc = cfg.get_double("lc", 1.0);
  params.correlation = CorrelationModel::lorentzian(lc);
  params.force = {cfg.get_double("force", 0.0), 0.0};
  auto times = parse_list(cfg.get_string("times", "0.5,1,2,3"));
  const double s_max = cfg.get_double("s_max_over_lc", 5.0);
  const int samples = static_cast<int>(cfg.get_long("samples", 101));
  if (samples < 2) throw ConfigError("samples must be >= 2");
  std::ostringstream csv;
  csv << "s_over_lc";
  for (double t : times) csv << ",abs_coherence_t" << format_number(t);
  csv << '\n';
  for (int i = 0; i < samples; ++i) {
    double s_over_lc = s_max * static_cast<double>(i) / (samples - 1);
    std::vector<double> row{s_over_lc};
    for (double t : times) {
      auto g = coherence_decay({1.0, 0.0}, {s_over_lc * lc, 0.0}, params, t);
      row.push_back(std::abs(g));
    }
    write_csv_row(csv, row);
  }
  write_file(out_prefix + "decohere.csv", csv.str());
  write_meta(out_prefix + "decohere.meta", "decohere", cfg, started);
}

void run_evolve(const Config& cfg, const std::string& out_prefix) {
  auto started = std::chrono::steady_clock::now();
  GridSpec spec = grid_from(cfg);
  EvolutionConfig ec = evolve_config_from(cfg);
  WignerGrid w0 = init_gaussian(spec, cfg.get_double("init.x0", 0.0),
                                cfg.get_double("init.p0", -1.0),
                                cfg.get_double("init.sigma_x", 1.0),
                                cfg.get_double("init.sigma_p", 0.1));
  std::vector<double> snap_times;
  if (cfg.has("snapshots")) snap_times = parse_list(cfg.get_string("snapshots"));
  std::vector<long> snap_steps;
  for (double t : snap_times) snap_steps.push_back(std::lround(t / ec.dt));

  struct Snapshot {
    double time;
    std::string matrix_csv;
    std::string coherence_csv;
  };
  std::vector<Snapshot> snaps;
  const bool want_matrix = cfg.get_long("snapshot_matrix", 1) != 0;
  auto hook = [&](const WignerGrid& w, double t, long step) {
    if (std::find(snap_steps.begin(), snap_steps.end(), step) ==
        snap_steps.end())
      return;
    Snapshot snap;
    snap.time = t;
    {
      std::ostringstream ss;
      CoherenceFunction c = coherence(w);
      ss << "s,re_coherence,im_coherence,abs_coherence\n";
      for (std::size_t i = 0; i < c.s.size(); ++i)
        write_csv_row(ss, std::vector<double>{c.s[i], c.gamma[i].real(),
                                              c.gamma[i].imag(),
                                              std::abs(c.gamma[i])});
      snap.coherence_csv = ss.str();
    }
    if (want_matrix) {
      std::ostringstream ss;
      for (int j = 0; j < w.np(); ++j) {
        std::vector<double> row(static_cast<std::size_t>(w.nx()));
        for (int i = 0; i < w.nx(); ++i) row[i] = w.value(i, j);
        write_csv_row(ss, row);
      }
      snap.matrix_csv = ss.str();
    }
    snaps.push_back(std::move(snap));
  };

  EvolveResult res = evolve(w0, ec, hook);

  std::ostringstream obs;
  obs << "time,mean_x,var_x,mean_p,var_p,mass\n";
  for (const auto& r : res.series.rows)
    write_csv_row(obs, std::vector<double>{r.time, r.mean_x, r.var_x, r.mean_p,
                                           r.var_p, r.mass});
  write_file(out_prefix + "observables.csv", obs.str());
  for (const auto& snap : snaps) {
    std::string tag = time_tag(snap.time);
    write_file(out_prefix + "coherence_t" + tag + ".csv", snap.coherence_csv);
    if (want_matrix)
      write_file(out_prefix + "snapshot_t" + tag + ".csv", snap.matrix_csv);
  }
  write_meta(out_prefix + "evolve.meta", "evolve", cfg, started);
}

void run_figures(const std::string& out_prefix) {
  const std::string dir = out_prefix + "figures/";

  // Dataset 1: scattering-rate sweeps for the three conductor shapes.
  for (const auto& [name, body] :
       {std::pair<std::string, std::string>{
            "fig1_halfspace_",
            "geometry=halfspace\n[sweep]\nmin_um=0.2\nmax_um=50\npoints=40\n"},
        {"fig1_layer_",
         "geometry=layer\nd_um=1\n[sweep]\nmin_um=0.2\nmax_um=50\npoints=40\n"},
        {"fig1_wire_",
         "geometry=wire\na_um=1\n[sweep]\nmin_um=1.7\nmax_um=50\npoints=40\n"}})
    run_rates(Config::parse_string(body), dir + name);

  // Dataset 2: two-point field correlation above a half-space.
  run_correlation(
      Config::parse_string("z_um=1\ns_max_over_z=4\nsamples=17\ntol=1e-4\n"),
      dir + "fig2_");

  // Dataset 3: closed-form spatial decoherence curves.
  run_decohere(Config::parse_string(
                   "gamma=1\nlc=1\ntimes=0.5,1,2,3\ns_max_over_lc=5\n"
                   "samples=101\n"),
               dir + "fig3_");

  // Dataset 4: forced-run observables.
  run_evolve(Config::parse_string(
                 "force=0.2\ndt=0.02\nt_end=30\nrecord_every=25\n"
                 "boundary=absorb\nsnapshot_matrix=0\n"
                 "[grid]\nx_min=-80\nx_max=260\nnx=1024\np_max=12\nnp=321\n"
                 "[init]\nx0=0\np0=-4.5\nsigma_x=1\nsigma_p=0.2\n"
                 "[kernel]\ngamma0=1\nlc=1\n"),
             dir + "fig4_");

  // Dataset 5: phase-space snapshots of the forced run.
  run_evolve(Config::parse_string(
                 "force=0.2\ndt=0.02\nt_end=30\nrecord_every=250\n"
                 "boundary=absorb\nsnapshots=0,10,30\n"
                 "[grid]\nx_min=-80\nx_max=260\nnx=1024\np_max=12\nnp=321\n"
                 "[init]\nx0=0\np0=-4.5\nsigma_x=1\nsigma_p=0.2\n"
                 "[kernel]\ngamma0=1\nlc=1\n"),
             dir + "fig5_");

  // Dataset 6: field-free spatial diffusion (variance growth).
  run_evolve(Config::parse_string(
                 "dt=0.02\nt_end=50\nrecord_every=25\nedge_threshold=1e-5\n"
                 "snapshot_matrix=0\n"
                 "[grid]\nx_min=-24\nx_max=24\nnx=512\np_max=2\nnp=129\n"
                 "[init]\nx0=0\np0=-1\nsigma_x=1\nsigma_p=0.1\n"
                 "[kernel]\ngamma0=1\nlc=0.1\n"),
             dir + "fig6_");

  // Dataset 7: coherence snapshots showing the standing-wave pattern.
  run_evolve(Config::parse_string(
                 "dt=0.02\nt_end=5\nrecord_every=25\nedge_threshold=1e-5\n"
                 "snapshot_matrix=0\nsnapshots=0,1,5\n"
                 "[grid]\nx_min=-24\nx_max=24\nnx=512\np_max=2\nnp=129\n"
                 "[init]\nx0=0\np0=-1\nsigma_x=1\nsigma_p=0.1\n"
                 "[kernel]\ngamma0=1\nlc=0.1\n"),
             dir + "fig7_");
}

}  // namespace wgt
