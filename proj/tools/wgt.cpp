// wgt: waveguide transport toolkit.
//
//   wgt rates|correlation|decohere|evolve [flags] [--config FILE] --out-prefix P
//   wgt figures --out-prefix P
//   wgt --constants
//
// Flags override config-file keys.  Exit codes: 0 success, 2 config
// error, 3 numerical-guard abort.

#include <cstdio>
#include <exception>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "wgt/config.hpp"
#include "wgt/constants.hpp"
#include "wgt/elastic.hpp"
#include "wgt/noise_quadrature.hpp"
#include "wgt/scenario.hpp"

namespace {

void print_constants() {
  namespace k = wgt::constants;
  std::printf("table_version  %s\n", k::table_version);
  std::printf("hbar           %.10g J s\n", k::hbar);
  std::printf("k_boltzmann    %.10g J/K\n", k::k_boltzmann);
  std::printf("eps0           %.10g F/m\n", k::eps0);
  std::printf("c_light        %.10g m/s\n", k::c_light);
  std::printf("mu_bohr        %.10g J/T\n", k::mu_bohr);
  std::printf("rho_copper     %.10g Ohm m\n", k::rho_copper);
}

struct SubcommandState {
  std::string config_path;
  std::string out_prefix;
  std::map<std::string, std::string> overrides;
};

// Registers --config/--out-prefix plus the listed value flags; each flag
// maps to a config key and overrides the file.
void add_common(CLI::App* sub, SubcommandState& st,
                const std::vector<std::pair<std::string, std::string>>& flags) {
  sub->add_option("--config", st.config_path, "key=value config file");
  sub->add_option("--out-prefix", st.out_prefix, "output path prefix")
      ->required();
  for (const auto& [flag, key] : flags) {
    const std::string k = key;
    sub->add_option_function<std::string>(
        flag, [&st, k](const std::string& v) { st.overrides[k] = v; });
  }
}

wgt::Config load_config(const SubcommandState& st) {
  wgt::Config cfg = st.config_path.empty()
                        ? wgt::Config{}
                        : wgt::Config::parse_file(st.config_path);
  for (const auto& [k, v] : st.overrides) cfg.set(k, v);
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"waveguide transport toolkit"};
  app.require_subcommand(0, 1);
  bool show_constants = false;
  app.add_flag("--constants", show_constants,
               "print the physical-constant table and exit");

  SubcommandState rates, correlation, decohere, evolve;
  std::string figures_prefix;

  CLI::App* sub_rates = app.add_subcommand("rates", "noise scattering rates");
  add_common(sub_rates, rates,
             {{"--geometry", "geometry"},
              {"--z", "z_um"},
              {"--d", "d_um"},
              {"--R", "R_um"},
              {"--a", "a_um"},
              {"--temperature", "temperature"},
              {"--resistivity", "resistivity"},
              {"--mu", "mu"},
              {"--bias", "bias"},
              {"--sweep-min", "sweep.min_um"},
              {"--sweep-max", "sweep.max_um"},
              {"--sweep-points", "sweep.points"}});

  CLI::App* sub_corr =
      app.add_subcommand("correlation", "two-point field correlation");
  add_common(sub_corr, correlation,
             {{"--z", "z_um"},
              {"--s-max", "s_max_over_z"},
              {"--samples", "samples"},
              {"--tol", "tol"}});

  CLI::App* sub_dec =
      app.add_subcommand("decohere", "closed-form spatial decoherence");
  add_common(sub_dec, decohere,
             {{"--gamma", "gamma"},
              {"--lc", "lc"},
              {"--force", "force"},
              {"--times", "times"},
              {"--s-max", "s_max_over_lc"},
              {"--samples", "samples"}});

  CLI::App* sub_evo =
      app.add_subcommand("evolve", "split-step phase-space evolution");
  add_common(sub_evo, evolve,
             {{"--dt", "dt"},
              {"--t-end", "t_end"},
              {"--force", "force"},
              {"--splitting", "splitting"},
              {"--boundary", "boundary"},
              {"--record-every", "record_every"},
              {"--snapshots", "snapshots"}});

  CLI::App* sub_fig = app.add_subcommand("figures", "canned figure datasets");
  sub_fig->add_option("--out-prefix", figures_prefix, "output path prefix")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (show_constants) {
    print_constants();
    return wgt::kExitOk;
  }
  if (app.get_subcommands().empty()) {
    std::fprintf(stderr, "wgt: no subcommand given (try --help)\n");
    return wgt::kExitConfigError;
  }

  try {
    if (sub_rates->parsed()) {
      wgt::run_rates(load_config(rates), rates.out_prefix);
    } else if (sub_corr->parsed()) {
      wgt::run_correlation(load_config(correlation), correlation.out_prefix);
    } else if (sub_dec->parsed()) {
      wgt::run_decohere(load_config(decohere), decohere.out_prefix);
    } else if (sub_evo->parsed()) {
      wgt::run_evolve(load_config(evolve), evolve.out_prefix);
    } else if (sub_fig->parsed()) {
      wgt::run_figures(figures_prefix);
    }
  } catch (const wgt::ConfigError& e) {
    std::fprintf(stderr, "wgt: config error: %s\n", e.what());
    return wgt::kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "wgt: config error: %s\n", e.what());
    return wgt::kExitConfigError;
  } catch (const wgt::GuardViolation& e) {
    std::fprintf(stderr, "wgt: numerical guard at step %ld: %s\n", e.step,
                 e.what());
    return wgt::kExitNumericalGuard;
  } catch (const wgt::QuadratureNonConvergence& e) {
    std::fprintf(stderr, "wgt: numerical guard: %s\n", e.what());
    return wgt::kExitNumericalGuard;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "wgt: error: %s\n", e.what());
    return 1;
  }
  return wgt::kExitOk;
}
