// Scenario runners behind the CLI subcommands.  Every scenario is a pure
// function of its Config: same config, same bytes out.

#pragma once

#include <string>

#include "wgt/config.hpp"

namespace wgt {

// Exit codes shared by the runners and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalGuard = 3;

// Each runner writes <out_prefix>... CSV file(s) plus a ".meta" sidecar
// echoing all inputs and the constant-table version.  They throw
// ConfigError for bad keys and GuardViolation (or
// QuadratureNonConvergence) for numerical aborts; the CLI maps those to
// exit codes 2 and 3.
void run_rates(const Config& cfg, const std::string& out_prefix);
void run_correlation(const Config& cfg, const std::string& out_prefix);
void run_decohere(const Config& cfg, const std::string& out_prefix);
void run_evolve(const Config& cfg, const std::string& out_prefix);

// The seven canned datasets under <out_prefix>/figures/.
void run_figures(const std::string& out_prefix);

}  // namespace wgt
