// Physical constants (SI, CODATA 2018) and simulation-unit conventions.
//
// The transport modules work in simulation units hbar = m = 1; only the
// near-field noise module speaks SI.  A (gamma0, l_c) pair in simulation
// units maps to physical units via gamma0 -> gamma [1/s] from the rates
// module and l_c -> z [m] (the correlation length of the magnetic noise
// is set by the atom-surface distance).

#pragma once

namespace wgt::constants {

inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K
inline constexpr double eps0 = 8.854187813e-12;       // F/m
inline constexpr double c_light = 2.99792458e8;       // m/s
inline constexpr double mu_bohr = 9.274010078e-24;    // J/T

// DC resistivity of copper at room temperature.
inline constexpr double rho_copper = 1.7e-8;          // Ohm m

// Bumped whenever a constant above changes; echoed in metadata sidecars
// so archived CSV datasets can be traced to the table that produced them.
inline constexpr const char* table_version = "codata-2018.1";

}  // namespace wgt::constants
