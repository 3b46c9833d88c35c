#pragma once

// Physical constants (CODATA 2018), fixed for bit-stable outputs.
namespace qecost::constants {

inline constexpr double hbar = 1.054571817e-34; // J*s
inline constexpr double k_B = 1.380649e-23;     // J/K
inline constexpr double pi = 3.141592653589793238462643383279502884;

} // namespace qecost::constants
