#pragma once

#include <numbers>

namespace wigner {

inline constexpr double pi = std::numbers::pi;

// hbar*c in GeV*cm, used by the analyzer-distance estimate.
inline constexpr double hbar_c_gev_cm = 1.9733e-14;

// Default tolerance for algebraic identity checks.
inline constexpr double algebra_tol = 1e-12;

}  // namespace wigner
