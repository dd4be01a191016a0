#pragma once

#include <array>
#include <vector>

#include "ptqm/hamiltonian.hpp"

namespace ptqm {

/// r in {0, 0.3, 1, 1.7} x s in {1, 2} x psi in {0, +-pi/6, +-pi/3}.
/// With unbroken_only the broken and exceptional points are dropped.
std::vector<PTParams> standard_pt_grid(bool unbroken_only = true);

/// Hermitian counterpart: s in {1, 2}, u in {-0.5, 1}, r and psi as above.
std::vector<HermitianParams> standard_hermitian_grid();

inline constexpr std::array<double, 3> kGridTimes{0.1, 0.7, 3.0};

}  // namespace ptqm
