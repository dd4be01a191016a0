#include "ptqm/grid.hpp"

#include <numbers>

namespace ptqm {

namespace {

constexpr std::array<double, 4> kR{0.0, 0.3, 1.0, 1.7};
constexpr std::array<double, 5> kPsi{0.0, std::numbers::pi / 6, -std::numbers::pi / 6,
                                     std::numbers::pi / 3, -std::numbers::pi / 3};

}  // namespace

std::vector<PTParams> standard_pt_grid(bool unbroken_only) {
  std::vector<PTParams> grid;
  for (double r : kR) {
    for (double s : {1.0, 2.0}) {
      for (double psi : kPsi) {
        const PTParams p{r, s, psi};
        if (unbroken_only && classify_phase(p) != PhaseClass::Unbroken) continue;
        grid.push_back(p);
      }
    }
  }
  return grid;
}

std::vector<HermitianParams> standard_hermitian_grid() {
  std::vector<HermitianParams> grid;
  for (double s : {1.0, 2.0}) {
    for (double u : {-0.5, 1.0}) {
      for (double r : kR) {
        for (double psi : kPsi) grid.push_back({s, u, r, psi});
      }
    }
  }
  return grid;
}

}  // namespace ptqm
