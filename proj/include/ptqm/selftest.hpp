#pragma once

#include <string>
#include <vector>

#include "ptqm/evolution.hpp"

namespace ptqm {

struct SelftestResult {
  std::string invariant;
  double worst = 0.0;      // largest residual observed
  double threshold = 0.0;  // pass iff worst < threshold
  bool passed = false;
};

/// Runs every library invariant over the standard grid. Exact identities
/// are held to cfg.tol, oracle and trajectory checks to 100 * cfg.tol.
std::vector<SelftestResult> run_selftest(const EvolutionConfig& cfg = {});

}  // namespace ptqm
