#pragma once

// Closed-form propagators exp(-i H t / hbar) for both Hamiltonian families.
//
// Any 2x2 H = c0 I + (w/2) sigma.n with (sigma.n)^2 = I exponentiates to
//
//   e^{-i c0 t/hbar} [cos(w t / 2 hbar) I - i sin(w t / 2 hbar) sigma.n].
//
// For H_NH the unit "vector" n is complex and sigma.n coincides with the
// C operator; for H_H it is the usual real Bloch direction.

#include <cstddef>
#include <vector>

#include "ptqm/algebra.hpp"
#include "ptqm/hamiltonian.hpp"

namespace ptqm {

struct EvolutionConfig {
  double hbar = 1.0;
  double tol = 1e-12;
};

/// Throws Error{DomainError} unless hbar > 0 and tol in (0, 1e-6).
void check_config(const EvolutionConfig& cfg);

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<CVec2> states;
  std::vector<double> cpt_norms;    // <psi|psi>_CPT
  std::vector<double> dirac_norms;  // <psi|psi>_D

  std::size_t size() const { return times.size(); }
};

/// Requires the unbroken phase (BrokenPhase / ExceptionalPoint otherwise).
CMat2 propagator_pt(const PTParams& p, double t, const EvolutionConfig& cfg = {});

/// exp(-iHt/hbar) nu1 in closed form:
///   e^{-i r cos(psi) t/hbar} / cos(alpha) * (cos(wt/2hbar - alpha), -i sin(wt/2hbar)).
CVec2 evolve_nu1_closed(const PTParams& p, double t, const EvolutionConfig& cfg = {});

/// A degenerate spectrum (omega' < 1e-14) yields the pure phase
/// e^{-i(s+u)t/2hbar} I.
CMat2 propagator_hermitian(const HermitianParams& p, double t, const EvolutionConfig& cfg = {});

/// Samples `steps` uniformly spaced times on [0, t_max] and records the
/// evolved state with its CPT and Dirac norms. t_max == 0 gives a single
/// sample. OpenMP-parallel over samples.
EvolutionTrace trace_evolution(const PTParams& p, const CVec2& state0, double t_max,
                               std::size_t steps, const EvolutionConfig& cfg = {});

/// Sequential reference for trace_evolution; results are bitwise identical.
EvolutionTrace trace_evolution_serial(const PTParams& p, const CVec2& state0, double t_max,
                                      std::size_t steps, const EvolutionConfig& cfg = {});

}  // namespace ptqm
