#pragma once

// Transition times between nu1 = (1,0) and nu2 = (0,1) under H_NH, and the
// Hermitian comparison at matched energy gap and angular distance.
//
// PT:        tau* = hbar (2 alpha + pi) / omega,  beta_PT = arccos|sin alpha|
// Hermitian: t    = (2 hbar / omega') asin|b|,    beta_h  = arccos|a|
//
// For alpha <= 0 both reduce to tau * omega / (2 hbar) = beta.

#include <cstddef>
#include <numbers>
#include <vector>

#include "ptqm/evolution.hpp"
#include "ptqm/hamiltonian.hpp"

namespace ptqm {

struct TransitionResult {
  double tau = 0.0;
  double beta = 0.0;
  double omega = 0.0;
  double tau_normalized = 0.0;  // tau * omega / (2 hbar)
};

struct SweepRow {
  double alpha = 0.0;
  double tau_star = 0.0;
  double beta_pt = 0.0;
  double omega = 0.0;
  double b_matched = 0.0;
  double t_h = 0.0;
  double beta_h = 0.0;
  double tau_norm_pt = 0.0;
  double tau_norm_h = 0.0;
};

inline constexpr double kDefaultSweepMin = -0.5 * std::numbers::pi + 0.01;
inline constexpr double kDefaultSweepMax = 0.0;
inline constexpr std::size_t kDefaultSweepSteps = 151;

/// tau_n = 2 hbar (alpha + pi/2 + n pi) / omega for n = 0..n_max.
std::vector<double> pt_transition_times(const PTParams& p, int n_max,
                                        const EvolutionConfig& cfg = {});

/// beta is measured between the CPT-normalized nu1' and nu2'.
TransitionResult pt_tau_star(const PTParams& p, const EvolutionConfig& cfg = {});

/// First arrival at |b| = b_target from (1,0) under the optimal Hermitian
/// Hamiltonian (s = u, r = omega'/2). Throws Error{DomainError} unless
/// omega_prime > 0 and b_target in [0, 1].
TransitionResult hermitian_transition_time(double omega_prime, double b_target,
                                           const EvolutionConfig& cfg = {});

/// PT transition for p next to the Hermitian one with omega' = omega and
/// b = cos(alpha). For alpha > 0 the PT path reaches nu2 only after passing
/// the nearer crossing, so the Hermitian time is taken at the matching
/// (second) crossing of |b|.
SweepRow compare_transitions(const PTParams& p, const EvolutionConfig& cfg = {});

/// Largest violation of the time-distance law in a row. For alpha <= 0:
/// tau_norm = beta in both theories, beta_pt = beta_h, tau_norm_pt =
/// tau_norm_h. For alpha > 0 the normalized times equal pi - beta instead.
double equivalence_residual(const SweepRow& row);

/// Rows for a uniform alpha grid on [alpha_min, alpha_max], each built from
/// params_for_alpha(alpha, s). Requires -pi/2 < alpha_min <= alpha_max <= 0,
/// steps >= 2 and s > 0 (Error{DomainError}). OpenMP-parallel over rows.
std::vector<SweepRow> equivalence_sweep(double alpha_min, double alpha_max, std::size_t steps,
                                        double s, const EvolutionConfig& cfg = {});

/// Sequential reference for equivalence_sweep; results are bitwise identical.
std::vector<SweepRow> equivalence_sweep_serial(double alpha_min, double alpha_max,
                                               std::size_t steps, double s,
                                               const EvolutionConfig& cfg = {});

}  // namespace ptqm
