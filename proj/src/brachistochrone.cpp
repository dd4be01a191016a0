#include "ptqm/brachistochrone.hpp"

#include <algorithm>
#include <cmath>

#include "ptqm/error.hpp"
#include "ptqm/inner_product.hpp"
#include "ptqm/symmetry_ops.hpp"
#include "parallel_for.hpp"

namespace ptqm {

namespace {

constexpr double kPi = std::numbers::pi;

PTDerived derive_unbroken(const PTParams& p) {
  PTDerived d = derive_pt(p);
  if (d.phase != PhaseClass::Unbroken) {
    throw Error(ErrorKind::ExceptionalPoint, "transition time undefined at the exceptional point");
  }
  return d;
}

void check_sweep(double alpha_min, double alpha_max, std::size_t steps, double s) {
  const bool ok = alpha_min > -0.5 * kPi && alpha_min <= alpha_max && alpha_max <= 0.0 &&
                  steps >= 2 && s > 0.0 && std::isfinite(s);
  if (!ok) {
    throw Error(ErrorKind::DomainError,
                "equivalence_sweep: need -pi/2 < alpha_min <= alpha_max <= 0, steps >= 2, s > 0");
  }
}

double grid_alpha(double alpha_min, double alpha_max, std::size_t steps, std::size_t i) {
  if (i + 1 == steps) return alpha_max;
  return alpha_min + (alpha_max - alpha_min) * static_cast<double>(i) /
                         static_cast<double>(steps - 1);
}

}  // namespace

std::vector<double> pt_transition_times(const PTParams& p, int n_max, const EvolutionConfig& cfg) {
  check_config(cfg);
  if (n_max < 0) throw Error(ErrorKind::DomainError, "pt_transition_times: n_max must be >= 0");
  const PTDerived d = derive_unbroken(p);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    times.push_back(2.0 * cfg.hbar * (d.alpha + 0.5 * kPi + n * kPi) / d.omega);
  }
  return times;
}

TransitionResult pt_tau_star(const PTParams& p, const EvolutionConfig& cfg) {
  check_config(cfg);
  const PTDerived d = derive_unbroken(p);
  const OperatorSet ops = make_operator_set(p);
  const CVec2 nu1 = cpt_normalize({1.0, 0.0}, ops);
  const CVec2 nu2 = cpt_normalize({0.0, 1.0}, ops);

  TransitionResult res;
  res.omega = d.omega;
  res.tau = cfg.hbar * (2.0 * d.alpha + kPi) / d.omega;
  res.beta = angular_distance(nu1, nu2, ops, PairingKind::CPT);
  res.tau_normalized = res.tau * res.omega / (2.0 * cfg.hbar);
  return res;
}

TransitionResult hermitian_transition_time(double omega_prime, double b_target,
                                           const EvolutionConfig& cfg) {
  check_config(cfg);
  if (!(omega_prime > 0.0) || !std::isfinite(omega_prime)) {
    throw Error(ErrorKind::DomainError, "hermitian_transition_time: omega' must be positive");
  }
  if (!(b_target >= 0.0 && b_target <= 1.0)) {
    throw Error(ErrorKind::DomainError, "hermitian_transition_time: |b| must lie in [0, 1]");
  }
  // |a| = sqrt(1 - b^2), factored for accuracy near b = 1
  const double a_mag = std::sqrt((1.0 - b_target) * (1.0 + b_target));

  TransitionResult res;
  res.omega = omega_prime;
  res.tau = 2.0 * cfg.hbar / omega_prime * std::asin(b_target);
  res.beta = std::acos(a_mag);
  res.tau_normalized = res.tau * omega_prime / (2.0 * cfg.hbar);
  return res;
}

SweepRow compare_transitions(const PTParams& p, const EvolutionConfig& cfg) {
  const PTDerived d = derive_unbroken(p);
  const TransitionResult pt = pt_tau_star(p, cfg);
  const double b = std::cos(d.alpha);
  TransitionResult h = hermitian_transition_time(d.omega, b, cfg);
  if (d.alpha > 0.0) {
    // second time |b(t)| = sin(omega' t / 2 hbar) reaches b
    h.tau = 2.0 * cfg.hbar / d.omega * (kPi - std::asin(b));
    h.tau_normalized = h.tau * d.omega / (2.0 * cfg.hbar);
  }

  SweepRow row;
  row.alpha = d.alpha;
  row.tau_star = pt.tau;
  row.beta_pt = pt.beta;
  row.omega = d.omega;
  row.b_matched = b;
  row.t_h = h.tau;
  row.beta_h = h.beta;
  row.tau_norm_pt = pt.tau_normalized;
  row.tau_norm_h = h.tau_normalized;
  return row;
}

double equivalence_residual(const SweepRow& row) {
  const double target_pt = row.alpha > 0.0 ? kPi - row.beta_pt : row.beta_pt;
  const double target_h = row.alpha > 0.0 ? kPi - row.beta_h : row.beta_h;
  return std::max({std::abs(row.tau_norm_pt - target_pt), std::abs(row.tau_norm_h - target_h),
                   std::abs(row.beta_pt - row.beta_h),
                   std::abs(row.tau_norm_pt - row.tau_norm_h)});
}

std::vector<SweepRow> equivalence_sweep(double alpha_min, double alpha_max, std::size_t steps,
                                        double s, const EvolutionConfig& cfg) {
  check_sweep(alpha_min, alpha_max, steps, s);
  check_config(cfg);
  std::vector<SweepRow> rows(steps);
  internal::parallel_for(steps, [&](std::size_t k) {
    rows[k] = compare_transitions(params_for_alpha(grid_alpha(alpha_min, alpha_max, steps, k), s),
                                  cfg);
  });
  return rows;
}

std::vector<SweepRow> equivalence_sweep_serial(double alpha_min, double alpha_max,
                                               std::size_t steps, double s,
                                               const EvolutionConfig& cfg) {
  check_sweep(alpha_min, alpha_max, steps, s);
  check_config(cfg);
  std::vector<SweepRow> rows(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    rows[k] = compare_transitions(params_for_alpha(grid_alpha(alpha_min, alpha_max, steps, k), s),
                                  cfg);
  }
  return rows;
}

}  // namespace ptqm
