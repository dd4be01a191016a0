#include "ptqm/evolution.hpp"

#include <cmath>

#include "ptqm/error.hpp"
#include "ptqm/inner_product.hpp"
#include "ptqm/symmetry_ops.hpp"
#include "parallel_for.hpp"

namespace ptqm {

void check_config(const EvolutionConfig& cfg) {
  if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar)) {
    throw Error(ErrorKind::DomainError, "hbar must be positive and finite");
  }
  if (!(cfg.tol > 0.0 && cfg.tol < 1e-6)) {
    throw Error(ErrorKind::DomainError, "tol must lie in (0, 1e-6)");
  }
}

namespace {

PTDerived derive_unbroken(const PTParams& p) {
  PTDerived d = derive_pt(p);
  if (d.phase != PhaseClass::Unbroken) {
    throw Error(ErrorKind::ExceptionalPoint, "evolution undefined at the exceptional point");
  }
  return d;
}

// sigma.mu with mu = (2/omega)(s, 0, i r sin psi); numerically the C matrix
CMat2 pt_axis(const PTDerived& d) {
  const double k = 2.0 / d.omega;
  return pauli_compose(
      {0.0, k * d.params.s, 0.0, CScalar{0.0, k * d.params.r * std::sin(d.params.psi)}});
}

// e^{-i c0 t/hbar} [cos(x) I - i sin(x) N],  x = omega t / (2 hbar)
CMat2 two_level_propagator(double c0, double omega, const CMat2& unit_axis, double t,
                           double hbar) {
  const double x = 0.5 * omega * t / hbar;
  const CScalar phase = std::polar(1.0, -c0 * t / hbar);
  return phase * (std::cos(x) * CMat2::identity() - (kI * std::sin(x)) * unit_axis);
}

struct TraceKernel {
  PTDerived d;
  OperatorSet ops;
  CMat2 axis;
  CVec2 state0;
  double t_max;
  std::size_t steps;
  double hbar;

  static TraceKernel make(const PTParams& p, const CVec2& state0, double t_max,
                          std::size_t steps, const EvolutionConfig& cfg) {
    check_config(cfg);
    if (steps < 2) throw Error(ErrorKind::DomainError, "trace_evolution: steps must be >= 2");
    if (!(t_max >= 0.0) || !std::isfinite(t_max)) {
      throw Error(ErrorKind::DomainError, "trace_evolution: t_max must be finite and >= 0");
    }
    const PTDerived d = derive_unbroken(p);
    TraceKernel k{d, make_operator_set(p), pt_axis(d), state0, t_max, steps, cfg.hbar};
    if (t_max == 0.0) k.steps = 1;
    return k;
  }

  EvolutionTrace allocate() const {
    EvolutionTrace tr;
    tr.times.resize(steps);
    tr.states.resize(steps);
    tr.cpt_norms.resize(steps);
    tr.dirac_norms.resize(steps);
    return tr;
  }

  void sample(EvolutionTrace& tr, std::size_t i) const {
    const double t =
        steps == 1 ? 0.0 : t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    const CMat2 U =
        two_level_propagator(d.params.r * std::cos(d.params.psi), d.omega, axis, t, hbar);
    const CVec2 psi = U * state0;
    tr.times[i] = t;
    tr.states[i] = psi;
    tr.cpt_norms[i] = cpt_product(psi, psi, ops).real();
    tr.dirac_norms[i] = dirac_product(psi, psi).real();
  }
};

}  // namespace

CMat2 propagator_pt(const PTParams& p, double t, const EvolutionConfig& cfg) {
  check_config(cfg);
  const PTDerived d = derive_unbroken(p);
  return two_level_propagator(p.r * std::cos(p.psi), d.omega, pt_axis(d), t, cfg.hbar);
}

CVec2 evolve_nu1_closed(const PTParams& p, double t, const EvolutionConfig& cfg) {
  check_config(cfg);
  const PTDerived d = derive_unbroken(p);
  const double x = 0.5 * d.omega * t / cfg.hbar;
  const CScalar pref = std::polar(1.0 / std::cos(d.alpha), -p.r * std::cos(p.psi) * t / cfg.hbar);
  return {pref * std::cos(x - d.alpha), pref * (-kI * std::sin(x))};
}

CMat2 propagator_hermitian(const HermitianParams& p, double t, const EvolutionConfig& cfg) {
  check_config(cfg);
  const double c0 = 0.5 * (p.s + p.u);
  const double wp = derive_hermitian(p).omega_prime;
  if (wp < 1e-14) {
    return std::polar(1.0, -c0 * t / cfg.hbar) * CMat2::identity();
  }
  const PauliDecomp n{0.0, 2.0 * p.r * std::cos(p.psi) / wp, -2.0 * p.r * std::sin(p.psi) / wp,
                      (p.s - p.u) / wp};
  return two_level_propagator(c0, wp, pauli_compose(n), t, cfg.hbar);
}

EvolutionTrace trace_evolution(const PTParams& p, const CVec2& state0, double t_max,
                               std::size_t steps, const EvolutionConfig& cfg) {
  const TraceKernel k = TraceKernel::make(p, state0, t_max, steps, cfg);
  EvolutionTrace tr = k.allocate();
  internal::parallel_for(k.steps, [&](std::size_t i) { k.sample(tr, i); });
  return tr;
}

EvolutionTrace trace_evolution_serial(const PTParams& p, const CVec2& state0, double t_max,
                                      std::size_t steps, const EvolutionConfig& cfg) {
  const TraceKernel k = TraceKernel::make(p, state0, t_max, steps, cfg);
  EvolutionTrace tr = k.allocate();
  for (std::size_t i = 0; i < k.steps; ++i) k.sample(tr, i);
  return tr;
}

}  // namespace ptqm
