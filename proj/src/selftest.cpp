#include "ptqm/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "ptqm/brachistochrone.hpp"
#include "ptqm/grid.hpp"
#include "ptqm/inner_product.hpp"
#include "ptqm/symmetry_ops.hpp"

namespace ptqm {

namespace {

constexpr CVec2 kNu1{1.0, 0.0};
constexpr CVec2 kNu2{0.0, 1.0};

// Eigenvalues of a 2x2 matrix from its characteristic polynomial, ordered
// by real part (larger first).
std::pair<CScalar, CScalar> charpoly_eigenvalues(const CMat2& m) {
  const CScalar half_tr = 0.5 * trace(m);
  const CScalar root = std::sqrt(half_tr * half_tr - det(m));
  CScalar a = half_tr + root, b = half_tr - root;
  if (a.real() < b.real()) std::swap(a, b);
  return {a, b};
}

CMat2 random_matrix(std::mt19937_64& rng, double bound) {
  std::uniform_real_distribution<double> u(-bound, bound);
  auto z = [&] { return CScalar{u(rng), u(rng)}; };
  return {z(), z(), z(), z()};
}

double worst_over_grid(const std::function<double(const PTParams&)>& f) {
  double worst = 0.0;
  for (const PTParams& p : standard_pt_grid()) worst = std::max(worst, f(p));
  return worst;
}

}  // namespace

std::vector<SelftestResult> run_selftest(const EvolutionConfig& cfg) {
  check_config(cfg);
  const double exact_tol = cfg.tol;
  const double dyn_tol = 100.0 * cfg.tol;
  const EvolutionConfig unit_cfg{1.0, cfg.tol};
  std::vector<SelftestResult> out;
  auto record = [&](std::string name, double worst, double threshold) {
    out.push_back({std::move(name), worst, threshold, worst < threshold});
  };

  std::mt19937_64 rng(20240611);

  {
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const CMat2 m = random_matrix(rng, 2.0);
      worst = std::max(worst, max_abs(pauli_compose(pauli_decompose(m)) - m));
    }
    record("pauli_roundtrip", worst, 1e-14);
  }
  {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const CMat2 a = random_matrix(rng, 1.0);
      worst = std::max(worst, max_abs(mat_exp_oracle(a) * mat_exp_oracle(-1.0 * a) -
                                      CMat2::identity()));
    }
    record("oracle_inverse", worst, dyn_tol);
  }

  record("spectrum_vs_charpoly", worst_over_grid([](const PTParams& p) {
           const PTDerived d = derive_pt(p);
           const auto [hi, lo] = charpoly_eigenvalues(build_pt_matrix(p));
           const double scale = std::max({1.0, std::abs(d.eps_plus), std::abs(d.eps_minus)});
           return std::max(std::abs(hi - d.eps_plus), std::abs(lo - d.eps_minus)) / scale;
         }),
         exact_tol);

  record("pt_invariance_of_H", worst_over_grid([](const PTParams& p) {
           const CMat2 H = build_pt_matrix(p);
           const CMat2 P = parity_matrix();
           return max_abs(P * conj(H) * P - H);
         }),
         exact_tol);

  record("operator_identities", worst_over_grid([](const PTParams& p) {
           const ValidationReport r = validate_operators(p);
           return std::max({r.c_squared_residual, r.ch_commutator_residual,
                            r.cpt_commutator_residual});
         }),
         exact_tol);

  record("completeness_and_parity", worst_over_grid([](const PTParams& p) {
           const ValidationReport r = validate_operators(p);
           return std::max(r.completeness_residual, r.p_reconstruction_residual);
         }),
         exact_tol);

  record("c_two_constructions", worst_over_grid([](const PTParams& p) {
           const PTDerived d = derive_pt(p);
           const auto [ep, em] = pt_eigenvectors_normalized(d);
           return max_abs(c_from_eigenvectors(ep, em) - c_matrix_closed(d.alpha));
         }),
         exact_tol);

  record("pt_norm_pattern", worst_over_grid([](const PTParams& p) {
           const auto [ep, em] = pt_eigenvectors_normalized(derive_pt(p));
           const CMat2 P = parity_matrix();
           return std::max({std::abs(pt_product(ep, ep, P) - 1.0),
                            std::abs(pt_product(em, em, P) + 1.0),
                            std::abs(pt_product(ep, em, P))});
         }),
         exact_tol);

  record("cpt_orthonormality", worst_over_grid([](const PTParams& p) {
           const OperatorSet ops = make_operator_set(p);
           const auto [ep, em] = pt_eigenvectors_normalized(derive_pt(p));
           return std::max({std::abs(cpt_product(ep, ep, ops) - 1.0),
                            std::abs(cpt_product(em, em, ops) - 1.0),
                            std::abs(cpt_product(ep, em, ops)),
                            std::abs(cpt_product(em, ep, ops))});
         }),
         exact_tol);

  record("nu_overlap_is_tan_alpha", worst_over_grid([](const PTParams& p) {
           const OperatorSet ops = make_operator_set(p);
           return std::abs(std::abs(cpt_product(kNu2, kNu1, ops)) -
                           std::abs(std::tan(ops.alpha)));
         }),
         exact_tol);

  record("propagator_pt_vs_oracle", worst_over_grid([&](const PTParams& p) {
           double w = 0.0;
           for (double t : kGridTimes) {
             const CMat2 ref = mat_exp_oracle(CScalar{0.0, -t / unit_cfg.hbar} * build_pt_matrix(p));
             w = std::max(w, max_abs(propagator_pt(p, t, unit_cfg) - ref));
           }
           return w;
         }),
         dyn_tol);

  {
    double worst = 0.0;
    for (const HermitianParams& h : standard_hermitian_grid()) {
      for (double t : kGridTimes) {
        const CMat2 ref = mat_exp_oracle(CScalar{0.0, -t} * build_hermitian_matrix(h));
        worst = std::max(worst, max_abs(propagator_hermitian(h, t, unit_cfg) - ref));
      }
    }
    record("propagator_hermitian_vs_oracle", worst, dyn_tol);
  }

  record("group_law", worst_over_grid([&](const PTParams& p) {
           const CMat2 lhs = propagator_pt(p, 0.4, unit_cfg) * propagator_pt(p, 1.1, unit_cfg);
           return max_abs(lhs - propagator_pt(p, 1.5, unit_cfg));
         }),
         dyn_tol);

  record("cpt_norm_conservation", worst_over_grid([&](const PTParams& p) {
           const PTDerived d = derive_pt(p);
           const OperatorSet ops = make_operator_set(p);
           const auto [ep, em] = pt_eigenvectors_normalized(d);
           double w = 0.0;
           for (const CVec2& s0 : {cpt_normalize(kNu1, ops), ep}) {
             const EvolutionTrace tr = trace_evolution(p, s0, 10.0 * cfg.hbar / d.omega, 101, cfg);
             for (double n : tr.cpt_norms) w = std::max(w, std::abs(n - 1.0));
           }
           return w;
         }),
         dyn_tol);

  {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const double alpha = -1.5 + 1.5 * (i + 1) / 10.0;
      const PTParams p = params_for_alpha(alpha, 1.0);
      const TransitionResult tr = pt_tau_star(p, cfg);
      const CVec2 psi = evolve_nu1_closed(p, tr.tau, cfg);
      const double overlap = std::abs(dirac_product(kNu2, psi)) /
                             std::sqrt(dirac_product(psi, psi).real());
      worst = std::max(worst, std::abs(overlap - 1.0));
    }
    record("brachistochrone_arrival", worst, dyn_tol);
  }

  {
    double worst = 0.0;
    for (const SweepRow& row :
         equivalence_sweep(kDefaultSweepMin, kDefaultSweepMax, kDefaultSweepSteps, 1.0, cfg)) {
      worst = std::max(worst, equivalence_residual(row));
    }
    record("equivalence_sweep", worst, exact_tol);
  }

  return out;
}

}  // namespace ptqm
