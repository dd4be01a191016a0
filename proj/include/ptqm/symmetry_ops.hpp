#pragma once

// Discrete symmetry operators of the two-level PT theory.
//
//   T: complex conjugation (antilinear, acts on vectors only)
//   P: [[0, 1], [1, 0]]
//   C: (1/cos a) [[i sin a, 1], [1, -i sin a]]
//
// C and P are also rebuilt from sums over the CPT-normalized eigenvectors,
// which gives an independent second route to both matrices.

#include "ptqm/algebra.hpp"
#include "ptqm/hamiltonian.hpp"

namespace ptqm {

/// Max-entry residuals of the operator identities. All should be < 1e-10
/// in the unbroken phase away from the exceptional point.
struct ValidationReport {
  double c_squared_residual = 0.0;         // |C^2 - I|
  double ch_commutator_residual = 0.0;     // |CH - HC|
  double cpt_commutator_residual = 0.0;    // |CP - P conj(C)|
  double completeness_residual = 0.0;      // |e+ (PT e+)^t - e- (PT e-)^t - I|
  double p_reconstruction_residual = 0.0;  // |P(eigen sum) - P|

  double worst() const;
};

struct OperatorSet {
  CMat2 P;
  CMat2 C;
  double alpha = 0.0;
  ValidationReport residuals;
};

CVec2 apply_T(const CVec2& v);

/// P * conj(v), the combined PT action on a vector.
CVec2 apply_PT(const CVec2& v);

CMat2 parity_matrix();

/// Throws Error{ExceptionalPoint} if |cos(alpha)| <= 1e-9.
CMat2 c_matrix_closed(double alpha);

/// |e-><P conj(e-)|^t + |e+><P conj(e+)|^t from CPT-normalized eigenvectors.
CMat2 c_from_eigenvectors(const CVec2& e_plus, const CVec2& e_minus);

/// -|e->(conj e-)^t + |e+>(conj e+)^t from CPT-normalized eigenvectors.
CMat2 p_from_eigenvectors(const CVec2& e_plus, const CVec2& e_minus);

double completeness_residual(const CVec2& e_plus, const CVec2& e_minus);

/// Propagates BrokenPhase / ExceptionalPoint from the derivation steps.
ValidationReport validate_operators(const PTParams& p);

/// Closed-form P and C for p, with residuals filled by validate_operators.
OperatorSet make_operator_set(const PTParams& p);

}  // namespace ptqm
