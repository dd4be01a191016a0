#include "ptqm/symmetry_ops.hpp"

#include <algorithm>
#include <cmath>

#include "ptqm/error.hpp"

namespace ptqm {

double ValidationReport::worst() const {
  return std::max({c_squared_residual, ch_commutator_residual, cpt_commutator_residual,
                   completeness_residual, p_reconstruction_residual});
}

CVec2 apply_T(const CVec2& v) { return conj(v); }

CVec2 apply_PT(const CVec2& v) { return parity_matrix() * apply_T(v); }

CMat2 parity_matrix() { return {0.0, 1.0, 1.0, 0.0}; }

CMat2 c_matrix_closed(double alpha) {
  const double c = std::cos(alpha);
  if (std::abs(c) <= 1e-9) {
    throw Error(ErrorKind::ExceptionalPoint, "C operator diverges: cos(alpha) ~ 0");
  }
  const CScalar diag{0.0, std::sin(alpha) / c};
  const double off = 1.0 / c;
  return {diag, off, off, -diag};
}

CMat2 c_from_eigenvectors(const CVec2& e_plus, const CVec2& e_minus) {
  return outer_t(e_minus, apply_PT(e_minus)) + outer_t(e_plus, apply_PT(e_plus));
}

CMat2 p_from_eigenvectors(const CVec2& e_plus, const CVec2& e_minus) {
  return outer_t(e_plus, apply_T(e_plus)) - outer_t(e_minus, apply_T(e_minus));
}

double completeness_residual(const CVec2& e_plus, const CVec2& e_minus) {
  const CMat2 sum = outer_t(e_plus, apply_PT(e_plus)) - outer_t(e_minus, apply_PT(e_minus));
  return max_abs(sum - CMat2::identity());
}

ValidationReport validate_operators(const PTParams& p) {
  const PTDerived d = derive_pt(p);
  if (d.phase != PhaseClass::Unbroken) {
    throw Error(ErrorKind::ExceptionalPoint, "operators undefined at the exceptional point");
  }
  const auto [e_plus, e_minus] = pt_eigenvectors_normalized(d);
  const CMat2 H = build_pt_matrix(p);
  const CMat2 P = parity_matrix();
  const CMat2 C = c_matrix_closed(d.alpha);

  ValidationReport rep;
  rep.c_squared_residual = max_abs(C * C - CMat2::identity());
  rep.ch_commutator_residual = max_abs(commutator(C, H));
  rep.cpt_commutator_residual = max_abs(C * P - P * conj(C));
  rep.completeness_residual = completeness_residual(e_plus, e_minus);
  rep.p_reconstruction_residual = max_abs(p_from_eigenvectors(e_plus, e_minus) - P);
  return rep;
}

OperatorSet make_operator_set(const PTParams& p) {
  OperatorSet ops;
  ops.residuals = validate_operators(p);
  ops.alpha = derive_pt(p).alpha;
  ops.P = parity_matrix();
  ops.C = c_matrix_closed(ops.alpha);
  return ops;
}

}  // namespace ptqm
