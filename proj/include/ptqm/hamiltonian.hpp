#pragma once

// The PT-symmetric family
//
//   H_NH(r, s, psi) = [[r e^{i psi}, s], [s, r e^{-i psi}]]
//
// and the Hermitian comparison family
//
//   H_H(s, u, r, psi) = [[s, r e^{i psi}], [r e^{-i psi}, u]].
//
// The spectrum of H_NH is real iff s^2 >= r^2 sin^2 psi. In that region the
// angle alpha with sin(alpha) = (r/s) sin(psi) parametrizes everything:
// eps_+- = r cos(psi) +- s cos(alpha), gap omega = 2 s cos(alpha).

#include <string_view>
#include <utility>

#include "ptqm/algebra.hpp"

namespace ptqm {

/// Canonical form: s > 0, r >= 0, psi in (-pi, pi].
struct PTParams {
  double r = 0.0;
  double s = 1.0;
  double psi = 0.0;
};

enum class PhaseClass { Unbroken, ExceptionalPoint, Broken };

std::string_view to_string(PhaseClass phase);

struct PTDerived {
  PTParams params;
  double alpha = 0.0;  // principal branch, [-pi/2, pi/2]
  double omega = 0.0;  // eps_plus - eps_minus
  double eps_plus = 0.0;
  double eps_minus = 0.0;
  PhaseClass phase = PhaseClass::Unbroken;
};

struct HermitianParams {
  double s = 0.0;
  double u = 0.0;
  double r = 0.0;
  double psi = 0.0;
};

struct HermitianDerived {
  double omega_prime = 0.0;
};

inline constexpr double kDefaultPhaseTol = 1e-12;

/// Throws Error{DomainError} unless p is in canonical form.
void check_canonical(const PTParams& p);

CMat2 build_pt_matrix(const PTParams& p);

/// s^2 - r^2 sin^2(psi).
double pt_discriminant(const PTParams& p);

/// Relative test on the discriminant: |disc| <= tol * s^2 is the
/// exceptional point. Throws Error{DomainError} unless tol is in (0, 1e-3).
PhaseClass classify_phase(const PTParams& p, double tol = kDefaultPhaseTol);

/// Throws Error{BrokenPhase} in the broken phase. At the exceptional point
/// the (degenerate, real) spectrum is still returned with phase set
/// accordingly; operators that need cos(alpha) > 0 reject it downstream.
PTDerived derive_pt(const PTParams& p, double tol = kDefaultPhaseTol);

/// Unnormalized eigenvectors (e^{i a/2}, e^{-i a/2}) and
/// (i e^{-i a/2}, -i e^{i a/2}) for eps_plus and eps_minus.
std::pair<CVec2, CVec2> pt_eigenvectors_raw(const PTDerived& d);

/// Raw eigenvectors scaled by 1/sqrt(2 cos alpha), giving CPT norm 1.
/// Throws Error{ExceptionalPoint} if cos(alpha) <= cos_tol.
std::pair<CVec2, CVec2> pt_eigenvectors_normalized(const PTDerived& d, double cos_tol = 1e-9);

/// Canonical parameters realizing a given alpha in (-pi/2, pi/2) at gap
/// scale s: r = s/2 and psi = asin(2 sin alpha) when that is solvable,
/// otherwise psi = sign(alpha) pi/2 and r = s |sin alpha|.
/// Throws Error{DomainError} outside the open interval or for s <= 0.
PTParams params_for_alpha(double alpha, double s = 1.0);

CMat2 build_hermitian_matrix(const HermitianParams& p);

/// omega' = sqrt((s - u)^2 + 4 r^2).
HermitianDerived derive_hermitian(const HermitianParams& p);

}  // namespace ptqm
