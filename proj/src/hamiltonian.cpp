#include "ptqm/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ptqm/error.hpp"

namespace ptqm {

std::string_view to_string(PhaseClass phase) {
  switch (phase) {
    case PhaseClass::Unbroken: return "unbroken";
    case PhaseClass::ExceptionalPoint: return "exceptional_point";
    case PhaseClass::Broken: return "broken";
  }
  return "unknown";
}

void check_canonical(const PTParams& p) {
  const bool ok = std::isfinite(p.r) && std::isfinite(p.s) && std::isfinite(p.psi) &&
                  p.s > 0.0 && p.r >= 0.0 && p.psi > -std::numbers::pi &&
                  p.psi <= std::numbers::pi;
  if (!ok) {
    std::ostringstream msg;
    msg << "PT parameters not canonical (need s > 0, r >= 0, psi in (-pi, pi]): r=" << p.r
        << " s=" << p.s << " psi=" << p.psi;
    throw Error(ErrorKind::DomainError, msg.str());
  }
}

CMat2 build_pt_matrix(const PTParams& p) {
  const CScalar diag = std::polar(p.r, p.psi);
  return {diag, p.s, p.s, std::conj(diag)};
}

double pt_discriminant(const PTParams& p) {
  const double rs = p.r * std::sin(p.psi);
  return p.s * p.s - rs * rs;
}

PhaseClass classify_phase(const PTParams& p, double tol) {
  if (!(tol > 0.0 && tol < 1e-3)) {
    throw Error(ErrorKind::DomainError, "classify_phase: tol must lie in (0, 1e-3)");
  }
  const double disc = pt_discriminant(p);
  const double scale = tol * p.s * p.s;
  if (std::abs(disc) <= scale) return PhaseClass::ExceptionalPoint;
  return disc > 0.0 ? PhaseClass::Unbroken : PhaseClass::Broken;
}

PTDerived derive_pt(const PTParams& p, double tol) {
  check_canonical(p);
  const PhaseClass phase = classify_phase(p, tol);
  if (phase == PhaseClass::Broken) {
    std::ostringstream msg;
    msg << "broken PT phase: discriminant s^2 - r^2 sin^2(psi) = " << pt_discriminant(p)
        << " < 0";
    throw Error(ErrorKind::BrokenPhase, msg.str());
  }

  PTDerived d;
  d.params = p;
  d.phase = phase;
  const double sin_alpha = std::clamp(p.r / p.s * std::sin(p.psi), -1.0, 1.0);
  d.alpha = std::asin(sin_alpha);
  const double half_gap = p.s * std::cos(d.alpha);
  const double center = p.r * std::cos(p.psi);
  d.eps_plus = center + half_gap;
  d.eps_minus = center - half_gap;
  d.omega = 2.0 * half_gap;
  return d;
}

std::pair<CVec2, CVec2> pt_eigenvectors_raw(const PTDerived& d) {
  const CScalar up = std::polar(1.0, 0.5 * d.alpha);
  const CScalar down = std::polar(1.0, -0.5 * d.alpha);
  return {CVec2{up, down}, CVec2{kI * down, -kI * up}};
}

std::pair<CVec2, CVec2> pt_eigenvectors_normalized(const PTDerived& d, double cos_tol) {
  const double c = std::cos(d.alpha);
  if (c <= cos_tol) {
    throw Error(ErrorKind::ExceptionalPoint,
                "eigenvector normalization diverges at the exceptional point (cos(alpha) <= " +
                    std::to_string(cos_tol) + ")");
  }
  const double a = 1.0 / std::sqrt(2.0 * c);
  auto [plus, minus] = pt_eigenvectors_raw(d);
  return {a * plus, a * minus};
}

PTParams params_for_alpha(double alpha, double s) {
  if (!(s > 0.0) || !(std::abs(alpha) < 0.5 * std::numbers::pi)) {
    throw Error(ErrorKind::DomainError, "params_for_alpha: need s > 0 and |alpha| < pi/2");
  }
  const double target = 2.0 * std::sin(alpha);
  if (std::abs(target) <= 1.0) {
    return {0.5 * s, s, std::asin(target)};
  }
  return {s * std::abs(std::sin(alpha)), s, std::copysign(0.5 * std::numbers::pi, alpha)};
}

CMat2 build_hermitian_matrix(const HermitianParams& p) {
  const CScalar off = std::polar(p.r, p.psi);
  return {p.s, off, std::conj(off), p.u};
}

HermitianDerived derive_hermitian(const HermitianParams& p) {
  return {std::hypot(p.s - p.u, 2.0 * p.r)};
}

}  // namespace ptqm
