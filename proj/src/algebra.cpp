#include "ptqm/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "ptqm/error.hpp"

namespace ptqm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::BrokenPhase: return "BrokenPhase";
    case ErrorKind::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorKind::ZeroOrNegativeNorm: return "ZeroOrNegativeNorm";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

namespace {

bool finite(CScalar z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

double max_abs(const CVec2& v) { return std::max(std::abs(v.c0), std::abs(v.c1)); }

bool is_finite(const CVec2& v) { return finite(v.c0) && finite(v.c1); }

double max_abs(const CMat2& m) {
  return std::max({std::abs(m.m00), std::abs(m.m01), std::abs(m.m10), std::abs(m.m11)});
}

bool is_finite(const CMat2& m) {
  return finite(m.m00) && finite(m.m01) && finite(m.m10) && finite(m.m11);
}

CMat2 sigma1() { return {0.0, 1.0, 1.0, 0.0}; }
CMat2 sigma2() { return {0.0, -kI, kI, 0.0}; }
CMat2 sigma3() { return {1.0, 0.0, 0.0, -1.0}; }

CMat2 pauli_compose(const PauliDecomp& d) {
  return {d.c0 + d.cz, d.cx - kI * d.cy, d.cx + kI * d.cy, d.c0 - d.cz};
}

PauliDecomp pauli_decompose(const CMat2& m) {
  return {0.5 * (m.m00 + m.m11), 0.5 * (m.m01 + m.m10), 0.5 * kI * (m.m01 - m.m10),
          0.5 * (m.m00 - m.m11)};
}

CMat2 mat_exp_oracle(const CMat2& m, double tol) {
  if (!(tol > 0.0)) {
    throw Error(ErrorKind::DomainError, "mat_exp_oracle: tol must be positive");
  }
  if (!is_finite(m)) {
    throw Error(ErrorKind::NonFinite, "mat_exp_oracle: non-finite input");
  }

  int squarings = 0;
  CMat2 scaled = m;
  while (max_abs(scaled) > 0.5) {
    scaled = 0.5 * scaled;
    ++squarings;
  }

  CMat2 sum = CMat2::identity();
  CMat2 term = CMat2::identity();
  for (int k = 1;; ++k) {
    term = (1.0 / k) * (term * scaled);
    if (max_abs(term) < tol) break;
    sum = sum + term;
    if (!is_finite(sum)) {
      throw Error(ErrorKind::NonFinite, "mat_exp_oracle: series diverged");
    }
  }

  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  if (!is_finite(sum)) {
    throw Error(ErrorKind::NonFinite, "mat_exp_oracle: squaring overflowed");
  }
  return sum;
}

}  // namespace ptqm
