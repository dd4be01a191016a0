#pragma once

// Complex 2x2 kernel: vectors, matrices, Pauli expansion and a
// scaling-and-squaring exponential used as an independent reference.

#include <complex>

namespace ptqm {

using CScalar = std::complex<double>;

inline constexpr CScalar kI{0.0, 1.0};

struct CVec2 {
  CScalar c0{};
  CScalar c1{};

  friend bool operator==(const CVec2&, const CVec2&) = default;
};

struct CMat2 {
  CScalar m00{}, m01{}, m10{}, m11{};

  static constexpr CMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr CMat2 zero() { return {}; }

  friend bool operator==(const CMat2&, const CMat2&) = default;
};

/// Coefficients of M = c0*I + cx*sigma1 + cy*sigma2 + cz*sigma3. Complex in
/// general: a PT-symmetric Hamiltonian has an imaginary sigma3 component.
struct PauliDecomp {
  CScalar c0{}, cx{}, cy{}, cz{};
};

// -- vector arithmetic -------------------------------------------------------

inline CVec2 operator+(const CVec2& a, const CVec2& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
inline CVec2 operator-(const CVec2& a, const CVec2& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
inline CVec2 operator*(CScalar z, const CVec2& v) { return {z * v.c0, z * v.c1}; }
inline CVec2 operator*(const CVec2& v, CScalar z) { return z * v; }

inline CVec2 conj(const CVec2& v) { return {std::conj(v.c0), std::conj(v.c1)}; }

/// Plain bilinear contraction u^t v (no conjugation anywhere).
inline CScalar dot_t(const CVec2& u, const CVec2& v) { return u.c0 * v.c0 + u.c1 * v.c1; }

double max_abs(const CVec2& v);
bool is_finite(const CVec2& v);

// -- matrix arithmetic -------------------------------------------------------

inline CMat2 operator+(const CMat2& a, const CMat2& b) {
  return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
}
inline CMat2 operator-(const CMat2& a, const CMat2& b) {
  return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
}
inline CMat2 operator*(CScalar z, const CMat2& m) {
  return {z * m.m00, z * m.m01, z * m.m10, z * m.m11};
}
inline CMat2 operator*(const CMat2& m, CScalar z) { return z * m; }

inline CMat2 operator*(const CMat2& a, const CMat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

inline CVec2 operator*(const CMat2& m, const CVec2& v) {
  return {m.m00 * v.c0 + m.m01 * v.c1, m.m10 * v.c0 + m.m11 * v.c1};
}

inline CMat2 conj(const CMat2& m) {
  return {std::conj(m.m00), std::conj(m.m01), std::conj(m.m10), std::conj(m.m11)};
}
inline CMat2 transpose(const CMat2& m) { return {m.m00, m.m10, m.m01, m.m11}; }
inline CMat2 adjoint(const CMat2& m) { return conj(transpose(m)); }

inline CScalar trace(const CMat2& m) { return m.m00 + m.m11; }
inline CScalar det(const CMat2& m) { return m.m00 * m.m11 - m.m01 * m.m10; }

/// u v^t, the transpose taken without conjugation.
inline CMat2 outer_t(const CVec2& u, const CVec2& v) {
  return {u.c0 * v.c0, u.c0 * v.c1, u.c1 * v.c0, u.c1 * v.c1};
}

inline CMat2 commutator(const CMat2& a, const CMat2& b) { return a * b - b * a; }

/// Max-entry magnitude; the residual norm used everywhere in the library.
double max_abs(const CMat2& m);
bool is_finite(const CMat2& m);

// -- Pauli basis -------------------------------------------------------------

CMat2 sigma1();
CMat2 sigma2();
CMat2 sigma3();

CMat2 pauli_compose(const PauliDecomp& d);
PauliDecomp pauli_decompose(const CMat2& m);

/// exp(m) by scaling and squaring: halve until the largest entry is <= 0.5,
/// sum the Taylor series until the next term's largest entry drops below
/// tol, then square back. Reference implementation only; the production
/// propagators are closed-form.
///
/// Throws Error{DomainError} for tol <= 0 and Error{NonFinite} if the
/// series leaves the finite range.
CMat2 mat_exp_oracle(const CMat2& m, double tol = 1e-14);

}  // namespace ptqm
