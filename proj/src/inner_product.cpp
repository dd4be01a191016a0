#include "ptqm/inner_product.hpp"

#include <algorithm>
#include <cmath>

#include "ptqm/error.hpp"

namespace ptqm {

CScalar dirac_product(const CVec2& u, const CVec2& v) { return dot_t(conj(u), v); }

CScalar pt_product(const CVec2& u, const CVec2& v, const CMat2& P) {
  return dot_t(P * conj(u), v);
}

CScalar cpt_product(const CVec2& u, const CVec2& v, const OperatorSet& ops) {
  return dot_t(ops.C * (ops.P * conj(u)), v);
}

CScalar pairing(const CVec2& u, const CVec2& v, const OperatorSet& ops, PairingKind kind) {
  switch (kind) {
    case PairingKind::Dirac: return dirac_product(u, v);
    case PairingKind::PT: return pt_product(u, v, ops.P);
    case PairingKind::CPT: return cpt_product(u, v, ops);
  }
  return {};
}

CVec2 cpt_normalize(const CVec2& v, const OperatorSet& ops) {
  const double norm2 = cpt_product(v, v, ops).real();
  if (!(norm2 > 1e-12)) {
    throw Error(ErrorKind::ZeroOrNegativeNorm,
                "cpt_normalize: CPT self-pairing is not positive (" + std::to_string(norm2) + ")");
  }
  return (1.0 / std::sqrt(norm2)) * v;
}

namespace {

constexpr double kUnitTol = 1e-9;

double distance_from_overlap(CScalar overlap) {
  return std::acos(std::clamp(std::abs(overlap), 0.0, 1.0));
}

void require_unit(CScalar self, const char* which) {
  if (std::abs(self - 1.0) > kUnitTol) {
    throw Error(ErrorKind::NotNormalized,
                std::string("angular_distance: ") + which + " is not normalized");
  }
}

}  // namespace

double angular_distance(const CVec2& u, const CVec2& v, const OperatorSet& ops,
                        PairingKind kind) {
  require_unit(pairing(u, u, ops, kind), "first state");
  require_unit(pairing(v, v, ops, kind), "second state");
  return distance_from_overlap(pairing(u, v, ops, kind));
}

double angular_distance(const CVec2& u, const CVec2& v) {
  require_unit(dirac_product(u, u), "first state");
  require_unit(dirac_product(v, v), "second state");
  return distance_from_overlap(dirac_product(u, v));
}

}  // namespace ptqm
