#pragma once

// Pairings on C^2. All three take the form (X u)^t v where X is the
// operator applied to the first argument:
//
//   Dirac: X = conj            (the usual sesquilinear product)
//   PT:    X = P conj          (indefinite; eigenstates alternate +-1)
//   CPT:   X = C P conj        (positive definite in the unbroken phase)

#include "ptqm/algebra.hpp"
#include "ptqm/symmetry_ops.hpp"

namespace ptqm {

enum class PairingKind { Dirac, PT, CPT };

CScalar dirac_product(const CVec2& u, const CVec2& v);
CScalar pt_product(const CVec2& u, const CVec2& v, const CMat2& P);
CScalar cpt_product(const CVec2& u, const CVec2& v, const OperatorSet& ops);

CScalar pairing(const CVec2& u, const CVec2& v, const OperatorSet& ops, PairingKind kind);

/// Positive real rescaling to unit CPT norm. Throws
/// Error{ZeroOrNegativeNorm} if Re <v|v>_CPT <= 1e-12.
CVec2 cpt_normalize(const CVec2& v, const OperatorSet& ops);

/// arccos |<u|v>| under the given pairing, in [0, pi/2]. Both inputs must
/// have unit self-pairing of the same kind (within 1e-9), else
/// Error{NotNormalized}.
double angular_distance(const CVec2& u, const CVec2& v, const OperatorSet& ops,
                        PairingKind kind);

/// Dirac-kind angular distance; needs no operator context.
double angular_distance(const CVec2& u, const CVec2& v);

}  // namespace ptqm
