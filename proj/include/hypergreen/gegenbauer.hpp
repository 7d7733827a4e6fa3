#pragma once

#include "hypergreen/hyp.hpp"
#include "hypergreen/scalar.hpp"

namespace hypergreen {

// First-kind Gegenbauer solution, regular at w = 1; cut along (-inf, -1].
cplx gegenbauer_S(cplx alpha, cplx lambda, cplx w, BranchTag tag = BranchTag::principal);

// Second-kind Gegenbauer solution, recessive as w -> +inf; cut along (-inf, 1].
cplx gegenbauer_Z(cplx alpha, cplx lambda, cplx w, BranchTag tag = BranchTag::principal);

// (w-1)^a (w+1)^a with principal powers of each factor; cut along (-inf, 1].
cplx bullet_pow(cplx w, cplx a, BranchTag tag = BranchTag::principal);

enum class LegendreKind { P_assoc, Ferrers_P, Q_assoc };

// Associated Legendre functions expressed through the Gegenbauer layer.
// P_assoc and Q_assoc live on the plane cut along (-inf, 1]; Ferrers_P on
// the plane cut along (-inf, -1] and [1, inf).
cplx legendre(LegendreKind kind, cplx alpha, cplx mu, cplx z);

}  // namespace hypergreen
