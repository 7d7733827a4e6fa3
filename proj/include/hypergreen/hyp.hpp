#pragma once

#include "hypergreen/scalar.hpp"

namespace hypergreen {

// Parameter triple of the symmetric hypergeometric form. The underlying
// Gauss parameters are a = (1+alpha+beta-mu)/2, b = (1+alpha+beta+mu)/2,
// c = 1+alpha; the function is even in mu.
struct HypParams {
    cplx alpha;
    cplx beta;
    cplx mu;

    cplx a() const { return 0.5 * (1.0 + alpha + beta - mu); }
    cplx b() const { return 0.5 * (1.0 + alpha + beta + mu); }
    cplx c() const { return 1.0 + alpha; }
};

// Gauss hypergeometric function divided by Gamma(c), analytically continued
// to the plane cut along [1, inf). The tag selects the side of the cut when
// z lies exactly on it; principal evaluation there raises CutError.
cplx hyp2f1_reg(const HypParams& p, cplx z, BranchTag tag = BranchTag::principal);

// d/dz of hyp2f1_reg at fixed parameters.
cplx hyp2f1_reg_deriv(const HypParams& p, cplx z, BranchTag tag = BranchTag::principal);

}  // namespace hypergreen
