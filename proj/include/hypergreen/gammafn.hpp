#pragma once

#include "hypergreen/scalar.hpp"

namespace hypergreen {

// Complex gamma function. Throws PoleError at nonpositive integers.
cplx gamma(cplx z);

// Reciprocal gamma, entire; returns exactly 0 at nonpositive integers.
cplx rgamma(cplx z);

}  // namespace hypergreen
