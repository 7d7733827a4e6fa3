#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace hypergreen {

using cplx = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Side of the branch cut used when an argument lands exactly on a cut.
enum class BranchTag { above_cut, below_cut, principal };

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : NumericError { using NumericError::NumericError; };
struct ConvergenceError : NumericError { using NumericError::NumericError; };
struct DegenerateParameterError : NumericError { using NumericError::NumericError; };
struct CutError : NumericError { using NumericError::NumericError; };
struct DomainError : NumericError { using NumericError::NumericError; };
struct SpectrumError : NumericError { using NumericError::NumericError; };
struct ParamRegionError : NumericError { using NumericError::NumericError; };
struct SeedError : NumericError { using NumericError::NumericError; };
struct StiffnessError : NumericError { using NumericError::NumericError; };
struct UsageError : NumericError { using NumericError::NumericError; };
struct SpecError : NumericError { using NumericError::NumericError; };

// Negation and 1-z that preserve the sign of a zero imaginary part, so a
// value pinned to one side of a cut stays on the correct side.
inline cplx neg(cplx z) { return {-z.real(), -z.imag()}; }
inline cplx one_minus(cplx z) { return {1.0 - z.real(), -z.imag()}; }

// Principal power with an explicit zero-base guard (std::pow yields NaN for
// 0^w with complex w).
inline cplx pow_p(cplx base, cplx expo) {
    if (base.real() == 0.0 && base.imag() == 0.0) {
        if (expo.real() > 0.0) return {0.0, 0.0};
        if (expo == cplx(0.0, 0.0)) return {1.0, 0.0};
        throw PoleError("zero base with nonpositive exponent");
    }
    return std::exp(expo * std::log(base));
}

inline bool is_real_int(cplx z) {
    return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

// Rising factorial with integer count.
inline cplx pochhammer(cplx x, int m) {
    cplx p = 1.0;
    for (int i = 0; i < m; ++i) p *= x + static_cast<double>(i);
    return p;
}

// Branch side an already signed-zero-resolved value dictates for a
// downstream call: off-axis values need no tag at all.
inline BranchTag tag_of(cplx z) {
    if (z.imag() != 0.0) return BranchTag::principal;
    return std::signbit(z.imag()) ? BranchTag::below_cut : BranchTag::above_cut;
}

}  // namespace hypergreen
