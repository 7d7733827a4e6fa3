#pragma once

#include <vector>

#include "hypergreen/scalar.hpp"

namespace hypergreen {

// The nine operator families: Gegenbauer and two hypergeometric layers, each
// in spherical, hyperbolic, and de Sitter signature.
enum class Family { GegS, GegH, GegDS, H1S, H1H, H1DS, H2S, H2H, H2DS };

// p1/p2 meaning per family: Geg* takes p1 = alpha; H1* takes p1 = alpha,
// p2 = beta; H2S takes p1 = tau, p2 = mu; H2H and H2DS take p1 = kappa,
// p2 = mu.
struct FamilyParams {
    Family family;
    cplx p1;
    cplx p2 = 0.0;
};

enum class SolutionId {
    Ps, Ps_mirror,
    Ph, Qh,
    QdS, QdS_mirror,
    P1s, P1s_mirror,
    P1h, Q1h,
    Q1dS, Q1dS_mirror,
    q2s, q2s_mirror,
    p2h, q2h,
    p2dS, p2dS_mirror,
};

enum class PairKind { kernel_pair, secondary_pair };

struct Ray {
    cplx offset;
    int direction = 1;
};

struct SpectrumSpec {
    std::vector<cplx> discrete;
    std::vector<Ray> essential_rays;
    bool exhaustive_below_bound = true;
};

struct RegionFlags {
    bool uniform;
    bool holomorphic;
    bool self_adjoint;
};

enum class EndpointKind { Bessel, ShortRange, ShiftedShortRange, Whittaker };

struct EndpointClass {
    EndpointKind kind;
    cplx index = 0.0;     // Bessel order, or the inverse-square index
    cplx coupling = 0.0;  // first-order coefficient (Whittaker) or constant shift
};

enum class ElementaryCase { DD, ND, DN, NN, HalfD, HalfN, Line };

struct Sample {
    cplx z;
    double x;
    double y;
};

// Spectral parameters derived from the operator-level z; unused slots are 0.
struct InternalParams {
    cplx alpha, beta, mu, lambda, delta;
};

struct FamilyDomain {
    double a;
    double b;  // +infinity for half-line and full-line families
};

FamilyDomain family_domain(Family f);
InternalParams internal_params(const FamilyParams& fp, cplx z);

cplx potential(const FamilyParams& fp, double x);
cplx solution(const FamilyParams& fp, SolutionId which, cplx z, double x);
cplx wronskian_closed(const FamilyParams& fp, cplx z, PairKind pair);

// Resolvent kernel at spectral point z; evaluation throws SpectrumError when
// z lies in the operator's spectrum.
class GreenKernel {
  public:
    GreenKernel(const FamilyParams& fp, cplx z);
    cplx operator()(double x, double y) const;
    cplx prefactor() const { return pref_; }

  private:
    FamilyParams fp_;
    cplx z_;
    cplx pref_;
};

GreenKernel green_kernel(const FamilyParams& fp, cplx z);

// Closed-form spectrum; requires the holomorphic parameter region.
SpectrumSpec spectrum(const FamilyParams& fp, double bound);

RegionFlags param_region(const FamilyParams& fp);

// end = 0 for the left endpoint, 1 for the right.
EndpointClass endpoint_class(const FamilyParams& fp, int end);

// Textbook kernels on the interval and half line; k > 0.
cplx elementary_kernel(ElementaryCase which, double k, double x, double y);

// Relative defect between the kernels at second parameter +1 and -1 for the
// two families whose kernels coincide there; c is the first coupling.
double degenerate_identity_residual(Family family, cplx c, const Sample& s);

}  // namespace hypergreen
