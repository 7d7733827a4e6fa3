#pragma once

#include <utility>

#include "hypergreen/families.hpp"

namespace hypergreen {

enum class TransmutationId {
    T1_GegS_GegDS,
    T2_H1S_H1H,
    T3_H2H_H2DS,
    T4_H1S_H2DS,
    T5_H1H_H2H,
    T6_H1DS_H2S,
};

enum class MapDirection { forward, inverse };

// Target family, parameters, and spectral point induced by a source
// family with parameters and spectral point z.
struct TransmuteImage {
    FamilyParams target;
    cplx target_z;
};

Family source_family(TransmutationId id);
Family target_family(TransmutationId id);

// Monotone coordinate bijection between the source and target domains.
// forward maps a source coordinate to a target coordinate.
double coord_map(TransmutationId id, double x, MapDirection dir);

// Two-point weight relating the kernels, as a function of source
// coordinates.  Its diagonal equals |d forward/dx|.
double transmute_weight(TransmutationId id, double x, double y);

TransmuteImage exchange_map(TransmutationId id, const FamilyParams& source, cplx z);

// |weight * source kernel - target kernel at the mapped points| / (1 + |target|),
// with each kernel evaluated through its own family's function path.
double kernel_residual(TransmutationId id, const FamilyParams& source, cplx z, double x,
                       double y);

// Residuals of the weight-on-source and weight-on-target arrangements of
// the same identity; the two agree closely wherever the identity holds.
std::pair<double, double> kernel_residual_dual(TransmutationId id, const FamilyParams& source,
                                               cplx z, double x, double y);

// Finite sampling window inside the source domain, endpoints pulled in so
// that endpoint-singular weights stay well conditioned.
FamilyDomain source_window(TransmutationId id);

}  // namespace hypergreen
