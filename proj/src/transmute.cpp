#include "hypergreen/transmute.hpp"

#include <cmath>

namespace hypergreen {
namespace {

const cplx iu{0.0, 1.0};

void check_interval(double x, const FamilyDomain& dom) {
    if (!(x > dom.a && x < dom.b)) throw DomainError("coordinate outside the map domain");
}

}  // namespace

Family source_family(TransmutationId id) {
    switch (id) {
        case TransmutationId::T1_GegS_GegDS: return Family::GegS;
        case TransmutationId::T2_H1S_H1H: return Family::H1S;
        case TransmutationId::T3_H2H_H2DS: return Family::H2H;
        case TransmutationId::T4_H1S_H2DS: return Family::H1S;
        case TransmutationId::T5_H1H_H2H: return Family::H1H;
        case TransmutationId::T6_H1DS_H2S: return Family::H1DS;
    }
    throw UsageError("unknown transmutation");
}

Family target_family(TransmutationId id) {
    switch (id) {
        case TransmutationId::T1_GegS_GegDS: return Family::GegDS;
        case TransmutationId::T2_H1S_H1H: return Family::H1H;
        case TransmutationId::T3_H2H_H2DS: return Family::H2DS;
        case TransmutationId::T4_H1S_H2DS: return Family::H2DS;
        case TransmutationId::T5_H1H_H2H: return Family::H2H;
        case TransmutationId::T6_H1DS_H2S: return Family::H2S;
    }
    throw UsageError("unknown transmutation");
}

double coord_map(TransmutationId id, double x, MapDirection dir) {
    const bool fwd = dir == MapDirection::forward;
    check_interval(x, family_domain(fwd ? source_family(id) : target_family(id)));
    switch (id) {
        case TransmutationId::T1_GegS_GegDS:
            if (fwd) return std::asinh(std::cos(x) / std::sin(x));
            return 0.5 * pi - std::atan(std::sinh(x));
        case TransmutationId::T2_H1S_H1H:
            if (fwd) return 2.0 * std::asinh(std::tan(0.5 * x));
            return 2.0 * std::atan(std::sinh(0.5 * x));
        case TransmutationId::T3_H2H_H2DS:
            if (fwd) return x + 0.5 * std::log1p(-std::exp(-2.0 * x));
            if (x > 0.0) return x + 0.5 * std::log1p(std::exp(-2.0 * x));
            return 0.5 * std::log1p(std::exp(2.0 * x));
        case TransmutationId::T4_H1S_H2DS:
            if (fwd) return std::atanh(std::cos(x));
            return std::acos(std::tanh(x));
        case TransmutationId::T5_H1H_H2H:
            if (fwd) return std::atanh(1.0 / std::cosh(x));
            return std::acosh(1.0 / std::tanh(x));
        case TransmutationId::T6_H1DS_H2S:
            if (fwd) return 0.5 * pi + std::atan(std::sinh(x));
            return std::asinh(-std::cos(x) / std::sin(x));
    }
    throw UsageError("unknown transmutation");
}

double transmute_weight(TransmutationId id, double x, double y) {
    const double tx = coord_map(id, x, MapDirection::forward);
    const double ty = coord_map(id, y, MapDirection::forward);
    switch (id) {
        case TransmutationId::T1_GegS_GegDS:
            return std::sqrt(std::cosh(tx) * std::cosh(ty));
        case TransmutationId::T2_H1S_H1H:
            return std::sqrt(std::cosh(0.5 * tx) * std::cosh(0.5 * ty));
        case TransmutationId::T3_H2H_H2DS:
            return 1.0 / std::sqrt((1.0 - std::exp(-2.0 * x)) * (1.0 - std::exp(-2.0 * y)));
        case TransmutationId::T4_H1S_H2DS:
            return std::sqrt(std::cosh(tx) * std::cosh(ty));
        case TransmutationId::T5_H1H_H2H:
            return std::sqrt(std::sinh(tx) * std::sinh(ty));
        case TransmutationId::T6_H1DS_H2S:
            return std::sqrt(std::sin(tx) * std::sin(ty));
    }
    throw UsageError("unknown transmutation");
}

TransmuteImage exchange_map(TransmutationId id, const FamilyParams& source, cplx z) {
    if (source.family != source_family(id))
        throw UsageError("parameters do not belong to the source family of this map");
    const InternalParams ip = internal_params(source, z);
    const cplx p1 = source.p1, p2 = source.p2;
    switch (id) {
        case TransmutationId::T1_GegS_GegDS:
            return {{Family::GegDS, ip.lambda, cplx(0.0)}, neg(p1 * p1)};
        case TransmutationId::T2_H1S_H1H:
            return {{Family::H1H, p1, ip.mu}, -0.25 * (p2 * p2)};
        case TransmutationId::T3_H2H_H2DS: {
            const cplx dh = neg(z);
            const cplx nu = 0.5 * (p1 + dh);
            const cplx beta = std::sqrt(dh - p1);
            const cplx half_mu2 = 0.5 * p2 * p2;
            return {{Family::H2DS, nu - half_mu2, beta}, neg(nu + half_mu2)};
        }
        case TransmutationId::T4_H1S_H2DS:
            return {{Family::H2DS, 0.5 * (p1 * p1 - p2 * p2), ip.mu},
                    -0.5 * (p1 * p1 + p2 * p2)};
        case TransmutationId::T5_H1H_H2H:
            return {{Family::H2H, 0.5 * (p1 * p1 - p2 * p2), ip.mu},
                    -0.5 * (p1 * p1 + p2 * p2)};
        case TransmutationId::T6_H1DS_H2S:
            return {{Family::H2S, iu * 0.5 * (p1 * p1 - p2 * p2), ip.mu},
                    0.5 * (p1 * p1 + p2 * p2)};
    }
    throw UsageError("unknown transmutation");
}

double kernel_residual(TransmutationId id, const FamilyParams& source, cplx z, double x,
                       double y) {
    return kernel_residual_dual(id, source, z, x, y).first;
}

std::pair<double, double> kernel_residual_dual(TransmutationId id, const FamilyParams& source,
                                               cplx z, double x, double y) {
    const TransmuteImage img = exchange_map(id, source, z);
    const double tx = coord_map(id, x, MapDirection::forward);
    const double ty = coord_map(id, y, MapDirection::forward);
    const GreenKernel gs = green_kernel(source, z);
    const GreenKernel gt = green_kernel(img.target, img.target_z);
    const double w = transmute_weight(id, x, y);
    const cplx s = gs(x, y);
    const cplx t = gt(tx, ty);
    const double on_source = std::abs(w * s - t) / (1.0 + std::abs(t));
    const double on_target = std::abs(s - t / w) / (1.0 + std::abs(s));
    return {on_source, on_target};
}

FamilyDomain source_window(TransmutationId id) {
    switch (id) {
        case TransmutationId::T1_GegS_GegDS:
        case TransmutationId::T2_H1S_H1H:
        case TransmutationId::T4_H1S_H2DS:
            return {0.05 * pi, 0.95 * pi};
        case TransmutationId::T3_H2H_H2DS:
        case TransmutationId::T5_H1H_H2H:
            return {0.15, 3.0};
        case TransmutationId::T6_H1DS_H2S:
            return {-2.5, 2.5};
    }
    throw UsageError("unknown transmutation");
}

}  // namespace hypergreen
