#include "hypergreen/gegenbauer.hpp"

#include "hypergreen/gammafn.hpp"

namespace hypergreen {
namespace {

// Pin an on-cut argument to the side the tag requests.
cplx resolve_cut(cplx w, BranchTag tag, double cut_end, const char* what) {
    if (w.imag() != 0.0 || w.real() > cut_end) return w;
    switch (tag) {
        case BranchTag::principal: throw CutError(what);
        case BranchTag::above_cut: return {w.real(), +0.0};
        case BranchTag::below_cut: return {w.real(), -0.0};
    }
    return w;
}

}  // namespace

cplx gegenbauer_S(cplx alpha, cplx lambda, cplx w, BranchTag tag) {
    w = resolve_cut(w, tag, -1.0, "first-kind argument on the cut (-inf, -1]");
    const cplx u = 0.5 * one_minus(w);
    return hyp2f1_reg({alpha, alpha, 2.0 * lambda}, u, tag_of(u));
}

cplx gegenbauer_Z(cplx alpha, cplx lambda, cplx w, BranchTag tag) {
    w = resolve_cut(w, tag, 1.0, "second-kind argument on the cut (-inf, 1]");
    if (w == cplx(-1.0, 0.0)) throw PoleError("second-kind solution diverges at w = -1");
    const cplx u = 2.0 / (w + 1.0);
    return gamma(1.0 + 2.0 * lambda) * rgamma(1.0 + lambda)
           * pow_p(w + 1.0, -0.5 - alpha - lambda)
           * hyp2f1_reg({2.0 * lambda, alpha, alpha}, u, tag_of(u));
}

cplx bullet_pow(cplx w, cplx a, BranchTag tag) {
    w = resolve_cut(w, tag, 1.0, "two-sided power argument on the cut (-inf, 1]");
    return pow_p(w - 1.0, a) * pow_p(w + 1.0, a);
}

cplx legendre(LegendreKind kind, cplx alpha, cplx mu, cplx z) {
    const cplx half = 0.5;
    switch (kind) {
        case LegendreKind::P_assoc:
            if (z.imag() == 0.0 && z.real() <= 1.0)
                throw CutError("P_assoc argument on the cut (-inf, 1]");
            return pow_p(2.0, alpha) * bullet_pow(z, -0.5 * alpha)
                   * gegenbauer_S(-alpha, mu + half, z);
        case LegendreKind::Ferrers_P:
            if (z.imag() == 0.0 && std::abs(z.real()) >= 1.0)
                throw CutError("Ferrers argument outside (-1, 1)");
            return pow_p(2.0, alpha) * pow_p(1.0 - z * z, -0.5 * alpha)
                   * gegenbauer_S(-alpha, mu + half, z);
        case LegendreKind::Q_assoc:
            if (z.imag() == 0.0 && z.real() <= 1.0)
                throw CutError("Q_assoc argument on the cut (-inf, 1]");
            return std::exp(cplx(0.0, pi) * alpha) * std::sqrt(pi) * gamma(alpha + mu + 1.0)
                   * pow_p(z * z - 1.0, 0.5 * alpha) * pow_p(2.0, -mu - 1.0)
                   * gegenbauer_Z(alpha, mu + half, z);
    }
    throw UsageError("unknown Legendre kind");
}

}  // namespace hypergreen
