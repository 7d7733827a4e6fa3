#include "hypergreen/relations.hpp"

#include <algorithm>

#include "hypergreen/gammafn.hpp"
#include "hypergreen/gegenbauer.hpp"

namespace hypergreen {
namespace {

cplx fd(cplx al, cplx be, cplx mu, cplx z) { return hyp2f1_reg({al, be, mu}, z); }

double rel_defect(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(lhs)); }

double residual_con2(cplx al, cplx be, cplx mu, cplx z) {
    const cplx lhs = fd(be, al, mu, one_minus(z));
    const cplx rhs = pi / std::sin(-pi * al)
                         * rgamma(0.5 * (1.0 - al + be - mu)) * rgamma(0.5 * (1.0 - al + be + mu))
                         * fd(al, be, mu, z)
                     + pi / std::sin(pi * al)
                           * rgamma(0.5 * (1.0 + al + be + mu)) * rgamma(0.5 * (1.0 + al + be - mu))
                           * pow_p(z, -al) * fd(-al, be, -mu, z);
    return rel_defect(lhs, rhs);
}

double residual_con2b(cplx al, cplx be, cplx mu, cplx z) {
    const cplx lhs = pow_p(one_minus(z), -be) * fd(-be, al, -mu, one_minus(z));
    const cplx rhs = pi / std::sin(-pi * al)
                         * rgamma(0.5 * (1.0 - al - be - mu)) * rgamma(0.5 * (1.0 - al - be + mu))
                         * fd(al, be, mu, z)
                     + pi / std::sin(pi * al)
                           * rgamma(0.5 * (1.0 + al - be - mu)) * rgamma(0.5 * (1.0 + al - be + mu))
                           * pow_p(z, -al) * fd(-al, be, -mu, z);
    return rel_defect(lhs, rhs);
}

double residual_reqdes(cplx al, cplx be, cplx mu, cplx z) {
    const cplx f1 = fd(be, al, mu, one_minus(z));
    const cplx f2 = pow_p(one_minus(z), -be) * fd(-be, al, -mu, one_minus(z));

    const cplx lhs1 = fd(al, be, mu, z);
    const cplx rhs1 = pi / std::sin(-pi * be)
                          * rgamma(0.5 * (1.0 + al - be - mu)) * rgamma(0.5 * (1.0 + al - be + mu)) * f1
                      + pi / std::sin(pi * be)
                            * rgamma(0.5 * (1.0 + al + be + mu)) * rgamma(0.5 * (1.0 + al + be - mu)) * f2;

    const cplx lhs2 = pow_p(z, -al) * fd(-al, be, mu, z);
    const cplx rhs2 = pi / std::sin(-pi * be)
                          * rgamma(0.5 * (1.0 - al - be - mu)) * rgamma(0.5 * (1.0 - al - be + mu)) * f1
                      + pi / std::sin(pi * be)
                            * rgamma(0.5 * (1.0 - al + be - mu)) * rgamma(0.5 * (1.0 - al + be + mu)) * f2;
    return std::max(rel_defect(lhs1, rhs1), rel_defect(lhs2, rhs2));
}

double residual_con_minus(cplx al, cplx be, cplx mu, cplx z, bool second) {
    const cplx w = 1.0 / z;
    cplx lhs, rhs;
    if (!second) {
        lhs = pow_p(neg(z), 0.5 * (-1.0 - al - be - mu)) * fd(mu, be, al, w);
        rhs = pi / std::sin(-pi * al)
                  * rgamma(0.5 * (1.0 - al - be + mu)) * rgamma(0.5 * (1.0 - al + be + mu))
                  * fd(al, be, mu, z)
              + pi / std::sin(pi * al)
                    * rgamma(0.5 * (1.0 + al - be + mu)) * rgamma(0.5 * (1.0 + al + be + mu))
                    * pow_p(neg(z), -al) * fd(-al, be, mu, z);
    } else {
        lhs = pow_p(neg(z), 0.5 * (-1.0 - al - be + mu)) * fd(-mu, be, al, w);
        rhs = pi / std::sin(-pi * al)
                  * rgamma(0.5 * (1.0 - al - be - mu)) * rgamma(0.5 * (1.0 - al + be - mu))
                  * fd(al, be, mu, z)
              + pi / std::sin(pi * al)
                    * rgamma(0.5 * (1.0 + al - be - mu)) * rgamma(0.5 * (1.0 + al + be - mu))
                    * pow_p(neg(z), -al) * fd(-al, be, mu, z);
    }
    return rel_defect(lhs, rhs);
}

double residual_popo(cplx al, cplx be, cplx mu, cplx z) {
    const cplx w = 1.0 / z;
    const cplx g1 = pow_p(neg(z), 0.5 * (-1.0 - al - be - mu)) * fd(mu, be, al, w);
    const cplx g2 = pow_p(neg(z), 0.5 * (-1.0 - al - be + mu)) * fd(-mu, be, al, w);

    const cplx lhs1 = fd(al, be, mu, z);
    const cplx rhs1 = pi / std::sin(-pi * mu)
                          * rgamma(0.5 * (1.0 + al + be - mu)) * rgamma(0.5 * (1.0 + al - be - mu)) * g1
                      + pi / std::sin(pi * mu)
                            * rgamma(0.5 * (1.0 + al + be + mu)) * rgamma(0.5 * (1.0 + al - be + mu)) * g2;

    const cplx lhs2 = pow_p(neg(z), -al) * fd(-al, be, mu, z);
    const cplx rhs2 = pi / std::sin(-pi * mu)
                          * rgamma(0.5 * (1.0 - al + be - mu)) * rgamma(0.5 * (1.0 - al - be - mu)) * g1
                      + pi / std::sin(pi * mu)
                            * rgamma(0.5 * (1.0 - al + be + mu)) * rgamma(0.5 * (1.0 - al - be + mu)) * g2;
    return std::max(rel_defect(lhs1, rhs1), rel_defect(lhs2, rhs2));
}

double residual_gegencon(cplx al, cplx lam, cplx w) {
    const cplx lhs = gegenbauer_Z(al, lam, w);
    const cplx rhs = std::sqrt(pi) * pow_p(2.0, -al + lam - 0.5) * rgamma(-al + lam + 0.5)
                         / std::sin(-pi * al) * gegenbauer_S(al, lam, w)
                     + std::sqrt(pi) * pow_p(2.0, al + lam - 0.5) * rgamma(al + lam + 0.5)
                           * bullet_pow(w, -al) / std::sin(pi * al) * gegenbauer_S(-al, lam, w);
    return rel_defect(lhs, rhs);
}

double residual_gegencon2(cplx al, cplx lam, cplx w) {
    const cplx lhs = gegenbauer_S(al, lam, neg(w));
    const cplx rhs = std::cos(pi * lam) / std::sin(-pi * al) * gegenbauer_S(al, lam, w)
                     + pi * pow_p(0.5 * one_minus(w), -al) * pow_p(0.5 * (w + 1.0), -al)
                           * rgamma(0.5 + al + lam) * rgamma(0.5 + al - lam)
                           / std::sin(pi * al) * gegenbauer_S(-al, lam, w);
    return rel_defect(lhs, rhs);
}

double residual_whipple(cplx al, cplx lam, cplx w) {
    const cplx expo = -0.25 - 0.5 * al - 0.5 * lam;
    const cplx pref = pow_p(w - 1.0, expo) * pow_p(w + 1.0, expo);
    const cplx warg = w / bullet_pow(w, 0.5);
    double res = rel_defect(gegenbauer_Z(al, lam, w), pref * gegenbauer_S(lam, al, warg));
    if (w.real() > 0.0)
        res = std::max(res, rel_defect(gegenbauer_S(al, lam, w), pref * gegenbauer_Z(lam, al, warg)));
    return res;
}

double residual_degen(cplx al, cplx be, int m, cplx z) {
    if (m < 1) throw UsageError("degeneration index must be a positive integer");
    const cplx dm = static_cast<double>(m);
    const cplx lhs = pochhammer(0.5 * (al + be - dm + 1.0), m)
                     * pochhammer(0.5 * (al - be - dm + 1.0), m) * fd(dm, al, be, z);
    const cplx rhs = pow_p(z, -dm) * fd(-dm, al, be, z);
    return rel_defect(lhs, rhs);
}

double residual_half_integer(int k, cplx lam, cplx z) {
    const cplx half_fac = gamma(cplx(0.5));        // plain normalization at index -1/2
    const cplx three_half_fac = gamma(cplx(1.5));  // plain normalization at index +1/2
    switch (k) {
        case 1:
            return rel_defect(std::cos(lam * z), half_fac * gegenbauer_S(-0.5, lam, std::cos(z)));
        case 2:
            return rel_defect(std::sin(lam * z) / (lam * std::sin(z)),
                              three_half_fac * gegenbauer_S(0.5, lam, std::cos(z)));
        case 3:
            return rel_defect(std::cosh(lam * z), half_fac * gegenbauer_S(-0.5, lam, std::cosh(z)));
        case 4:
            return rel_defect(std::sinh(lam * z) / (lam * std::sinh(z)),
                              three_half_fac * gegenbauer_S(0.5, lam, std::cosh(z)));
        case 5:
            return rel_defect(pow_p(2.0, lam) * std::exp(-lam * z),
                              gamma(1.0 + lam) * gegenbauer_Z(-0.5, lam, std::cosh(z)));
        case 6:
            return rel_defect(pow_p(2.0, lam) * std::exp(-lam * z) / std::sinh(z),
                              gamma(1.0 + lam) * gegenbauer_Z(0.5, lam, std::cosh(z)));
        case 7: {
            const int n = static_cast<int>(std::lround(lam.real()));
            const cplx theta = std::acos(z);
            return rel_defect(std::cos(static_cast<double>(n) * theta),
                              half_fac * gegenbauer_S(-0.5, static_cast<double>(n), z));
        }
        case 8: {
            const int n = static_cast<int>(std::lround(lam.real()));
            const cplx theta = std::acos(z);
            return rel_defect(std::sin(static_cast<double>(n + 1) * theta) / std::sin(theta),
                              static_cast<double>(n + 1) * three_half_fac
                                  * gegenbauer_S(0.5, static_cast<double>(n + 1), z));
        }
        default:
            throw UsageError("half-integer reduction index must be 1..8");
    }
}

}  // namespace

double connection_residual(Relation rel, const HypParams& p, cplx z) {
    switch (rel.kind) {
        case RelationKind::con2: return residual_con2(p.alpha, p.beta, p.mu, z);
        case RelationKind::con2b: return residual_con2b(p.alpha, p.beta, p.mu, z);
        case RelationKind::reqdes_pair: return residual_reqdes(p.alpha, p.beta, p.mu, z);
        case RelationKind::con_minus1: return residual_con_minus(p.alpha, p.beta, p.mu, z, false);
        case RelationKind::con_minus2: return residual_con_minus(p.alpha, p.beta, p.mu, z, true);
        case RelationKind::popo_pair: return residual_popo(p.alpha, p.beta, p.mu, z);
        case RelationKind::gegencon: return residual_gegencon(p.alpha, p.mu, z);
        case RelationKind::gegencon2: return residual_gegencon2(p.alpha, p.mu, z);
        case RelationKind::whipple: return residual_whipple(p.alpha, p.mu, z);
        case RelationKind::degen: return residual_degen(p.alpha, p.beta, rel.k, z);
        case RelationKind::half_integer: return residual_half_integer(rel.k, p.mu, z);
    }
    throw UsageError("unknown relation kind");
}

cplx kummer_expression(int row, int col, const HypParams& p, cplx z) {
    const cplx al = p.alpha, be = p.beta, mu = p.mu;
    const cplx zr = z / (z - 1.0);
    const cplx w = 1.0 / z;
    const cplx wr = w / (w - 1.0);
    const cplx v = one_minus(z);
    const cplx vr = 1.0 - w;  // equals 1 - 1/z
    switch (row * 10 + col) {
        case 10: return fd(al, be, mu, z);
        case 11: return pow_p(v, 0.5 * (-1.0 - al - be + mu)) * fd(al, -mu, -be, zr);
        case 12: return pow_p(v, 0.5 * (-1.0 - al - be - mu)) * fd(al, mu, be, zr);
        case 13: return pow_p(v, -be) * fd(al, -be, -mu, z);

        case 20: return pow_p(neg(z), -al) * fd(-al, be, -mu, z);
        case 21: return pow_p(neg(z), -al) * pow_p(v, 0.5 * (-1.0 + al - be - mu)) * fd(-al, mu, -be, zr);
        case 22: return pow_p(neg(z), -al) * pow_p(v, 0.5 * (-1.0 + al - be + mu)) * fd(-al, -mu, be, zr);
        case 23: return pow_p(neg(z), -al) * pow_p(v, -be) * fd(-al, -be, mu, z);

        case 30: return pow_p(neg(z), 0.5 * (-1.0 - al - be + mu)) * fd(-mu, be, al, w);
        case 31: return pow_p(neg(z), 0.5 * (-1.0 - al - be + mu))
                        * pow_p(one_minus(w), 0.5 * (-1.0 + mu - be + al)) * fd(-mu, -al, -be, wr);
        case 32: return pow_p(neg(z), 0.5 * (-1.0 - al - be + mu))
                        * pow_p(one_minus(w), 0.5 * (-1.0 + mu - be - al)) * fd(-mu, al, be, wr);
        case 33: return pow_p(neg(z), 0.5 * (-1.0 - al - be + mu)) * pow_p(one_minus(w), -be)
                        * fd(-mu, -be, -al, w);

        case 40: return pow_p(neg(z), 0.5 * (-1.0 - al - be - mu)) * fd(mu, be, al, w);
        case 41: return pow_p(neg(z), 0.5 * (-1.0 - al - be - mu))
                        * pow_p(one_minus(w), 0.5 * (-1.0 - mu - be + al)) * fd(mu, -al, -be, wr);
        case 42: return pow_p(neg(z), 0.5 * (-1.0 - al - be - mu))
                        * pow_p(one_minus(w), 0.5 * (-1.0 - mu - be - al)) * fd(mu, al, be, wr);
        case 43: return pow_p(neg(z), 0.5 * (-1.0 - al - be - mu)) * pow_p(one_minus(w), -be)
                        * fd(mu, -be, -al, w);

        case 50: return fd(be, al, mu, v);
        case 51: return pow_p(z, 0.5 * (-1.0 - al - be + mu)) * fd(be, -mu, -al, vr);
        case 52: return pow_p(z, 0.5 * (-1.0 - al - be - mu)) * fd(be, mu, al, vr);
        case 53: return pow_p(z, -al) * fd(be, -al, -mu, v);

        case 60: return pow_p(v, -be) * fd(-be, al, -mu, v);
        case 61: return pow_p(z, 0.5 * (-1.0 + be - al - mu)) * pow_p(v, -be) * fd(-be, mu, -al, vr);
        case 62: return pow_p(z, 0.5 * (-1.0 + be - al + mu)) * pow_p(v, -be) * fd(-be, -mu, al, vr);
        case 63: return pow_p(z, -al) * pow_p(v, -be) * fd(-be, -al, mu, v);
    }
    throw UsageError("Kummer table index out of range");
}

}  // namespace hypergreen
