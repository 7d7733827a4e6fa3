#include "hypergreen/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypergreen/gammafn.hpp"
#include "hypergreen/gegenbauer.hpp"
#include "hypergreen/hyp.hpp"

namespace hypergreen {
namespace {

constexpr double infd = std::numeric_limits<double>::infinity();
const cplx iu{0.0, 1.0};

cplx fd(cplx al, cplx be, cplx mu, cplx z) { return hyp2f1_reg({al, be, mu}, z); }

// Square root with the sign fixed to nonnegative real part (positive
// imaginary part on the imaginary axis).
cplx rsqrt(cplx z) {
    cplx s = std::sqrt(z);
    if (s.real() < 0.0 || (s.real() == 0.0 && s.imag() < 0.0)) s = -s;
    return s;
}

cplx gamma_quad(cplx al, cplx be, cplx mu) {
    return gamma(0.5 * (1.0 - al - be + mu)) * gamma(0.5 * (1.0 + al - be + mu))
           * gamma(0.5 * (1.0 - al + be + mu)) * gamma(0.5 * (1.0 + al + be + mu));
}

// ---- basis solutions in internal spectral parameters ----

cplx sol_Ps(cplx al, cplx lam, double r) {
    return pow_p(cplx(0.5 * std::sin(r)), al + 0.5) * gegenbauer_S(al, lam, std::cos(r));
}

cplx sol_Ph(cplx al, cplx lam, double r) {
    return pow_p(cplx(0.5 * std::sinh(r)), al + 0.5) * gegenbauer_S(al, lam, std::cosh(r));
}

cplx sol_Qh(cplx al, cplx lam, double r) {
    return pow_p(cplx(std::sinh(r)), al + 0.5) * pow_p(2.0, -lam)
           * gegenbauer_Z(al, lam, std::cosh(r));
}

cplx sol_P1s(cplx al, cplx be, cplx mu, double r) {
    const double s = std::sin(0.5 * r), c = std::cos(0.5 * r);
    return pow_p(cplx(s), al + 0.5) * pow_p(cplx(c), be + 0.5) * fd(al, be, mu, cplx(s * s));
}

cplx sol_P1h(cplx al, cplx be, cplx mu, double r) {
    const double s = std::sinh(0.5 * r), c = std::cosh(0.5 * r);
    return pow_p(cplx(s), al + 0.5) * pow_p(cplx(c), be + 0.5) * fd(al, be, mu, cplx(-s * s));
}

cplx sol_Q1h(cplx al, cplx be, cplx mu, double r) {
    const double s = std::sinh(0.5 * r), c = std::cosh(0.5 * r);
    return pow_p(cplx(s), -mu - be - 0.5) * pow_p(cplx(c), be + 0.5)
           * fd(mu, be, al, cplx(-1.0 / (s * s)));
}

cplx sol_p1ds(cplx al, cplx be, cplx mu, double r) {
    const cplx z1 = 0.5 * (1.0 - iu * std::sinh(r));
    const cplx z2 = 0.5 * (1.0 + iu * std::sinh(r));
    return pow_p(z1, 0.5 * al + 0.25) * pow_p(z2, 0.5 * be + 0.25) * fd(al, be, mu, z1);
}

// Recessive de Sitter solution; for r <= 0 the defining representation sits
// on a cut and the value is carried over by a two-term reflection whose
// integer-beta degeneration is averaged out.
cplx sol_Q1dS(cplx al, cplx be, cplx mu, double r, int depth = 0) {
    if (r > 0.0) {
        const double sh = std::sinh(r);
        const cplx zp = 0.5 * (iu + sh);
        const cplx zm = 0.5 * (-iu + sh);
        return pow_p(zp, -0.5 * be - 0.5 * mu - 0.25) * pow_p(zm, 0.5 * be + 0.25)
               * fd(mu, be, al, 2.0 / (1.0 - iu * sh));
    }
    if (std::abs(std::sin(pi * be)) < 1e-8) {
        if (depth > 0) throw ConvergenceError("nested degenerate perturbation");
        return 0.5 * (sol_Q1dS(al, be + 1e-6, mu, r, depth + 1)
                      + sol_Q1dS(al, be - 1e-6, mu, r, depth + 1));
    }
    const cplx c1 = std::exp(iu * pi * 0.5 * (-be - 0.5 * mu + 0.5))
                    * rgamma(0.5 * (1.0 - be + al + mu)) * rgamma(0.5 * (1.0 - be - al + mu));
    const cplx c2 = std::exp(iu * pi * 0.5 * (be - 0.5 * mu + 0.5))
                    * rgamma(0.5 * (1.0 + be + al + mu)) * rgamma(0.5 * (1.0 + be - al + mu));
    return iu * pi / std::sin(pi * be)
           * (c1 * sol_p1ds(be, al, mu, -r) - c2 * sol_p1ds(-be, al, mu, -r));
}

cplx sol_QdS(cplx al, cplx lam, double r) {
    return gamma(1.0 + 2.0 * lam) * rgamma(1.0 + lam) * pow_p(2.0, -2.0 * lam)
           * sol_Q1dS(al, al, 2.0 * lam, r);
}

cplx sol_p2h(cplx al, cplx be, cplx mu, double u) {
    const double e2u = std::exp(2.0 * u);
    return pow_p(cplx(e2u - 1.0), -0.5 * al) * pow_p(cplx(1.0 - std::exp(-2.0 * u)), -0.5 * be)
           * fd(al, be, mu, cplx(1.0 / (1.0 - e2u)));
}

cplx sol_q2h(cplx al, cplx be, cplx mu, double u) {
    const double e2u = std::exp(2.0 * u);
    return pow_p(cplx(e2u - 1.0), 0.5 * (1.0 + be + mu))
           * pow_p(cplx(1.0 - std::exp(-2.0 * u)), -0.5 * be) * fd(mu, be, al, cplx(1.0 - e2u));
}

cplx sol_p2ds(cplx al, cplx be, cplx mu, double u) {
    const double e2u = std::exp(2.0 * u);
    return pow_p(cplx(1.0 + e2u), -0.5 * al) * pow_p(cplx(1.0 + std::exp(-2.0 * u)), -0.5 * be)
           * fd(al, be, mu, cplx(1.0 / (1.0 + e2u)));
}

cplx sol_q2s(cplx al, cplx be, cplx mu, double u) {
    const double s = std::asinh(std::cos(u) / std::sin(u));
    return std::sqrt(cplx(2.0 * std::sin(u))) * sol_Q1dS(be, al, mu, s);
}

void check_domain(Family f, double x) {
    const FamilyDomain dom = family_domain(f);
    if (!(x > dom.a && x < dom.b)) throw DomainError("coordinate outside the family domain");
}

std::vector<Ray> essential_rays_raw(const FamilyParams& fp) {
    switch (fp.family) {
        case Family::GegS:
        case Family::H1S:
        case Family::H2S:
            return {};
        case Family::GegH:
        case Family::GegDS:
        case Family::H1H:
        case Family::H1DS:
            return {Ray{cplx(0.0), 1}};
        case Family::H2H:
            return {Ray{fp.p1, 1}};
        case Family::H2DS:
            return {Ray{fp.p1, 1}, Ray{neg(fp.p1), 1}};
    }
    return {};
}

// Closed-form eigenvalue list with the side conditions applied; no
// parameter-region gate, so the resolvent can reuse it anywhere.
std::vector<cplx> discrete_spectrum_raw(const FamilyParams& fp, double bound) {
    std::vector<cplx> out;
    const auto keep = [&](cplx e) {
        if (e.real() <= bound) out.push_back(e);
    };
    // Sphere-type branch: every index contributes until Re E passes the bound.
    const auto grow_branch = [&](cplx offset) {
        for (int n = 0; n < 1000000; ++n) {
            const cplx s = offset + (n + 0.5);
            const cplx e = s * s;
            if (s.real() >= 0.0 && e.real() > bound) break;
            keep(e);
        }
    };
    // Decaying branch: indices contribute only while Re(offset + k) < 0.
    const auto sink_branch = [&](cplx offset) {
        for (int n = 0;; ++n) {
            const cplx s = offset + (n + 0.5);
            if (s.real() >= 0.0) break;
            keep(-s * s);
        }
    };
    const cplx al = fp.p1, be = fp.p2;
    switch (fp.family) {
        case Family::GegS:
            grow_branch(al);
            break;
        case Family::GegH:
            sink_branch(al);
            break;
        case Family::GegDS:
            sink_branch(al);
            sink_branch(neg(al));
            break;
        case Family::H1S:
            grow_branch(0.5 * (al + be));
            break;
        case Family::H1H:
            sink_branch(0.5 * (al + be));
            sink_branch(0.5 * (al - be));
            break;
        case Family::H1DS:
            sink_branch(0.5 * (al + be));
            sink_branch(0.5 * (al - be));
            sink_branch(0.5 * (-al + be));
            sink_branch(0.5 * (-al - be));
            break;
        case Family::H2S: {
            const cplx tau = al, mu = be;
            for (int n = 0; n < 1000000; ++n) {
                const double k = n + 0.5;
                const cplx q = 2.0 * k + mu;
                const cplx w = k + 0.5 * mu;
                if (std::abs(q) < 1e-12) continue;
                const cplx e = -(tau * tau) / (q * q) + w * w;
                if (w.real() > std::abs(tau) + 1.0 && e.real() > bound) break;
                keep(e);
            }
            break;
        }
        case Family::H2H: {
            const cplx kap = al, mu = be;
            const int nmax = static_cast<int>(std::abs(kap) + std::abs(mu)) + 64;
            for (int n = 0; n < nmax; ++n) {
                const double k = n + 0.5;
                const cplx q = 2.0 * k + mu;
                if (std::abs(q) < 1e-12) continue;
                const cplx w = k + 0.5 * mu;
                if ((kap / q + w).real() >= 0.0) continue;
                keep(-(kap * kap) / (q * q) - w * w);
            }
            break;
        }
        case Family::H2DS: {
            const cplx kap = al, mu = be;
            const int nmax = static_cast<int>(std::abs(kap) + std::abs(mu)) + 64;
            for (int n = 0; n < nmax; ++n) {
                const double k = n + 0.5;
                const cplx qp = 2.0 * k + mu;
                if (std::abs(qp) >= 1e-12
                    && k + 0.5 * mu.real() + std::abs((kap / qp).real()) < 0.0)
                    keep(-(kap * kap) / (qp * qp) - (k + 0.5 * mu) * (k + 0.5 * mu));
                const cplx qm = 2.0 * k - mu;
                if (std::abs(qm) >= 1e-12
                    && k - 0.5 * mu.real() + std::abs((kap / qm).real()) < 0.0)
                    keep(-(kap * kap) / (qm * qm) - (k - 0.5 * mu) * (k - 0.5 * mu));
            }
            break;
        }
    }
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](cplx a, cplx b) { return std::abs(a - b) <= 1e-12; }),
              out.end());
    return out;
}

struct KernelPair {
    SolutionId left;
    SolutionId right;
};

KernelPair kernel_solutions(Family f) {
    switch (f) {
        case Family::GegS: return {SolutionId::Ps, SolutionId::Ps_mirror};
        case Family::GegH: return {SolutionId::Ph, SolutionId::Qh};
        case Family::GegDS: return {SolutionId::QdS_mirror, SolutionId::QdS};
        case Family::H1S: return {SolutionId::P1s, SolutionId::P1s_mirror};
        case Family::H1H: return {SolutionId::P1h, SolutionId::Q1h};
        case Family::H1DS: return {SolutionId::Q1dS_mirror, SolutionId::Q1dS};
        case Family::H2S: return {SolutionId::q2s, SolutionId::q2s_mirror};
        case Family::H2H: return {SolutionId::q2h, SolutionId::p2h};
        case Family::H2DS: return {SolutionId::p2dS_mirror, SolutionId::p2dS};
    }
    throw UsageError("unknown family");
}

cplx kernel_prefactor(const FamilyParams& fp, cplx z) {
    const InternalParams ip = internal_params(fp, z);
    const cplx al = ip.alpha, be = ip.beta, mu = ip.mu, lam = ip.lambda;
    switch (fp.family) {
        case Family::GegS: return gamma(al - lam + 0.5) * gamma(al + lam + 0.5);
        case Family::GegH: return std::sqrt(pi) * gamma(0.5 + al + lam);
        case Family::GegDS: return 0.5 * gamma(0.5 - al + lam) * gamma(0.5 + al + lam);
        case Family::H1S:
            return gamma(0.5 * (1.0 + al + be + mu)) * gamma(0.5 * (1.0 + al + be - mu));
        case Family::H1H:
            return gamma(0.5 * (1.0 + al + be + mu)) * gamma(0.5 * (1.0 + al - be + mu));
        case Family::H1DS: return gamma_quad(al, be, mu) / (2.0 * pi);
        case Family::H2S: return gamma_quad(al, be, mu) / (4.0 * pi);
        case Family::H2H:
            return 0.5 * gamma(0.5 * (1.0 + al + be + mu)) * gamma(0.5 * (1.0 + al - be + mu));
        case Family::H2DS:
            return 0.5 * gamma(0.5 * (1.0 + al + be + mu)) * gamma(0.5 * (1.0 + al + be - mu));
    }
    throw UsageError("unknown family");
}

}  // namespace

FamilyDomain family_domain(Family f) {
    switch (f) {
        case Family::GegS:
        case Family::H1S:
        case Family::H2S:
            return {0.0, pi};
        case Family::GegH:
        case Family::H1H:
        case Family::H2H:
            return {0.0, infd};
        case Family::GegDS:
        case Family::H1DS:
        case Family::H2DS:
            return {-infd, infd};
    }
    throw UsageError("unknown family");
}

InternalParams internal_params(const FamilyParams& fp, cplx z) {
    InternalParams ip{};
    switch (fp.family) {
        case Family::GegS:
            ip.alpha = fp.p1;
            ip.lambda = std::sqrt(z);
            break;
        case Family::GegH:
        case Family::GegDS:
            ip.alpha = fp.p1;
            ip.lambda = std::sqrt(neg(z));
            break;
        case Family::H1S:
            ip.alpha = fp.p1;
            ip.beta = fp.p2;
            ip.mu = 2.0 * std::sqrt(z);
            break;
        case Family::H1H:
        case Family::H1DS:
            ip.alpha = fp.p1;
            ip.beta = fp.p2;
            ip.mu = 2.0 * std::sqrt(neg(z));
            break;
        case Family::H2S:
            ip.delta = z;
            ip.mu = fp.p2;
            ip.alpha = std::sqrt(ip.delta - iu * fp.p1);
            ip.beta = std::sqrt(ip.delta + iu * fp.p1);
            break;
        case Family::H2H:
            ip.delta = neg(z);
            ip.mu = fp.p2;
            ip.alpha = rsqrt(ip.delta + fp.p1);
            ip.beta = std::sqrt(ip.delta - fp.p1);
            break;
        case Family::H2DS:
            ip.delta = neg(z);
            ip.mu = fp.p2;
            ip.alpha = rsqrt(ip.delta + fp.p1);
            ip.beta = rsqrt(ip.delta - fp.p1);
            break;
    }
    return ip;
}

cplx potential(const FamilyParams& fp, double x) {
    check_domain(fp.family, x);
    const cplx p1 = fp.p1, p2 = fp.p2;
    const cplx q1 = p1 * p1 - 0.25;
    const cplx q2 = p2 * p2 - 0.25;
    switch (fp.family) {
        case Family::GegS: return q1 / (std::sin(x) * std::sin(x));
        case Family::GegH: return q1 / (std::sinh(x) * std::sinh(x));
        case Family::GegDS: return -q1 / (std::cosh(x) * std::cosh(x));
        case Family::H1S: {
            const double s = std::sin(0.5 * x), c = std::cos(0.5 * x);
            return q1 / (4.0 * s * s) + q2 / (4.0 * c * c);
        }
        case Family::H1H: {
            const double s = std::sinh(0.5 * x), c = std::cosh(0.5 * x);
            return q1 / (4.0 * s * s) - q2 / (4.0 * c * c);
        }
        case Family::H1DS: {
            const double sh = std::sinh(x);
            return -q1 / (2.0 * (1.0 - iu * sh)) - q2 / (2.0 * (1.0 + iu * sh));
        }
        case Family::H2S: {
            const double s = std::sin(x);
            return p1 * std::cos(x) / s + (0.25 * p2 * p2 - 0.25) / (s * s);
        }
        case Family::H2H: {
            const double s = std::sinh(x);
            return p1 * std::cosh(x) / s + (0.25 * p2 * p2 - 0.25) / (s * s);
        }
        case Family::H2DS: {
            const double c = std::cosh(x);
            return p1 * std::sinh(x) / c - (0.25 * p2 * p2 - 0.25) / (c * c);
        }
    }
    throw UsageError("unknown family");
}

cplx solution(const FamilyParams& fp, SolutionId which, cplx z, double x) {
    check_domain(fp.family, x);
    const InternalParams ip = internal_params(fp, z);
    const cplx al = ip.alpha, be = ip.beta, mu = ip.mu, lam = ip.lambda;
    switch (fp.family) {
        case Family::GegS:
            if (which == SolutionId::Ps) return sol_Ps(al, lam, x);
            if (which == SolutionId::Ps_mirror) return sol_Ps(al, lam, pi - x);
            break;
        case Family::GegH:
            if (which == SolutionId::Ph) return sol_Ph(al, lam, x);
            if (which == SolutionId::Qh) return sol_Qh(al, lam, x);
            break;
        case Family::GegDS:
            if (which == SolutionId::QdS) return sol_QdS(al, lam, x);
            if (which == SolutionId::QdS_mirror) return sol_QdS(al, lam, -x);
            break;
        case Family::H1S:
            if (which == SolutionId::P1s) return sol_P1s(al, be, mu, x);
            if (which == SolutionId::P1s_mirror) return sol_P1s(be, al, mu, pi - x);
            break;
        case Family::H1H:
            if (which == SolutionId::P1h) return sol_P1h(al, be, mu, x);
            if (which == SolutionId::Q1h) return sol_Q1h(al, be, mu, x);
            break;
        case Family::H1DS:
            if (which == SolutionId::Q1dS) return sol_Q1dS(al, be, mu, x);
            if (which == SolutionId::Q1dS_mirror) return sol_Q1dS(be, al, mu, -x);
            break;
        case Family::H2S:
            if (which == SolutionId::q2s) return sol_q2s(al, be, mu, x);
            if (which == SolutionId::q2s_mirror) return sol_q2s(be, al, mu, pi - x);
            break;
        case Family::H2H:
            if (which == SolutionId::q2h) return sol_q2h(al, be, mu, x);
            if (which == SolutionId::p2h) return sol_p2h(al, be, mu, x);
            break;
        case Family::H2DS:
            if (which == SolutionId::p2dS) return sol_p2ds(al, be, mu, x);
            if (which == SolutionId::p2dS_mirror) return sol_p2ds(be, al, mu, -x);
            break;
    }
    throw DomainError("solution id does not belong to this family");
}

cplx wronskian_closed(const FamilyParams& fp, cplx z, PairKind pair) {
    const InternalParams ip = internal_params(fp, z);
    const cplx al = ip.alpha, be = ip.beta, mu = ip.mu, lam = ip.lambda;
    const bool kernel = pair == PairKind::kernel_pair;
    switch (fp.family) {
        case Family::GegS:
            if (kernel) return rgamma(al - lam + 0.5) * rgamma(al + lam + 0.5);
            return std::cos(pi * lam) / pi;
        case Family::GegH:
            if (kernel) return rgamma(0.5 + al + lam) / std::sqrt(pi);
            return std::sin(pi * al) / pi;
        case Family::GegDS:
            if (kernel) return 2.0 * rgamma(0.5 + al + lam) * rgamma(0.5 - al + lam);
            throw DomainError("family lists no second solution pair");
        case Family::H1S:
            if (kernel)
                return rgamma(0.5 * (1.0 + al + be + mu)) * rgamma(0.5 * (1.0 + al + be - mu));
            return std::sin(pi * al) / pi;
        case Family::H1H:
            if (kernel)
                return rgamma(0.5 * (1.0 + al + be + mu)) * rgamma(0.5 * (1.0 + al - be + mu));
            return std::sin(pi * al) / pi;
        case Family::H1DS:
            if (kernel) return 2.0 * pi / gamma_quad(al, be, mu);
            return (std::exp(iu * pi * 0.5 * mu) * std::cos(pi * be)
                    + std::exp(-iu * pi * 0.5 * mu) * std::cos(pi * al))
                   / pi;
        case Family::H2S:
            if (kernel) return 4.0 * pi / gamma_quad(al, be, mu);
            return 2.0
                   * (std::exp(iu * pi * 0.5 * mu) * std::cos(pi * al)
                      + std::exp(-iu * pi * 0.5 * mu) * std::cos(pi * be))
                   / pi;
        case Family::H2H:
            if (kernel)
                return -2.0 * rgamma(0.5 * (1.0 + al + be + mu))
                       * rgamma(0.5 * (1.0 + al - be + mu));
            return 2.0 * std::sin(pi * mu) / pi;
        case Family::H2DS:
            if (kernel)
                return 2.0 * rgamma(0.5 * (1.0 + al + be + mu))
                       * rgamma(0.5 * (1.0 + al + be - mu));
            throw DomainError("family lists no second solution pair");
    }
    throw UsageError("unknown family");
}

GreenKernel::GreenKernel(const FamilyParams& fp, cplx z) : fp_(fp), z_(z) {
    for (const Ray& ray : essential_rays_raw(fp)) {
        if (z.imag() == ray.offset.imag() && z.real() >= ray.offset.real())
            throw SpectrumError("spectral point lies on an essential ray");
    }
    for (cplx e : discrete_spectrum_raw(fp, z.real() + 1.0)) {
        if (std::abs(z - e) <= 1e-10)
            throw SpectrumError("spectral point lies at a discrete eigenvalue");
    }
    try {
        pref_ = kernel_prefactor(fp, z);
    } catch (const PoleError&) {
        throw SpectrumError("spectral point lies at a discrete eigenvalue");
    }
}

cplx GreenKernel::operator()(double x, double y) const {
    const double a = std::min(x, y), b = std::max(x, y);
    const KernelPair pair = kernel_solutions(fp_.family);
    return pref_ * solution(fp_, pair.left, z_, a) * solution(fp_, pair.right, z_, b);
}

GreenKernel green_kernel(const FamilyParams& fp, cplx z) { return GreenKernel(fp, z); }

SpectrumSpec spectrum(const FamilyParams& fp, double bound) {
    if (!param_region(fp).holomorphic)
        throw ParamRegionError("parameters outside the holomorphic region");
    SpectrumSpec spec;
    spec.discrete = discrete_spectrum_raw(fp, bound);
    spec.essential_rays = essential_rays_raw(fp);
    spec.exhaustive_below_bound = true;
    return spec;
}

RegionFlags param_region(const FamilyParams& fp) {
    const cplx a = fp.p1, b = fp.p2;
    const bool a_real = a.imag() == 0.0;
    const bool b_real = b.imag() == 0.0;
    switch (fp.family) {
        case Family::GegS:
        case Family::GegH:
            return {a.real() >= 1.0, a.real() > -1.0, a_real && a.real() > -1.0};
        case Family::GegDS:
            return {true, true, a_real};
        case Family::H1S:
            return {a.real() >= 1.0 && b.real() >= 1.0, a.real() > -1.0 && b.real() > -1.0,
                    a_real && b_real && a.real() > -1.0 && b.real() > -1.0};
        case Family::H1H:
            return {a.real() >= 1.0, a.real() > -1.0, a_real && a.real() > -1.0 && b_real};
        case Family::H1DS:
            return {true, true, b == std::conj(a)};
        case Family::H2S:
        case Family::H2H: {
            const bool excluded = a == cplx(0.0, 0.0) && b == cplx(-1.0, 0.0);
            return {b.real() >= 2.0, b.real() > -2.0 && !excluded,
                    a_real && b_real && b.real() > -2.0};
        }
        case Family::H2DS:
            return {true, true, a_real && b_real};
    }
    throw UsageError("unknown family");
}

EndpointClass endpoint_class(const FamilyParams& fp, int end) {
    if (end != 0 && end != 1) throw UsageError("endpoint index must be 0 or 1");
    const cplx a = fp.p1, b = fp.p2;
    switch (fp.family) {
        case Family::GegS: return {EndpointKind::Bessel, a};
        case Family::GegH:
            return end == 0 ? EndpointClass{EndpointKind::Bessel, a}
                            : EndpointClass{EndpointKind::ShortRange};
        case Family::GegDS: return {EndpointKind::ShortRange};
        case Family::H1S:
            return end == 0 ? EndpointClass{EndpointKind::Bessel, a}
                            : EndpointClass{EndpointKind::Bessel, b};
        case Family::H1H:
            return end == 0 ? EndpointClass{EndpointKind::Bessel, a}
                            : EndpointClass{EndpointKind::ShortRange};
        case Family::H1DS: return {EndpointKind::ShortRange};
        case Family::H2S:
            return {EndpointKind::Whittaker, 0.5 * b, end == 0 ? neg(a) : a};
        case Family::H2H:
            return end == 0 ? EndpointClass{EndpointKind::Whittaker, 0.5 * b, neg(a)}
                            : EndpointClass{EndpointKind::ShortRange};
        case Family::H2DS:
            return {EndpointKind::ShiftedShortRange, 0.0, end == 0 ? neg(a) : a};
    }
    throw UsageError("unknown family");
}

cplx elementary_kernel(ElementaryCase which, double k, double x, double y) {
    if (!(k > 0.0)) throw DomainError("wave number must be positive");
    const double a = std::min(x, y), b = std::max(x, y);
    switch (which) {
        case ElementaryCase::DD:
        case ElementaryCase::ND:
        case ElementaryCase::DN:
        case ElementaryCase::NN: {
            if (!(a > 0.0 && b < pi)) throw DomainError("coordinates outside (0, pi)");
            switch (which) {
                case ElementaryCase::DD:
                    return std::sinh(k * a) * std::sinh(k * (pi - b)) / (k * std::sinh(pi * k));
                case ElementaryCase::ND:
                    return std::cosh(k * a) * std::sinh(k * (pi - b)) / (k * std::cosh(pi * k));
                case ElementaryCase::DN:
                    return std::sinh(k * a) * std::cosh(k * (pi - b)) / (k * std::cosh(pi * k));
                default:
                    return std::cosh(k * a) * std::cosh(k * (pi - b)) / (k * std::sinh(pi * k));
            }
        }
        case ElementaryCase::HalfD:
            if (!(a > 0.0)) throw DomainError("coordinates outside (0, inf)");
            return std::sinh(k * a) * std::exp(-k * b) / k;
        case ElementaryCase::HalfN:
            if (!(a > 0.0)) throw DomainError("coordinates outside (0, inf)");
            return std::cosh(k * a) * std::exp(-k * b) / k;
        case ElementaryCase::Line:
            return std::exp(-k * (b - a)) / (2.0 * k);
    }
    throw UsageError("unknown elementary case");
}

double degenerate_identity_residual(Family family, cplx c, const Sample& s) {
    if (family != Family::H2S && family != Family::H2H)
        throw UsageError("kernel coincidence applies to the coupled sphere and hyperbolic families");
    if (c == cplx(0.0, 0.0))
        throw DegenerateParameterError("coupling must be nonzero for the coincidence");
    const GreenKernel plus = green_kernel({family, c, cplx(1.0)}, s.z);
    const GreenKernel minus = green_kernel({family, c, cplx(-1.0)}, s.z);
    const cplx gp = plus(s.x, s.y);
    const cplx gm = minus(s.x, s.y);
    return std::abs(gp - gm) / (1.0 + std::abs(gp));
}

}  // namespace hypergreen
