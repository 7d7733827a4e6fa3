#include "hypergreen/hyp.hpp"

#include <limits>

#include "hypergreen/gammafn.hpp"

namespace hypergreen {
namespace {

constexpr int max_terms = 5000;
constexpr double tail_eps = 1e-17;
constexpr double route_radius = 0.75;
constexpr double degen_eps = 1e-8;
constexpr double perturb_eps = 1e-6;

cplx fd_eval(cplx al, cplx be, cplx mu, cplx z, int depth);

// Power series  sum_n (a)_n (b)_n / n!  rgamma(c+n) z^n.  Terms whose c+n
// sits at a gamma pole vanish, so nonpositive integer c needs no special
// casing. Once Re(c+n) >= 2 no pole lies ahead and a term ratio suffices.
cplx olver_series(cplx a, cplx b, cplx c, cplx z) {
    cplx sum = 0.0;
    cplx p = 1.0;
    int n = 0;
    while (c.real() + n < 2.0) {
        sum += p * rgamma(c + static_cast<double>(n));
        p *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) * z
             / static_cast<double>(n + 1);
        ++n;
        if (n >= max_terms) throw ConvergenceError("hypergeometric series stalled before pole region ended");
    }
    cplx term = p * rgamma(c + static_cast<double>(n));
    int quiet = 0;
    while (n < max_terms) {
        sum += term;
        if (std::abs(term) <= tail_eps * std::abs(sum)) {
            if (++quiet >= 3) return sum;
        } else {
            quiet = 0;
        }
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) * z
                / ((c + static_cast<double>(n)) * static_cast<double>(n + 1));
        ++n;
    }
    throw ConvergenceError("hypergeometric series did not converge");
}

cplx fd_direct(cplx al, cplx be, cplx mu, cplx z) {
    return olver_series(0.5 * (1.0 + al + be - mu), 0.5 * (1.0 + al + be + mu), 1.0 + al, z);
}

// Euler-Pfaff transform on the second Gauss parameter; valid everywhere the
// target argument stays inside the series disk and free of coefficient poles.
cplx fd_pfaff(cplx al, cplx be, cplx mu, cplx z) {
    cplx w = z / (z - 1.0);
    return pow_p(one_minus(z), 0.5 * (-1.0 - al - be - mu)) * fd_direct(al, mu, be, w);
}

// Two-term connection onto argument 1/z. Degenerates for integer mu; then
// both one-sided perturbations are averaged.
cplx fd_inverse_arg(cplx al, cplx be, cplx mu, cplx z, int depth) {
    if (std::abs(std::sin(pi * mu)) < degen_eps) {
        if (depth > 1) throw ConvergenceError("nested degenerate perturbation");
        return 0.5 * (fd_inverse_arg(al, be, mu + perturb_eps, z, depth + 1)
                      + fd_inverse_arg(al, be, mu - perturb_eps, z, depth + 1));
    }
    cplx w = 1.0 / z;
    cplx t1 = pi / std::sin(-pi * mu)
              * rgamma(0.5 * (1.0 + al + be - mu)) * rgamma(0.5 * (1.0 + al - be - mu))
              * pow_p(neg(z), 0.5 * (-1.0 - al - be - mu)) * fd_direct(mu, be, al, w);
    cplx t2 = pi / std::sin(pi * mu)
              * rgamma(0.5 * (1.0 + al + be + mu)) * rgamma(0.5 * (1.0 + al - be + mu))
              * pow_p(neg(z), 0.5 * (-1.0 - al - be + mu)) * fd_direct(-mu, be, al, w);
    return t1 + t2;
}

// Two-term connection onto argument 1-z. Degenerates for integer beta.
cplx fd_reflected_arg(cplx al, cplx be, cplx mu, cplx z, int depth) {
    if (std::abs(std::sin(pi * be)) < degen_eps) {
        if (depth > 1) throw ConvergenceError("nested degenerate perturbation");
        return 0.5 * (fd_reflected_arg(al, be + perturb_eps, mu, z, depth + 1)
                      + fd_reflected_arg(al, be - perturb_eps, mu, z, depth + 1));
    }
    cplx w = one_minus(z);
    cplx t1 = pi / std::sin(-pi * be)
              * rgamma(0.5 * (1.0 + al - be - mu)) * rgamma(0.5 * (1.0 + al - be + mu))
              * fd_direct(be, al, mu, w);
    cplx t2 = pi / std::sin(pi * be)
              * rgamma(0.5 * (1.0 + al + be + mu)) * rgamma(0.5 * (1.0 + al + be - mu))
              * pow_p(w, -be) * fd_direct(-be, al, -mu, w);
    return t1 + t2;
}

// Inverse-power expansion about z0 = 1/2, converging for |z - 1/2| > 1/2.
// Covers the crescent none of the rational maps pulls into the series disk.
cplx fd_midplane(cplx al, cplx be, cplx mu, cplx z, int depth) {
    if (std::abs(std::sin(pi * mu)) < degen_eps) {
        if (depth > 1) throw ConvergenceError("nested degenerate perturbation");
        return 0.5 * (fd_midplane(al, be, mu + perturb_eps, z, depth + 1)
                      + fd_midplane(al, be, mu - perturb_eps, z, depth + 1));
    }
    const cplx a = 0.5 * (1.0 + al + be - mu);
    const cplx b = 0.5 * (1.0 + al + be + mu);
    const cplx c = 1.0 + al;
    const cplx c0 = c - 0.5 * (a + b + 1.0);
    const cplx t = z - 0.5;
    cplx total = 0.0;
    for (int half = 0; half < 2; ++half) {
        const cplx s = half == 0 ? a : b;
        const cplx so = half == 0 ? b : a;
        cplx d2 = 0.0, d1 = 1.0, acc = 1.0, tm = 1.0;
        int quiet = 0;
        int m = 1;
        for (; m < max_terms; ++m) {
            const cplx sm = s + static_cast<double>(m);
            const cplx d = (-(sm - 1.0) * c0 * d1 + 0.25 * (sm - 2.0) * (sm - 1.0) * d2)
                           / (static_cast<double>(m) * (static_cast<double>(m) + s - so));
            tm /= t;
            const cplx term = d * tm;
            acc += term;
            if (std::abs(term) <= tail_eps * std::abs(acc)) {
                if (++quiet >= 3) break;
            } else {
                quiet = 0;
            }
            d2 = d1;
            d1 = d;
        }
        if (m >= max_terms) throw ConvergenceError("inverse-power expansion did not converge");
        total += gamma(so - s) * rgamma(so) * rgamma(c - s) * pow_p(neg(t), -s) * acc;
    }
    return total;
}

cplx fd_eval(cplx al, cplx be, cplx mu, cplx z, int depth) {
    const double inf = std::numeric_limits<double>::infinity();
    const double m_direct = std::abs(z);
    const double m_pfaff = z == cplx(1.0, 0.0) ? inf : std::abs(z / (z - 1.0));
    const double m_inverse = z == cplx(0.0, 0.0) ? inf : 1.0 / m_direct;
    const double m_reflect = std::abs(one_minus(z));

    int route = 0;
    double best = m_direct;
    if (m_pfaff < best) { best = m_pfaff; route = 1; }
    if (m_inverse < best) { best = m_inverse; route = 2; }
    if (m_reflect < best) { best = m_reflect; route = 3; }
    if (best > route_radius) route = 4;

    switch (route) {
        case 0: return fd_direct(al, be, mu, z);
        case 1: return fd_pfaff(al, be, mu, z);
        case 2: return fd_inverse_arg(al, be, mu, z, depth);
        case 3: return fd_reflected_arg(al, be, mu, z, depth);
        default: return fd_midplane(al, be, mu, z, depth);
    }
}

}  // namespace

cplx hyp2f1_reg(const HypParams& p, cplx z, BranchTag tag) {
    if (z.imag() == 0.0 && z.real() >= 1.0) {
        switch (tag) {
            case BranchTag::principal:
                throw CutError("argument on the branch cut [1, inf)");
            case BranchTag::above_cut:
                z = cplx(z.real(), +0.0);
                break;
            case BranchTag::below_cut:
                z = cplx(z.real(), -0.0);
                break;
        }
    }
    return fd_eval(p.alpha, p.beta, p.mu, z, 0);
}

cplx hyp2f1_reg_deriv(const HypParams& p, cplx z, BranchTag tag) {
    return p.a() * p.b() * hyp2f1_reg({p.alpha + 1.0, p.beta + 1.0, p.mu}, z, tag);
}

}  // namespace hypergreen
